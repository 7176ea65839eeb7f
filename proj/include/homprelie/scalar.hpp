#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "homprelie/errors.hpp"

namespace homprelie {

using Rational = boost::multiprecision::cpp_rational;

/// Ground field descriptor: the rationals or a prime field F_p.
class Field {
public:
    enum class Kind { rationals, prime };

    static Field rationals() { return Field(Kind::rationals, 0); }
    static Field prime(std::uint64_t p);

    Kind kind() const { return kind_; }
    std::uint64_t p() const { return p_; }
    bool is_rational() const { return kind_ == Kind::rationals; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    /// "Q" or "F_p" with the concrete prime.
    std::string name() const;

private:
    Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Exact field element: a reduced rational with unbounded magnitude, or a
/// residue in [0, p). All arithmetic is exact; there is no floating point
/// anywhere in the library.
class Scalar {
public:
    Scalar() : field_(Field::rationals()) {}

    static Scalar zero(const Field& f) { return from_int(0, f); }
    static Scalar one(const Field& f) { return from_int(1, f); }
    static Scalar from_int(long long v, const Field& f);
    static Scalar rational(const Rational& r) {
        Scalar s;
        s.rat_ = r;
        return s;
    }
    static Scalar residue(std::uint64_t v, const Field& f);

    /// Parses "3", "-7/2" over Q, or an integer residue string over F_p
    /// (negative residues are accepted and canonicalized into [0, p)).
    static Scalar parse(const std::string& text, const Field& f);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical string: reduced "n" / "n/d" over Q, residue in [0, p) over F_p.
    std::string str() const;

    const Rational& rational_value() const { return rat_; }
    std::uint64_t residue_value() const { return res_; }

private:
    void require_same_field(const Scalar& o) const;

    Field field_;
    Rational rat_;           // active over Q
    std::uint64_t res_ = 0;  // active over F_p
};

} // namespace homprelie
