#include "homprelie/scalar.hpp"

#include <cctype>

namespace homprelie {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime(p)) throw ParseError("field modulus " + std::to_string(p) + " is not prime");
    if (p >= (1ull << 31)) throw ParseError("field modulus too large (must be < 2^31)");
    return Field(Kind::prime, p);
}

std::string Field::name() const {
    return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

namespace {

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw CheckError("division by zero in F_" + std::to_string(p));
    // extended Euclid on (a, p)
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw InternalError("non-invertible residue in a prime field");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

Scalar Scalar::from_int(long long v, const Field& f) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational()) {
        s.rat_ = Rational(v);
    } else {
        long long m = v % static_cast<long long>(f.p());
        if (m < 0) m += static_cast<long long>(f.p());
        s.res_ = static_cast<std::uint64_t>(m);
    }
    return s;
}

Scalar Scalar::residue(std::uint64_t v, const Field& f) {
    if (f.is_rational()) throw InternalError("residue constructor used over Q");
    Scalar s;
    s.field_ = f;
    s.res_ = v % f.p();
    return s;
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
    auto is_integer = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };

    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer(text)) throw ParseError("invalid scalar '" + text + "'");
        if (f.is_rational()) return Scalar::rational(Rational(boost::multiprecision::cpp_int(text)));
        boost::multiprecision::cpp_int n(text);
        boost::multiprecision::cpp_int p(f.p());
        boost::multiprecision::cpp_int m = n % p;
        if (m < 0) m += p;
        return Scalar::residue(m.convert_to<std::uint64_t>(), f);
    }

    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den)) throw ParseError("invalid scalar '" + text + "'");
    boost::multiprecision::cpp_int n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in scalar '" + text + "'");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (f.is_rational()) return Scalar::rational(Rational(n, d));
    // fractional residue: n * d^{-1} mod p
    Scalar sn = Scalar::parse(num, f);
    Scalar sd = Scalar::parse(den, f);
    return sn / sd;
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? rat_.is_zero() : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw InternalError("mixed-field scalar arithmetic (" + field_.name() + " vs " + o.field_.name() + ")");
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.is_rational())
        s.rat_ = rat_ + o.rat_;
    else
        s.res_ = (res_ + o.res_) % field_.p();
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.is_rational())
        s.rat_ = rat_ - o.rat_;
    else
        s.res_ = (res_ + field_.p() - o.res_) % field_.p();
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.is_rational())
        s.rat_ = rat_ * o.rat_;
    else
        s.res_ = mod_mul(res_, o.res_, field_.p());
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.field_ = field_;
    if (field_.is_rational())
        s.rat_ = -rat_;
    else
        s.res_ = res_ == 0 ? 0 : field_.p() - res_;
    return s;
}

Scalar Scalar::inverse() const {
    Scalar s;
    s.field_ = field_;
    if (field_.is_rational()) {
        if (rat_.is_zero()) throw CheckError("division by zero over Q");
        s.rat_ = 1 / rat_;
    } else {
        s.res_ = mod_inverse(res_, field_.p());
    }
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    require_same_field(o);
    return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
    if (!field_.is_rational()) return std::to_string(res_);
    return rat_.str();
}

} // namespace homprelie
