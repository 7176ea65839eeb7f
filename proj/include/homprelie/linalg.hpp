#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "homprelie/scalar.hpp"

namespace homprelie {

using Vec = std::vector<Scalar>;

Vec vec_zero(std::size_t n, const Field& f);
Vec vec_unit(std::size_t n, std::size_t i, const Field& f);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
bool vec_is_zero(const Vec& v);

/// Dense row-major matrix over one exact field. Linear maps act on column
/// coordinates: the image of basis vector e_j is column j.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), field_(Field::rationals()) {}
    Matrix(std::size_t rows, std::size_t cols, const Field& f);

    static Matrix identity(std::size_t n, const Field& f);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols, const Field& f);
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows, const Field& f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec column(std::size_t c) const;
    void set_row(std::size_t r, const Vec& v);
    void set_column(std::size_t c, const Vec& v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    /// Matrix applied to a column vector of length cols().
    Vec apply(const Vec& v) const;

    std::size_t rank() const;

    /// Kronecker product under left-major tensor indexing:
    /// (A (x) B)(e_i (x) e_j) = A e_i (x) B e_j.
    static Matrix kronecker(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> entries_;
};

/// Reduced row-echelon form and its pivot columns. Deterministic: scans for
/// the first nonzero pivot top-down, normalizes pivots to 1, clears columns.
std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m);

/// Canonical subspace of K^n: basis rows in reduced row-echelon form with
/// strictly increasing pivots, so equal subspaces have equal bases.
class Subspace {
public:
    Subspace() : ambient_dim_(0) {}

    static Subspace zero(std::size_t ambient_dim, const Field& f);
    static Subspace full(std::size_t ambient_dim, const Field& f);
    /// Canonicalizes an arbitrary spanning set.
    static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors, const Field& f);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.rows(); }
    const Field& field() const { return basis_.field(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    /// v minus its projection onto the pivot coordinates; zero iff v lies in
    /// the subspace.
    Vec reduce(const Vec& v) const;

    /// Coordinates of v in the canonical basis, or nullopt when v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;

    Subspace sum(const Subspace& other) const;

private:
    std::size_t ambient_dim_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Kernel (in domain coordinates) and image (in codomain coordinates) of a
/// linear map; dim kernel + dim image = cols by rank-nullity.
std::pair<Subspace, Subspace> kernel_image(const Matrix& m);

/// Particular solutions X of A X = B with zero non-pivot coordinates, chosen
/// by the first-pivot rule of the echelon form; nullopt when some column of B
/// is outside the image of A.
std::optional<Matrix> solve_columns(const Matrix& a, const Matrix& b);

/// Flattened outer product u (x) v in left-major tensor coordinates.
Vec tensor_of(const Vec& u, const Vec& v);

/// Quotient of K^n by a canonical subspace. The lift picks the non-pivot
/// coordinates of the denominator as representatives, so project*lift = I and
/// project annihilates exactly the denominator.
class QuotientSpace {
public:
    QuotientSpace() : ambient_dim_(0) {}
    QuotientSpace(std::size_t ambient_dim, Subspace denominator);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return project_.rows(); }
    const Subspace& denominator() const { return denom_; }
    const Matrix& project() const { return project_; }
    const Matrix& lift() const { return lift_; }

    Vec project_vec(const Vec& ambient) const { return project_.apply(ambient); }
    Vec lift_vec(const Vec& quotient) const { return lift_.apply(quotient); }

private:
    std::size_t ambient_dim_;
    Subspace denom_;
    Matrix project_;
    Matrix lift_;
};

QuotientSpace quotient_space(std::size_t ambient_dim, const Subspace& denom);

/// Flat index of e_i (x) e_j in the left-major tensor basis.
std::size_t tensor_index(std::size_t i, std::size_t j, std::size_t dim_second);
std::pair<std::size_t, std::size_t> tensor_unindex(std::size_t flat, std::size_t dim_second);

/// Left-associative flat index for M (x) L^{(x) n}: the first factor ranges
/// over dims[0], then each further factor refines by dims[k].
std::size_t tensor_index_multi(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims);

} // namespace homprelie
