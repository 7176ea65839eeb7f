#include "homprelie/linalg.hpp"

#include <algorithm>

namespace homprelie {

Vec vec_zero(std::size_t n, const Field& f) {
    return Vec(n, Scalar::zero(f));
}

Vec vec_unit(std::size_t n, std::size_t i, const Field& f) {
    Vec v = vec_zero(n, f);
    v[i] = Scalar::one(f);
    return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ParseError("vector length mismatch");
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ParseError("vector length mismatch");
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec r(v);
    for (auto& x : r) x *= c;
    return r;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), entries_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, const Field& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols, const Field& f) {
    Matrix m(rows.size(), cols, f);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows, const Field& f) {
    Matrix m(rows, cols.size(), f);
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
}

Vec Matrix::row(std::size_t r) const {
    Vec v;
    v.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v.push_back(at(r, c));
    return v;
}

Vec Matrix::column(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
    if (v.size() != cols_) throw ParseError("row length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

void Matrix::set_column(std::size_t c, const Vec& v) {
    if (v.size() != rows_) throw ParseError("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ParseError("matrix shape mismatch in +");
    Matrix m(*this);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] += o.entries_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ParseError("matrix shape mismatch in -");
    Matrix m(*this);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] -= o.entries_[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw ParseError("matrix shape mismatch in *");
    Matrix m(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                m.at(i, j) += a * o.at(k, j);
        }
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(*this);
    for (auto& e : m.entries_) e = -e;
    return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix m(*this);
    for (auto& e : m.entries_) e *= c;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m.at(c, r) = at(r, c);
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    return entries_ == o.entries_;
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw ParseError("vector length mismatch in apply");
    Vec r = vec_zero(rows_, field_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i)
            r[i] += at(i, c) * v[c];
    }
    return r;
}

std::size_t Matrix::rank() const {
    return rref(*this).second.size();
}

Matrix Matrix::kronecker(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw InternalError("mixed fields in kronecker");
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return m;
}

std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& input) {
    Matrix m(input);
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m.at(sel, c), m.at(pivot_row, c));
        Scalar inv = m.at(pivot_row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m.at(pivot_row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || m.at(r, col).is_zero()) continue;
            Scalar factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m.at(r, c) -= factor * m.at(pivot_row, c);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return {m, pivots};
}

Subspace Subspace::zero(std::size_t ambient_dim, const Field& f) {
    return span(ambient_dim, {}, f);
}

Subspace Subspace::full(std::size_t ambient_dim, const Field& f) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ambient_dim; ++i) rows.push_back(vec_unit(ambient_dim, i, f));
    return span(ambient_dim, rows, f);
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors, const Field& f) {
    for (const auto& v : vectors)
        if (v.size() != ambient_dim) throw ParseError("spanning vector has wrong length");
    auto [reduced, pivots] = rref(Matrix::from_rows(vectors, ambient_dim, f));
    Subspace s;
    s.ambient_dim_ = ambient_dim;
    s.pivots_ = pivots;
    s.basis_ = Matrix(pivots.size(), ambient_dim, f);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        s.basis_.set_row(r, reduced.row(r));
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_dim_) throw ParseError("vector length mismatch in reduce");
    Vec r(v);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Scalar& c = r[pivots_[i]];
        if (c.is_zero()) continue;
        r = vec_sub(r, vec_scale(c, basis_.row(i)));
    }
    return r;
}

bool Subspace::contains(const Vec& v) const {
    return vec_is_zero(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_) return false;
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_dim_ == o.ambient_dim_ && basis_ == o.basis_;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (!contains(v)) return std::nullopt;
    Vec coords;
    coords.reserve(dim());
    for (std::size_t i = 0; i < pivots_.size(); ++i) coords.push_back(v[pivots_[i]]);
    return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_) throw ParseError("ambient dimension mismatch in sum");
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < dim(); ++r) rows.push_back(basis_.row(r));
    for (std::size_t r = 0; r < other.dim(); ++r) rows.push_back(other.basis_.row(r));
    return span(ambient_dim_, rows, field());
}

std::pair<Subspace, Subspace> kernel_image(const Matrix& m) {
    auto [reduced, pivots] = rref(m);
    const Field& f = m.field();

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<Vec> kernel_rows;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v = vec_zero(m.cols(), f);
        v[free_col] = Scalar::one(f);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -reduced.at(r, free_col);
        kernel_rows.push_back(std::move(v));
    }
    Subspace kernel = Subspace::span(m.cols(), kernel_rows, f);

    std::vector<Vec> image_cols;
    for (std::size_t c = 0; c < m.cols(); ++c) image_cols.push_back(m.column(c));
    Subspace image = Subspace::span(m.rows(), image_cols, f);

    if (kernel.dim() + image.dim() != m.cols())
        throw InternalError("rank-nullity violated in kernel_image");
    return {kernel, image};
}

std::optional<Matrix> solve_columns(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ParseError("right-hand side row count mismatch");
    const Field& f = a.field();
    Matrix augmented(a.rows(), a.cols() + b.cols(), f);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) augmented.at(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) augmented.at(r, a.cols() + c) = b.at(r, c);
    }
    auto [reduced, pivots] = rref(augmented);
    std::size_t rank = 0;
    for (auto p : pivots) {
        if (p >= a.cols()) return std::nullopt;  // inconsistent system
        ++rank;
    }
    // rows below rank must have zero right-hand side
    for (std::size_t r = rank; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (!reduced.at(r, a.cols() + c).is_zero()) return std::nullopt;

    Matrix x(a.cols(), b.cols(), f);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t c = 0; c < b.cols(); ++c)
            x.at(pivots[i], c) = reduced.at(i, a.cols() + c);
    return x;
}

Vec tensor_of(const Vec& u, const Vec& v) {
    Vec t;
    if (u.empty() || v.empty()) return t;
    t = vec_zero(u.size() * v.size(), u[0].field());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            t[tensor_index(i, j, v.size())] = u[i] * v[j];
    }
    return t;
}

QuotientSpace::QuotientSpace(std::size_t ambient_dim, Subspace denominator)
    : ambient_dim_(ambient_dim), denom_(std::move(denominator)) {
    if (denom_.ambient_dim() != ambient_dim_)
        throw ParseError("denominator ambient dimension mismatch");
    const Field& f = denom_.field();

    std::vector<bool> is_pivot(ambient_dim_, false);
    for (auto p : denom_.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < ambient_dim_; ++i)
        if (!is_pivot[i]) reps.push_back(i);

    const std::size_t q = reps.size();
    lift_ = Matrix(ambient_dim_, q, f);
    for (std::size_t j = 0; j < q; ++j) lift_.at(reps[j], j) = Scalar::one(f);

    project_ = Matrix(q, ambient_dim_, f);
    for (std::size_t i = 0; i < ambient_dim_; ++i) {
        Vec r = denom_.reduce(vec_unit(ambient_dim_, i, f));
        for (std::size_t j = 0; j < q; ++j) project_.at(j, i) = r[reps[j]];
    }
}

QuotientSpace quotient_space(std::size_t ambient_dim, const Subspace& denom) {
    return QuotientSpace(ambient_dim, denom);
}

std::size_t tensor_index(std::size_t i, std::size_t j, std::size_t dim_second) {
    if (j >= dim_second) throw ParseError("tensor index out of range");
    return i * dim_second + j;
}

std::pair<std::size_t, std::size_t> tensor_unindex(std::size_t flat, std::size_t dim_second) {
    if (dim_second == 0) throw ParseError("tensor factor of dimension zero");
    return {flat / dim_second, flat % dim_second};
}

std::size_t tensor_index_multi(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims) {
    if (idx.size() != dims.size()) throw ParseError("tensor index arity mismatch");
    std::size_t flat = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= dims[k]) throw ParseError("tensor index out of range");
        flat = flat * dims[k] + idx[k];
    }
    return flat;
}

} // namespace homprelie
