#include <doctest.h>

#include <random>

#include "homprelie/linalg.hpp"
#include "oracle.hpp"

using namespace homprelie;

namespace {

Matrix matrix_of(const std::vector<std::vector<long long>>& rows, const Field& f) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), f);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.at(r, c) = Scalar::from_int(rows[r][c], f);
    return m;
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, const Field& f) {
    Matrix m(rows, cols, f);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = Scalar::from_int(static_cast<long long>(rng() % 7) - 3, f);
    return m;
}

} // namespace

TEST_SUITE("exactlin") {

TEST_CASE("rref of the identity is itself") {
    Field q = Field::rationals();
    auto [r, pivots] = rref(Matrix::identity(2, q));
    CHECK(r == Matrix::identity(2, q));
    CHECK(pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref of zero has no pivots") {
    Field q = Field::rationals();
    auto [r, pivots] = rref(Matrix(3, 3, q));
    CHECK(r.is_zero());
    CHECK(pivots.empty());
}

TEST_CASE("rref matches hand row-reduction") {
    // [[2,4],[1,2]]: r0 /= 2 -> [1,2]; r1 -= r0 -> [0,0]
    Field q = Field::rationals();
    auto [r, pivots] = rref(matrix_of({{2, 4}, {1, 2}}, q));
    CHECK(r == matrix_of({{1, 2}, {0, 0}}, q));
    CHECK(pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel and image of identity and zero maps") {
    Field q = Field::rationals();
    auto [k1, im1] = kernel_image(Matrix::identity(4, q));
    CHECK(k1.dim() == 0);
    CHECK(im1.dim() == 4);
    auto [k2, im2] = kernel_image(Matrix(3, 5, q));
    CHECK(k2.dim() == 5);
    CHECK(im2.dim() == 0);
}

TEST_CASE("kernel and image of the two-dimensional multiplication map") {
    // columns (i,j) of e_i e_j for b2b1 = b2, b2b2 = b1, other products zero:
    // col(0,0) = 0, col(0,1) = 0, col(1,0) = b2, col(1,1) = b1
    Field q = Field::rationals();
    Matrix mu = matrix_of({{0, 0, 0, 1}, {0, 0, 1, 0}}, q);
    auto [kernel, image] = kernel_image(mu);
    CHECK(kernel.dim() == 2);
    CHECK(image.dim() == 2);
    // independent elimination confirms the rank
    oracle::FMat om{
        {oracle::Frac(0), oracle::Frac(0), oracle::Frac(0), oracle::Frac(1)},
        {oracle::Frac(0), oracle::Frac(0), oracle::Frac(1), oracle::Frac(0)}};
    CHECK(oracle::rank(om) == 2);
    CHECK(oracle::kernel_dim(om) == 2);
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937 rng(7);
    for (const Field& f : {Field::rationals(), Field::prime(3)}) {
        for (int iter = 0; iter < 40; ++iter) {
            std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
            Matrix m = random_matrix(rng, rows, cols, f);
            auto [kernel, image] = kernel_image(m);
            CHECK(kernel.dim() + image.dim() == cols);
            for (std::size_t r = 0; r < kernel.dim(); ++r)
                CHECK(vec_is_zero(m.apply(kernel.basis_vector(r))));
            for (std::size_t c = 0; c < cols; ++c)
                CHECK(image.contains(m.column(c)));
        }
    }
}

TEST_CASE("subspace canonical form is idempotent") {
    std::mt19937 rng(11);
    Field q = Field::rationals();
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t ambient = 2 + rng() % 4;
        std::vector<Vec> vectors;
        for (std::size_t i = 0; i < 1 + rng() % 4; ++i)
            vectors.push_back(random_matrix(rng, 1, ambient, q).row(0));
        Subspace s = Subspace::span(ambient, vectors, q);
        std::vector<Vec> again;
        // feed the canonical rows back in scrambled order with scalings
        for (std::size_t r = s.dim(); r-- > 0;)
            again.push_back(vec_scale(Scalar::from_int(3, q), s.basis_vector(r)));
        Subspace t = Subspace::span(ambient, again, q);
        CHECK(s == t);
    }
}

TEST_CASE("quotient space examples") {
    Field q = Field::rationals();
    QuotientSpace trivial = quotient_space(4, Subspace::zero(4, q));
    CHECK(trivial.dim() == 4);
    CHECK(trivial.project() == Matrix::identity(4, q));
    CHECK(trivial.lift() == Matrix::identity(4, q));

    QuotientSpace none = quotient_space(2, Subspace::full(2, q));
    CHECK(none.dim() == 0);

    Subspace denom = Subspace::span(4, {vec_unit(4, 0, q), vec_unit(4, 1, q)}, q);
    QuotientSpace half = quotient_space(4, denom);
    CHECK(half.dim() == 2);
    CHECK(half.lift().column(0) == vec_unit(4, 2, q));
    CHECK(half.lift().column(1) == vec_unit(4, 3, q));
}

TEST_CASE("quotient space invariants on random denominators") {
    std::mt19937 rng(13);
    Field q = Field::rationals();
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t ambient = 1 + rng() % 5;
        std::vector<Vec> vectors;
        for (std::size_t i = 0; i < rng() % 4; ++i)
            vectors.push_back(random_matrix(rng, 1, ambient, q).row(0));
        Subspace denom = Subspace::span(ambient, vectors, q);
        QuotientSpace qs = quotient_space(ambient, denom);
        CHECK(qs.dim() == ambient - denom.dim());
        CHECK(qs.project() * qs.lift() == Matrix::identity(qs.dim(), q));
        // project kills exactly the denominator
        for (std::size_t r = 0; r < denom.dim(); ++r)
            CHECK(vec_is_zero(qs.project_vec(denom.basis_vector(r))));
        // lift o project fixes representatives modulo the denominator
        Matrix residual = qs.project() * (qs.lift() * qs.project() - Matrix::identity(ambient, q));
        CHECK(residual.is_zero());
        for (std::size_t i = 0; i < ambient; ++i) {
            Vec diff = vec_sub(qs.lift_vec(qs.project_vec(vec_unit(ambient, i, q))), vec_unit(ambient, i, q));
            CHECK(denom.contains(diff));
        }
    }
}

TEST_CASE("tensor index bookkeeping") {
    CHECK(tensor_index(0, 0, 2) == 0);
    CHECK(tensor_index(1, 1, 2) == 3);
    CHECK(tensor_index(2, 1, 3) == 7);
    CHECK_THROWS_AS(tensor_index(0, 5, 3), ParseError);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            auto [bi, bj] = tensor_unindex(tensor_index(i, j, 3), 3);
            CHECK(bi == i);
            CHECK(bj == j);
        }
    CHECK(tensor_index_multi({1, 0, 2}, {2, 3, 3}) == (1 * 3 + 0) * 3 + 2);
    CHECK_THROWS_AS(tensor_index_multi({3, 0}, {2, 2}), ParseError);
}

TEST_CASE("solve_columns finds particular solutions") {
    Field q = Field::rationals();
    Matrix a = matrix_of({{1, 2, 0}, {0, 0, 1}}, q);
    auto x = solve_columns(a, Matrix::identity(2, q));
    REQUIRE(x.has_value());
    CHECK(a * *x == Matrix::identity(2, q));
    // inconsistent system: target outside of the column space
    Matrix singular = matrix_of({{1, 0}, {1, 0}}, q);
    Matrix target = matrix_of({{1}, {0}}, q);
    CHECK_FALSE(solve_columns(singular, target).has_value());
}

TEST_CASE("kronecker product follows the left-major convention") {
    Field q = Field::rationals();
    Matrix a = matrix_of({{0, 1}, {2, 0}}, q);
    Matrix b = matrix_of({{3, 0}, {0, 5}}, q);
    Matrix k = Matrix::kronecker(a, b);
    // (a (x) b)(e_i (x) e_j) = a e_i (x) b e_j
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Vec expected = tensor_of(a.column(i), b.column(j));
            CHECK(k.column(tensor_index(i, j, 2)) == expected);
        }
}

} // TEST_SUITE
