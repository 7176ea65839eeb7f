#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homprelie/linalg.hpp"

namespace homprelie {

/// Structure-constant tensor: c[i][j][k] is the e_k coefficient of e_i e_j.
/// Shape dim x dim x dim, flattened left-major.
class StructureConstants {
public:
    StructureConstants() : dim_(0), field_(Field::rationals()) {}
    StructureConstants(std::size_t dim, const Field& f)
        : dim_(dim), field_(f), c_(dim * dim * dim, Scalar::zero(f)) {}

    std::size_t dim() const { return dim_; }
    Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
    bool operator==(const StructureConstants& o) const { return dim_ == o.dim_ && c_ == o.c_; }

    /// e_i e_j as a coordinate vector.
    Vec product(std::size_t i, std::size_t j) const;

private:
    std::size_t dim_;
    Field field_;
    std::vector<Scalar> c_;
};

/// Finite-dimensional algebra (L, mu, alpha) given by structure constants and
/// a twist matrix. Immutable after construction; all operations are pure.
struct HomPreLieAlgebra {
    std::size_t dim = 0;
    Field field = Field::rationals();
    StructureConstants c;
    Matrix alpha;
    std::vector<std::string> names;  // optional basis labels

    HomPreLieAlgebra() = default;
    HomPreLieAlgebra(std::size_t dim, const Field& f);

    /// Bilinear extension of the structure constants.
    Vec multiply(const Vec& x, const Vec& y) const;

    /// The multiplication map L (x) L -> L as a matrix on tensor coordinates:
    /// column tensor_index(i, j, dim) is e_i e_j.
    Matrix multiplication_map() const;

    std::string basis_name(std::size_t i) const;

    bool operator==(const HomPreLieAlgebra& o) const {
        return dim == o.dim && field == o.field && c == o.c && alpha == o.alpha;
    }
};

/// Witness of a failed identity: the basis tuple and the exact residual.
struct IdentityWitness {
    std::vector<std::size_t> indices;
    Vec residual;
};

struct AxiomReport {
    bool hom_prelie = false;
    bool hom_novikov = false;
    std::optional<IdentityWitness> prelie_witness;
    std::optional<IdentityWitness> novikov_witness;
};

/// Checks the Hom-preLie identity
///   alpha(x)(yz) - (xy)alpha(z) = alpha(y)(xz) - (yx)alpha(z)
/// and the Hom-Novikov identity (xy)alpha(z) = (xz)alpha(y) on all basis
/// triples; sufficient by trilinearity.
AxiomReport check_axioms(const HomPreLieAlgebra& a);

/// Z(A): kernel of the stacked left- and right-multiplication maps.
Subspace annihilator(const HomPreLieAlgebra& a);

struct DerivedSubspaces {
    Subspace products;              // LL
    Subspace twisted_products;      // alpha(L) alpha(L)
    bool perfect = false;           // L = LL
    bool alpha_perfect = false;     // L = alpha(L) alpha(L)
    bool alpha_surjective = false;  // rank(alpha) = dim
};

DerivedSubspaces derived_subspaces(const HomPreLieAlgebra& a);

/// Linear map between algebras; validated against both the product and the
/// twist condition by check_morphism.
struct Morphism {
    HomPreLieAlgebra source;
    HomPreLieAlgebra target;
    Matrix f;
};

struct MorphismReport {
    bool is_morphism = false;
    std::optional<IdentityWitness> product_witness;  // indices {i, j}
    bool twist_ok = false;
};

MorphismReport check_morphism(const Morphism& m);

Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism identity_morphism(const HomPreLieAlgebra& a);

/// True iff H is alpha-invariant and absorbs products on both sides.
bool is_hom_ideal(const HomPreLieAlgebra& a, const Subspace& h);

struct QuotientAlgebra {
    HomPreLieAlgebra algebra;
    QuotientSpace space;
    Morphism projection;  // canonical map A -> A/H
};

/// Structure induced on A/H; rejects non-ideals with a witness in the
/// exception message.
QuotientAlgebra quotient_algebra(const HomPreLieAlgebra& a, const Subspace& h);

/// Action tensors for a carrier of dimension m_dim:
///   lambda[i][a][b]: e_b coefficient of e_i . m_a   (shape dim x m x m)
///   rho[a][i][b]:    e_b coefficient of m_a . e_i   (shape m x dim x m)
class ActionTensors {
public:
    ActionTensors() : l_dim_(0), m_dim_(0), field_(Field::rationals()) {}
    ActionTensors(std::size_t l_dim, std::size_t m_dim, const Field& f);

    std::size_t l_dim() const { return l_dim_; }
    std::size_t m_dim() const { return m_dim_; }

    Scalar& lambda_at(std::size_t i, std::size_t a, std::size_t b);
    const Scalar& lambda_at(std::size_t i, std::size_t a, std::size_t b) const;
    Scalar& rho_at(std::size_t a, std::size_t i, std::size_t b);
    const Scalar& rho_at(std::size_t a, std::size_t i, std::size_t b) const;

    /// lambda(x (x) m) for coordinate vectors x in L, m in M.
    Vec left_action(const Vec& x, const Vec& m) const;
    /// rho(m (x) x).
    Vec right_action(const Vec& m, const Vec& x) const;

    bool operator==(const ActionTensors& o) const {
        return l_dim_ == o.l_dim_ && m_dim_ == o.m_dim_ && lambda_ == o.lambda_ && rho_ == o.rho_;
    }

private:
    std::size_t l_dim_, m_dim_;
    Field field_;
    std::vector<Scalar> lambda_, rho_;
};

/// Solution space of the two derivation conditions
///   d(l1 l2) = alpha_L(l1) . d(l2) + d(l1) . alpha_L(l2),  d o alpha_L = alpha_M o d
/// as one homogeneous system in the m_dim x dim entries of d, flattened
/// row-major (row = carrier coordinate).
Subspace derivation_space(const HomPreLieAlgebra& a, std::size_t m_dim, const ActionTensors& actions,
                          const Matrix& alpha_m);

/// Renders v as a combination of basis labels, e.g. "a1 - 7/2*a3"; "0" when zero.
std::string format_vector(const HomPreLieAlgebra& a, const Vec& v);

/// Componentwise product and twist on A (+) B; basis of A first.
HomPreLieAlgebra direct_sum(const HomPreLieAlgebra& a, const HomPreLieAlgebra& b);

/// Entry-wise reduction of a rational algebra mod p. Rejects inputs whose
/// denominators vanish mod p.
HomPreLieAlgebra reduce_mod_p(const HomPreLieAlgebra& a, std::uint64_t p);
Matrix reduce_matrix_mod_p(const Matrix& m, std::uint64_t p);

} // namespace homprelie
