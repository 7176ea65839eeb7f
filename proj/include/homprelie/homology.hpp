#pragma once

#include "homprelie/algebra.hpp"

namespace homprelie {

/// Carrier M with left action lambda(l (x) m) = l.m, right action
/// rho(m (x) l) = m.l and twist alpha_M, over a base Hom-preLie algebra.
struct HomCoRepresentation {
    HomPreLieAlgebra base;
    std::size_t m_dim = 0;
    ActionTensors actions;
    Matrix alpha_m;

    bool is_trivial() const;  // both actions identically zero
};

/// zero actions, alpha_M = identity.
HomCoRepresentation trivial_corep(const HomPreLieAlgebra& a, std::size_t m_dim = 1);

/// Carrier = underlying space of A with x.m = mx, m.x = mx, alpha_M = alpha.
HomCoRepresentation self_corep(const HomPreLieAlgebra& a);

struct CoRepReport {
    bool valid = false;
    char failed_axiom = 0;  // 'a'..'e' when invalid
    std::vector<std::size_t> witness;
    Vec residual;
};

/// Checks the five co-representation identities on all basis tuples:
///   (a) alpha_M(m).(xy) = (m.x).alpha_L(y)
///   (b) (xy).alpha_M(m) = alpha_L(x).(y.m)
///   (c) alpha_L(x).(m.y) = (x.m).alpha_L(y)
///   (d) alpha_M(x.m) = alpha_L(x).alpha_M(m)
///   (e) alpha_M(m.x) = alpha_M(m).alpha_L(x)
CoRepReport check_corepresentation(const HomCoRepresentation& c);

/// Matrix of d_n : M (x) L^n -> M (x) L^(n-1) in the left-major tensor basis
/// (n in {1,2,3}); requires a validated co-representation.
Matrix differential(const HomCoRepresentation& c, int n);

/// Chain spaces M (x) L^n for n <= 3 with cached differentials; construction
/// validates the co-representation and the complex property d.d = 0.
class ChainComplex {
public:
    explicit ChainComplex(HomCoRepresentation corep);

    const HomCoRepresentation& corep() const { return corep_; }
    std::size_t space_dim(int n) const;
    /// d_n for n in {1,2,3}; d_0 is the zero map.
    const Matrix& d(int n) const;

private:
    HomCoRepresentation corep_;
    Matrix d1_, d2_, d3_;
};

struct HomologyResult {
    int degree = 0;
    std::size_t dimension = 0;
    /// Chain-space vectors in ker d_n projecting to a quotient basis.
    std::vector<Vec> representatives;
    /// Quotient of ker d_n coordinates by im d_(n+1) expressed inside the kernel.
    QuotientSpace quotient;
};

/// HL_n = ker d_n / im d_(n+1) for n in {0,1,2}; degree 0 takes d_0 = 0.
HomologyResult homology(const HomCoRepresentation& c, int n);
HomologyResult homology(const ChainComplex& cc, int n);

/// dim M/M_L with M_L spanned by m.l - l.m, built straight from the action
/// tensors (no differential matrices involved).
std::size_t hl0_closed_form(const HomCoRepresentation& c);

/// dim (M (x) L) / (alpha_M(M) (x) LL); rejects non-trivial co-representations.
std::size_t hl1_closed_form_trivial(const HomCoRepresentation& c);

/// Instrumentation for the degree-shift comparison between coefficients in L
/// itself and trivial coefficients: builds -id : L (x) L^n -> K (x) L^(n+1)
/// under the canonical identification, reports both commutation residuals and
/// both homology-dimension pairs. Reports only; asserts nothing about them.
struct ChainIsoReport {
    bool commutes = false;
    Matrix residual0;  // d2 on K-coefficients vs d1 on self-coefficients
    Matrix residual1;  // d3 on K-coefficients vs d2 on self-coefficients
    std::size_t hl0_self = 0, hl1_self = 0;   // HL_n(L, L), n = 0, 1
    std::size_t hl1_triv = 0, hl2_triv = 0;   // HL_(n+1)(L, K)
};

ChainIsoReport chain_iso_check(const HomPreLieAlgebra& a);

} // namespace homprelie
