#pragma once

#include "homprelie/algebra.hpp"
#include "homprelie/homology.hpp"

namespace homprelie {

/// Short sequence 0 -> M -> K -> L -> 0 given by the three algebras and the
/// matrices of i : M -> K and pi : K -> L. Classification flags are filled by
/// classify_extension.
struct Extension {
    HomPreLieAlgebra sub;    // M
    HomPreLieAlgebra total;  // K
    HomPreLieAlgebra quot;   // L
    Matrix inj;              // total.dim x sub.dim
    Matrix proj;             // quot.dim x total.dim

    bool classified = false;
    bool exact = false;
    bool central = false;        // i(M) inside Z(K)
    bool alpha_central = false;  // i(alpha_M(M)) inside Z(K)

    Morphism inj_morphism() const { return Morphism{sub, total, inj}; }
    Morphism proj_morphism() const { return Morphism{total, quot, proj}; }
    Subspace kernel_subspace() const;  // ker pi in K coordinates
};

/// Fills the exactness and (alpha-)centrality flags. Rejects inputs whose
/// structure maps are not morphisms. Two facts are re-checked as internal
/// invariants on every call: central implies alpha-central, and a surjective
/// image of a perfect algebra is perfect.
Extension classify_extension(Extension e);

/// Extension with kernel ker(pi_outer o pi_inner), its product and twist
/// restricted from the total algebra. When both inputs are central and the
/// middle algebra is perfect, the composition must come out alpha-central;
/// a violation signals an implementation bug.
Extension compose_extensions(const Extension& outer, const Extension& inner);

/// M (+) L with componentwise structure, canonical injection and projection.
Extension direct_sum_extension(const HomPreLieAlgebra& m, const HomPreLieAlgebra& l);

/// 0 -> 0 -> L -> L -> 0.
Extension identity_extension(const HomPreLieAlgebra& l);

/// Builds the extension determined by a surjective morphism: the kernel with
/// restricted structure becomes the sub algebra.
Extension extension_from_projection(const Morphism& proj);

struct PullbackResult {
    HomPreLieAlgebra algebra;  // P = {(a,k) : tau(a) = pi(k)} in A (+) K
    Morphism to_a;
    Morphism to_k;
    Subspace solution_space;   // P inside A (+) K coordinates
};

/// Fibre product of tau : A -> L and pi : K -> L (pi surjective), with
/// componentwise product and twist.
PullbackResult pullback(const Morphism& tau, const Morphism& pi);

/// True iff sigma : L -> K is a morphism with pi o sigma = id.
bool verify_splitting(const Extension& e, const Matrix& sigma);

/// Restriction of an algebra to a subspace closed under products and twist.
HomPreLieAlgebra subalgebra_on(const HomPreLieAlgebra& a, const Subspace& s);

/// The relation subspace I_L of L (x) L, spanned over all basis triples by
///   alpha(x1) (x) x2x3 - x1x2 (x) alpha(x3) - alpha(x2) (x) x1x3 + x2x1 (x) alpha(x3).
Subspace uce_relations(const HomPreLieAlgebra& a);

/// Universal (alpha-)central extension data. The carrier is L (x) L / I_L,
/// or alpha(L) (x) alpha(L) / I_L for the alpha variant; representatives are
/// tracked through the quotient so universal morphisms can evaluate on them.
struct UceResult {
    bool variant_alpha = false;
    HomPreLieAlgebra base;     // L
    HomPreLieAlgebra algebra;  // the constructed extension algebra
    Morphism u;                // onto L
    Subspace relations;        // I_L inside L (x) L
    Subspace carrier;          // alpha(L) (x) alpha(L); full space for the plain variant
    Subspace kernel;           // ker u in constructed coordinates
    QuotientSpace quotient;    // carrier coordinates modulo relations
    std::size_t hl2_dim = 0;   // second homology with trivial coefficients (plain variant)
    bool algebra_axioms_ok = false;  // verbatim bracket re-checked per instance

    /// Representative tensor in L (x) L of the j-th basis class.
    Vec representative(std::size_t j) const;
};

/// Universal central extension of a perfect algebra: carrier L (x) L / I_L,
/// bracket {x1,x2}{y1,y2} = {x1x2, y1y2}, twist alpha (x) alpha, u{x1,x2} = x1x2.
/// Construction re-verifies its own proof obligations exactly: mu(I_L) = 0,
/// (alpha (x) alpha)(I_L) inside I_L, u surjective, kernel central, result
/// perfect, and dim ker u = dim HL_2 with trivial coefficients.
UceResult uce(const HomPreLieAlgebra& l);

/// Universal alpha-central extension of an alpha-perfect algebra.
UceResult uce_alpha(const HomPreLieAlgebra& l);

/// The induced morphism uce(L) -> K for a central extension pi : K -> L over
/// the same base: a linear section s of pi is chosen by the first-pivot rule,
/// classes map through s(x1)s(x2), and the construction asserts exactness of
/// pi o phi = u, morphism validity, and independence of the section.
Morphism universal_morphism(const UceResult& u, const Extension& e);

/// The induced morphism uce_alpha(L) -> K for an alpha-central extension:
/// representatives alpha(x1) (x) alpha(x2) map to alpha_K(s(x1)) alpha_K(s(x2)).
/// Well-definedness of every choice involved (preimage under alpha (x) alpha,
/// section, representative modulo I_L) is asserted exactly, as are product
/// preservation, twist compatibility and pi o Phi = U_alpha.
Morphism universal_alpha_morphism(const UceResult& u, const Extension& e);

/// Deterministic linear section of a surjective morphism matrix (first-pivot
/// rule), plus a second section shifted by the kernel when one exists.
Matrix linear_section(const Matrix& proj);
Matrix alternate_section(const Matrix& proj);

} // namespace homprelie
