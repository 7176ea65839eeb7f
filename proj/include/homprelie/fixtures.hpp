#pragma once

#include "homprelie/algebra.hpp"

namespace homprelie {
namespace fixtures {

/// Bundled corpus over Q, all validated Hom-preLie algebras.
///
///   L2: dim 2, b2b1 = b2, b2b2 = b1, alpha = 0
///   K3: dim 3, a2a2 = a1, a3a2 = a3, a3a3 = a2, alpha = 0
///   F4: dim 4, e2e3 = e1, e3e3 = e2, e4e3 = e4, e4e4 = e3, alpha = 0
///   P3: dim 3, a1a2 = -a2a1 = a3, a1a3 = -a3a1 = a2, a2a3 = -a3a2 = a1, alpha = 0
///   S2: dim 2, a1a1 = a1, alpha = diag(1, 2)
///   U1: dim 1, aa = a, alpha = id (alpha-perfect)
HomPreLieAlgebra L2();
HomPreLieAlgebra K3();
HomPreLieAlgebra F4();
HomPreLieAlgebra P3();
HomPreLieAlgebra S2();
HomPreLieAlgebra U1();

/// Zero algebra: all products zero, alpha = 0.
HomPreLieAlgebra zero_algebra(std::size_t dim);

/// pi: K3 -> L2, a1 -> 0, a2 -> b1, a3 -> b2 (central extension projection).
Morphism pi();
/// rho: F4 -> K3, e1 -> 0, e2 -> a1, e3 -> a2, e4 -> a3.
Morphism rho();

/// Kernel algebras of pi and rho: one-dimensional with zero product and twist.
HomPreLieAlgebra ker_pi_algebra();
HomPreLieAlgebra ker_rho_algebra();

} // namespace fixtures
} // namespace homprelie
