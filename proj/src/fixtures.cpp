#include "homprelie/fixtures.hpp"

namespace homprelie {
namespace fixtures {

namespace {

HomPreLieAlgebra make(std::size_t dim, std::vector<std::string> names,
                      const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, long long>>& products) {
    HomPreLieAlgebra a(dim, Field::rationals());
    a.names = std::move(names);
    for (const auto& [i, j, k, v] : products)
        a.c.at(i, j, k) = Scalar::from_int(v, a.field);
    return a;
}

} // namespace

HomPreLieAlgebra L2() {
    // b2b1 = b2, b2b2 = b1
    return make(2, {"b1", "b2"}, {{1, 0, 1, 1}, {1, 1, 0, 1}});
}

HomPreLieAlgebra K3() {
    // a2a2 = a1, a3a2 = a3, a3a3 = a2
    return make(3, {"a1", "a2", "a3"}, {{1, 1, 0, 1}, {2, 1, 2, 1}, {2, 2, 1, 1}});
}

HomPreLieAlgebra F4() {
    // e2e3 = e1, e3e3 = e2, e4e3 = e4, e4e4 = e3
    return make(4, {"e1", "e2", "e3", "e4"},
                {{1, 2, 0, 1}, {2, 2, 1, 1}, {3, 2, 3, 1}, {3, 3, 2, 1}});
}

HomPreLieAlgebra P3() {
    // a1a2 = -a2a1 = a3, a1a3 = -a3a1 = a2, a2a3 = -a3a2 = a1
    return make(3, {"a1", "a2", "a3"},
                {{0, 1, 2, 1}, {1, 0, 2, -1}, {0, 2, 1, 1}, {2, 0, 1, -1}, {1, 2, 0, 1}, {2, 1, 0, -1}});
}

HomPreLieAlgebra S2() {
    // a1a1 = a1, alpha = diag(1, 2)
    HomPreLieAlgebra a = make(2, {"a1", "a2"}, {{0, 0, 0, 1}});
    a.alpha.at(0, 0) = Scalar::one(a.field);
    a.alpha.at(1, 1) = Scalar::from_int(2, a.field);
    return a;
}

HomPreLieAlgebra U1() {
    // aa = a, alpha = id
    HomPreLieAlgebra a = make(1, {"a"}, {{0, 0, 0, 1}});
    a.alpha.at(0, 0) = Scalar::one(a.field);
    return a;
}

HomPreLieAlgebra zero_algebra(std::size_t dim) {
    return HomPreLieAlgebra(dim, Field::rationals());
}

Morphism pi() {
    HomPreLieAlgebra src = K3(), tgt = L2();
    Matrix f(2, 3, src.field);
    f.at(0, 1) = Scalar::one(src.field);  // a2 -> b1
    f.at(1, 2) = Scalar::one(src.field);  // a3 -> b2
    return Morphism{std::move(src), std::move(tgt), std::move(f)};
}

Morphism rho() {
    HomPreLieAlgebra src = F4(), tgt = K3();
    Matrix f(3, 4, src.field);
    f.at(0, 1) = Scalar::one(src.field);  // e2 -> a1
    f.at(1, 2) = Scalar::one(src.field);  // e3 -> a2
    f.at(2, 3) = Scalar::one(src.field);  // e4 -> a3
    return Morphism{std::move(src), std::move(tgt), std::move(f)};
}

HomPreLieAlgebra ker_pi_algebra() {
    HomPreLieAlgebra a = zero_algebra(1);
    a.names = {"a1"};
    return a;
}

HomPreLieAlgebra ker_rho_algebra() {
    HomPreLieAlgebra a = zero_algebra(1);
    a.names = {"e1"};
    return a;
}

} // namespace fixtures
} // namespace homprelie
