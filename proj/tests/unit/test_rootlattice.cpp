#include "doctest.h"
#include "twr/rootlattice.hpp"

using namespace twr;

namespace {
GramForm eye(int n) {
    GramForm g(n, QVec(n, 0));
    for (int i = 0; i < n; ++i) g[i][i] = 1;
    return g;
}
std::vector<IntVec> unit_gens(int n) {
    std::vector<IntVec> g;
    for (int i = 0; i < n; ++i) {
        IntVec v(n, 0);
        v[i] = 1;
        g.push_back(v);
    }
    return g;
}
}  // namespace

TEST_SUITE("rootlattice") {
TEST_CASE("cartan numbers and reflections") {
    auto g = eye(3);
    CHECK(cartan_integer({1, -1, 0}, {0, 1, -1}, g) == -1);
    CHECK(cartan_integer({0, 1, -1}, {0, 1, -1}, g) == 2);
    CHECK(cartan_integer({2}, {1}, eye(1)) == 4);
    CHECK(reflect({0, 1, -1}, {1, -1, 0}, g) == IntVec{1, 0, -1});
    CHECK(reflect({1, -1, 0}, {1, -1, 0}, g) == IntVec{-1, 1, 0});
    CHECK(reflect({1, -1}, {0, 2}, eye(2)) == IntVec{1, 1});
    CHECK_THROWS_AS(cartan_integer({1}, {0}, eye(1)), Error);
    CHECK_THROWS_AS(reflect({1, 0}, {2, 2}, eye(2)), Error);
    // reflection is an involution
    for (auto& a : standard_system("BC", 3).roots)
        for (auto& b : standard_system("BC", 3).roots) CHECK(reflect(reflect(b, a, eye(3)), a, eye(3)) == b);
}

TEST_CASE("axiom verification") {
    auto A2 = standard_system("A", 2);
    std::vector<IntVec> lat{{1, -1, 0}, {0, 1, -1}};
    CHECK(verify_root_system(A2, lat).ok());
    auto BC1 = standard_system("BC", 1);
    CHECK(verify_root_system(BC1, unit_gens(1)).ok());
    auto m = A2.mult;
    m.erase(IntVec{1, 0, -1});
    auto broken = make_root_system(A2.gram, m);
    auto rep = verify_root_system(broken, lat);
    CHECK_FALSE(rep.find("reflection")->pass);
    CHECK_FALSE(rep.find("reflection")->witness.empty());
    // B2 roots against Z^2 are fine; against a half-integral generator they are not
    auto B2 = standard_system("B", 2);
    CHECK(verify_root_system(B2, unit_gens(2)).ok());
}

TEST_CASE("classification") {
    CHECK(type_label(classify_type(standard_system("A", 2))) == "A2");
    CHECK(type_label(classify_type(standard_system("BC", 2))) == "BC2");
    CHECK(type_label(classify_type(standard_system("B", 3))) == "B3");
    CHECK(type_label(classify_type(standard_system("C", 3))) == "C3");
    CHECK(type_label(classify_type(standard_system("B", 2))) == "C2");
    CHECK(type_label(classify_type(standard_system("D", 4))) == "D4");
    CHECK(type_label(classify_type(standard_system("D", 3))) == "A3");
    CHECK(type_label(classify_type(standard_system("BC", 1))) == "BC1");
    // orthogonal A1 + A2
    std::map<IntVec, int> m;
    m[{1, -1, 0, 0, 0}] = 1;
    m[{-1, 1, 0, 0, 0}] = 1;
    for (int i = 2; i < 5; ++i)
        for (int j = 2; j < 5; ++j)
            if (i != j) {
                IntVec v(5, 0);
                v[i] = 1;
                v[j] = -1;
                m[v] = 1;
            }
    CHECK(type_label(classify_type(make_root_system(eye(5), m))) == "A1+A2");
    auto bc = classify_type(standard_system("BC", 3))[0];
    CHECK(bc.length_class.at({1, 0, 0}) == "short");
    CHECK(bc.length_class.at({1, 1, 0}) == "med");
    CHECK(bc.length_class.at({2, 0, 0}) == "long");
}

TEST_CASE("classification is basis independent") {
    auto S = standard_system("C", 3);
    IntMat U{{1, 2, 0}, {0, 1, -1}, {0, 0, 1}};
    // transport roots by U and the gram by U^{-T} G U^{-1}
    QMat Uq(3, QVec(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) Uq[i][j] = qi(U[i][j]);
    QMat Ui = inverse_q(Uq);
    GramForm g(3, QVec(3, 0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) g[i][j] += Ui[k][i] * Ui[k][j];
    std::map<IntVec, int> m;
    for (auto& r : S.roots) {
        IntVec v(3, 0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) v[i] += U[i][j] * r[j];
        m[v] = 1;
    }
    CHECK(type_label(classify_type(make_root_system(g, m))) == "C3");
}

TEST_CASE("restricted projection") {
    auto A3 = standard_system("A", 3);
    auto simple = simple_system(A3);
    REQUIRE(simple.size() == 3);
    auto R = restricted_projection(A3, simple, {simple[0], simple[2]});
    CHECK(type_label(classify_type(R)) == "A1");
    CHECK(R.roots.size() == 2);
    for (auto& [r, m] : R.mult) CHECK(m == 4);
    auto A5 = standard_system("A", 5);
    auto s5 = simple_system(A5);
    auto R5 = restricted_projection(A5, s5, {s5[0], s5[2], s5[4]});
    CHECK(type_label(classify_type(R5)) == "A2");
    for (auto& [r, m] : R5.mult) CHECK(m == 4);
    CHECK(verify_root_system(R5, R5.roots).ok());
    auto A2 = standard_system("A", 2);
    auto R2 = restricted_projection(A2, simple_system(A2), {});
    CHECK(R2.roots.size() == 6);
    CHECK(type_label(classify_type(R2)) == "A2");
    CHECK_THROWS_AS(restricted_projection(A2, simple_system(A2), simple_system(A2)), Error);
}
}
