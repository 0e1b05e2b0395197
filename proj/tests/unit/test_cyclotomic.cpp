#include "doctest.h"
#include "twr/cyclotomic.hpp"

#include <random>

using namespace twr;

namespace {
Poly ints(std::initializer_list<long> v) {
    Poly p;
    for (long x : v) p.emplace_back(x);
    return p;
}
}  // namespace

TEST_SUITE("cyclotomic") {
TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == ints({-1, 1}));
    CHECK(cyclotomic_poly(4) == ints({1, 0, 1}));
    CHECK(cyclotomic_poly(12) == ints({1, 0, -1, 0, 1}));
    CHECK(poly_deg(cyclotomic_poly(12)) == euler_phi(12));
    for (Int p : {2, 3, 5, 7})
        for (Int q = p, k = 1; k <= 3 && q <= 125; ++k, q *= p)
            CHECK(poly_eval(cyclotomic_poly(q), 1) == qi(p));
}

TEST_CASE("companion matrices have exact order") {
    for (Int n = 2; n <= 30; ++n) {
        IntMat C = companion_matrix(cyclotomic_poly(n));
        CHECK(matrix_order(C, 100) == n);
        CHECK(charpoly(C) == cyclotomic_poly(n));
    }
}

TEST_CASE("charpoly factorization") {
    IntMat y{{0, -1}, {1, 0}};
    auto f = cyclotomic_factorization(charpoly(y), 4);
    REQUIRE(f.size() == 1);
    CHECK(f[0] == std::pair<Int, int>{4, 1});
    IntMat z{{2, 0}, {0, 1}};
    CHECK(cyclotomic_factorization(charpoly(z), 10).empty());
}

TEST_CASE("field arithmetic") {
    const CycField* F = cyc_field(12);
    Cyc z = Cyc::zeta(F, 1);
    Cyc p = Cyc::one(F);
    for (int i = 0; i < 12; ++i) p = p * z;
    CHECK(p == Cyc::one(F));
    CHECK((z * z.conj()) == Cyc::one(F));
    CHECK(Cyc::zeta(F, 5).conj() == Cyc::zeta(F, 7));
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> v(-5, 5);
    for (int t = 0; t < 50; ++t) {
        Cyc a(F);
        for (int k = 0; k < 12; ++k) a += Cyc::zeta(F, k) * Cyc::rational(F, Q(v(rng)));
        if (a.is_zero()) continue;
        CHECK(a * a.inverse() == Cyc::one(F));
    }
    Cyc sum(F);
    for (int k = 0; k < 12; ++k) sum += Cyc::zeta(F, k);
    CHECK(sum.is_zero());
    const CycField* F4 = cyc_field(4);
    Cyc i = Cyc::zeta(F4, 1);
    CHECK(i * i == Cyc::rational(F4, Q(-1)));
}

TEST_CASE("nullspace") {
    const CycField* F = cyc_field(3);
    Cyc w = Cyc::zeta(F, 1);
    CycMat M{{Cyc::one(F), w, w * w}, {Cyc::one(F), w * w, w}};
    CHECK(cyc_rank(M) == 2);
    auto N = cyc_nullspace(M, 3, F);
    REQUIRE(N.size() == 1);
    for (auto& row : M) {
        Cyc s(F);
        for (size_t j = 0; j < 3; ++j) s += row[j] * N[0][j];
        CHECK(s.is_zero());
    }
}
}
