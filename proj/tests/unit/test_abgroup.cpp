#include "doctest.h"
#include "twr/abgroup.hpp"

#include <random>

using namespace twr;

namespace {
using ZM = std::vector<std::vector<Z>>;
ZM mul(const ZM& a, const ZM& b) {
    ZM c(a.size(), std::vector<Z>(b[0].size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k)
            for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}
Z detz(const ZM& m) {
    QMat q;
    for (auto& r : m) {
        QVec row;
        for (auto& x : r) row.emplace_back(x);
        q.push_back(row);
    }
    return det_q(q).get_num();
}
}  // namespace

TEST_SUITE("abgroup") {
TEST_CASE("snf small examples") {
    auto d = snf_diagonal(ZM{{2, 4}, {6, 8}});
    CHECK(d == std::vector<Z>{2, 4});
    auto id = snf_diagonal(ZM{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(id == std::vector<Z>{1, 1, 1});
    CHECK(snf_diagonal(ZM{{0}}) == std::vector<Z>{0});
}

TEST_CASE("snf random property") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> val(-50, 50), dim(1, 8);
    for (int trial = 0; trial < 150; ++trial) {
        size_t m = dim(rng), n = dim(rng);
        ZM M(m, std::vector<Z>(n));
        for (auto& r : M)
            for (auto& x : r) x = val(rng);
        auto s = smith_normal_form(M);
        CHECK(mul(mul(s.U, M), s.V) == s.D);
        CHECK(abs(detz(s.U)) == 1);
        CHECK(abs(detz(s.V)) == 1);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < n; ++j)
                if (i != j) CHECK(s.D[i][j] == 0);
        size_t k = std::min(m, n);
        for (size_t i = 0; i + 1 < k; ++i) {
            CHECK(s.D[i][i] >= 0);
            if (s.D[i][i] != 0)
                CHECK(s.D[i + 1][i + 1] % s.D[i][i] == 0);
            else
                CHECK(s.D[i + 1][i + 1] == 0);
        }
    }
}

TEST_CASE("pairing") {
    AbelianGroup T1(1, {});
    CHECK(pair(T1, make_char(T1, {1}, {}), TorsionElement{{Q(1, 4)}, {}}) == Q(1, 4));
    AbelianGroup Z4(0, {4});
    CHECK(pair(Z4, make_char(Z4, {}, {2}), TorsionElement{{}, {1}}) == Q(1, 2));
    AbelianGroup G(2, {6, 2});
    for (auto& t : n_torsion(G, 6)) {
        CHECK(pair(G, zero_char(G), t) == 0);
        Character l = make_char(G, {3, -1}, {5, 1});
        Int m = torsion_order(G, t);
        Q v = pair(G, l, t) * Q(static_cast<long>(m));
        CHECK(v.get_den() == 1);
    }
    CHECK_THROWS_AS(pair(G, make_char(Z4, {}, {1}), TorsionElement{{}, {1}}), Error);
}

TEST_CASE("n-torsion counts") {
    AbelianGroup Z4(0, {4});
    CHECK(n_torsion(Z4, 2).size() == 2);
    AbelianGroup G(1, {2});
    CHECK(n_torsion(G, 2).size() == 4);
    CHECK(n_torsion(G, 1).size() == 1);
    AbelianGroup H(2, {12, 4});
    CHECK(static_cast<Int>(n_torsion(H, 6).size()) == n_torsion_count(H, 6));
    CHECK(n_torsion_count(H, 6) == 36 * 6 * 2);
    CHECK_THROWS_AS(n_torsion(AbelianGroup(5, {}), 40, 1000), Error);
}

TEST_CASE("generates") {
    AbelianGroup T2(2, {});
    CHECK(generates({make_char(T2, {1, 0}, {}), make_char(T2, {0, 1}, {})}, T2));
    AbelianGroup T1(1, {});
    CHECK_FALSE(generates({make_char(T1, {2}, {})}, T1));
    AbelianGroup G(1, {2});
    CHECK(generates({make_char(G, {1}, {0}), make_char(G, {0}, {1})}, G));
    CHECK(generates({make_char(G, {1}, {1}), make_char(G, {0}, {1})}, G));
    CHECK_FALSE(generates({make_char(G, {1}, {0})}, G));
}

TEST_CASE("generates agrees with trivial kernel") {
    std::vector<AbelianGroup> groups{AbelianGroup(0, {4, 2}), AbelianGroup(0, {6, 3}),
                                     AbelianGroup(0, {8, 4, 2}), AbelianGroup(0, {12})};
    std::mt19937 rng(11);
    for (auto& A : groups) {
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Character> cs;
            int k = 1 + trial % 3;
            for (int i = 0; i < k; ++i) {
                IntVec f;
                for (Int d : A.inv) f.push_back(std::uniform_int_distribution<Int>(0, d - 1)(rng));
                cs.push_back(make_char(A, {}, f));
            }
            bool trivial = common_kernel_finite(cs, A).size() == 1;
            CHECK(generates(cs, A) == trivial);
        }
    }
}

TEST_CASE("dual automorphisms") {
    AbelianGroup G(1, {4});
    DualAutomorphism a(G, {{-1, 0}, {1, 3}});
    CHECK(a.is_invertible());
    auto ai = a.inverse();
    CHECK(a.compose(ai).is_identity());
    CHECK(ai.compose(a).is_identity());
    DualAutomorphism b(G, {{1, 0}, {2, 1}});
    CHECK((a.compose(b)).compose(ai) == a.compose(b.compose(ai)));
    CHECK(DualAutomorphism(G, {{1, 0}, {5, 5}}) == DualAutomorphism(G, {{1, 0}, {1, 1}}));
    CHECK_FALSE(DualAutomorphism(G, {{1, 0}, {0, 2}}).is_invertible());
    CHECK_THROWS_AS(DualAutomorphism(G, {{1, 1}, {0, 1}}), Error);
    // free-quotient action commutes with restriction
    Character c = make_char(G, {3}, {1});
    CHECK(a.apply(c).inf[0] == -3);
    AbelianGroup H(0, {4, 2});
    DualAutomorphism u(H, {{1, 2}, {1, 1}});
    CHECK(u.is_invertible());
    CHECK(u.compose(u.inverse()).is_identity());
    AbelianGroup T2(2, {});
    DualAutomorphism sh(T2, {{1, 1}, {0, 1}});
    CHECK(sh.inverse().matrix() == IntMat{{1, -1}, {0, 1}});
}
}
