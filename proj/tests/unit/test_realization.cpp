#include "doctest.h"
#include "twr/realization.hpp"

#include <random>

using namespace twr;

namespace {
MonomialOperator clock_op(int n) {
    IntVec e(n);
    for (int i = 0; i < n; ++i) e[i] = i;
    return MonomialOperator::diagonal(e, n);
}
MonomialOperator shift_op(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
    return MonomialOperator::permutation(p);
}
ActionData heisenberg(int n) {
    return ActionData{AbelianGroup(0, {n, n}), {}, {clock_op(n), shift_op(n)}};
}
ActionData pu6m3() {
    IntMat W(2, IntVec(6, 0));
    for (int k = 1; k <= 2; ++k)
        for (int j = 0; j < 2; ++j) W[k - 1][2 * k + j] = 1;
    auto I3 = MonomialOperator::identity(3);
    return ActionData{AbelianGroup(2, {2, 2}), W, {kron(I3, clock_op(2)), kron(I3, shift_op(2))}};
}
}  // namespace

TEST_SUITE("realization") {
TEST_CASE("algebra dimensions and Jacobi") {
    CHECK(build_algebra("su", 2).dim() == 3);
    CHECK(build_algebra("su", 4).dim() == 15);
    CHECK(build_algebra("so", 8).dim() == 28);
    CHECK(build_algebra("sp", 2).dim() == 10);
    for (auto [k, n] : std::vector<std::pair<std::string, int>>{{"su", 3}, {"so", 5}, {"sp", 2}, {"su", 4}}) {
        auto sc = structure_constants(build_algebra(k, n));
        std::string w;
        CHECK_MESSAGE(check_jacobi(sc, 100000, &w), k << n << " " << w);
    }
    CHECK_THROWS_AS(build_algebra("su", 30), Error);
}

TEST_CASE("adjoint action examples") {
    auto g = build_algebra("su", 4);
    const CycField* F = cyc_field(4);
    int e01 = g.frame.pos.at(0 * 4 + 1).first;
    int e12 = g.frame.pos.at(1 * 4 + 2).first;
    auto a = adjoint_action(clock_op(4), g, e01, F);
    CHECK(a[0].first == e01);
    CHECK(a[0].second == Cyc::zeta(F, -1));
    auto b = adjoint_action(shift_op(4), g, e01, F);
    CHECK(b[0].first == e12);
    CHECK(b[0].second == Cyc::one(F));
    auto c = adjoint_action(MonomialOperator::identity(4), g, e12, F);
    CHECK(c[0].first == e12);
    CHECK_THROWS_AS(adjoint_action(MonomialOperator::identity(3), g, e12, F), Error);
}

TEST_CASE("Ad is a homomorphism on random monomials") {
    std::mt19937 rng(5);
    auto g = build_algebra("su", 4);
    Int L = 8;
    for (int t = 0; t < 40; ++t) {
        auto rnd = [&]() {
            MonomialOperator m = MonomialOperator::identity(4, L);
            std::shuffle(m.perm.begin(), m.perm.end(), rng);
            for (auto& x : m.exps) x = std::uniform_int_distribution<Int>(0, L - 1)(rng);
            m.conj = rng() % 2;
            return m;
        };
        auto a = rnd(), b = rnd();
        auto ab = act_on_basis(a.compose(b), g.frame, L);
        auto fa = act_on_basis(a, g.frame, L), fb = act_on_basis(b, g.frame, L);
        for (int i = 0; i < g.frame.size(); ++i) {
            CHECK(ab.perm[i] == fa.perm[fb.perm[i]]);
            CHECK(ab.phase[i] == mod_i(fb.phase[i] + fa.phase[fb.perm[i]], L));
        }
        auto inv = act_on_basis(a.compose(a.inverse()), g.frame, L);
        for (int i = 0; i < g.frame.size(); ++i) {
            CHECK(inv.perm[i] == i);
            CHECK(inv.phase[i] == 0);
        }
    }
}

TEST_CASE("weight table: su(2) torus") {
    auto g = build_algebra("su", 2);
    ActionData act{AbelianGroup(1, {}), {{1, -1}}, {}};
    auto t = weight_table(g, act);
    CHECK(t.total() == 3);
    CHECK(t.mult_of(Character{{0}, {}}) == 1);
    CHECK(t.mult_of(Character{{2}, {}}) == 1);
    CHECK(t.mult_of(Character{{-2}, {}}) == 1);
    CHECK(t.star);
}

TEST_CASE("weight table: su(4) Heisenberg") {
    auto g = build_algebra("su", 4);
    auto t = weight_table(g, heisenberg(4));
    CHECK(t.mult.size() == 15);
    for (auto& [c, m] : t.mult) CHECK(m == 1);
    CHECK(t.mult_of(Character{{}, {0, 0}}) == 0);
    CHECK(t.star);
    CHECK(t.counting_checked);
    REQUIRE(t.has_bases);
    // cyclic pairs bracket to zero, generating pairs do not
    Character a{{}, {1, 0}}, b{{}, {2, 0}}, c{{}, {0, 1}};
    CHECK(bracket_pairs(a, b, t, g).is_zero);
    CHECK_FALSE(bracket_pairs(a, c, t, g).is_zero);
    CHECK(bracket_pairs(a, a, t, g).is_zero);
}

TEST_CASE("weight table: PU(6) with m = 3") {
    auto g = build_algebra("su", 6);
    auto t = weight_table(g, pu6m3());
    int inf = 0, fin = 0;
    for (auto& [c, m] : t.mult) {
        if (c.is_zero()) continue;
        if (c.is_finite()) {
            ++fin;
            CHECK(m == 3);
        } else {
            ++inf;
            CHECK(m == 1);
        }
    }
    CHECK(inf == 24);
    CHECK(fin == 3);
    CHECK(t.mult_of(Character{{0, 0}, {0, 0}}) == 2);
    CHECK(t.star);
    for (auto& [c, m] : t.mult) CHECK(static_cast<int>(t.bases.at(c).size()) == m);
}

TEST_CASE("weight table rejects non-commuting generators") {
    auto g = build_algebra("su", 3);
    std::vector<int> p{1, 0, 2};
    ActionData act{AbelianGroup(0, {3, 3}), {}, {clock_op(3), MonomialOperator::permutation(p)}};
    CHECK_THROWS_AS(weight_table(g, act), Error);
}
}
