#include <doctest.h>

#include <random>

#include "twr/twistedroots.hpp"

using namespace twr;

namespace {

std::map<Int, std::set<Int>> counts_by_order(const TwistedRootSystem& S, bool oracle) {
    std::map<Int, std::set<Int>> out;
    for (auto& [a, d] : S.fin) out[d.order].insert(oracle ? static_cast<Int>(d.group->size()) : d.predicted);
    return out;
}

IntMat block_diag(const std::vector<IntMat>& bs) {
    int n = 0;
    for (auto& b : bs) n += static_cast<int>(b.size());
    IntMat m(n, IntVec(n, 0));
    int off = 0;
    for (auto& b : bs) {
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) m[off + i][off + j] = b[i][j];
        off += static_cast<int>(b.size());
    }
    return m;
}

}  // namespace

TEST_SUITE("twistedroots") {
    TEST_CASE("infinite coroots") {
        auto I = make_instance("pu:n=2,m=2");
        auto S = assemble(I);
        CHECK(S.infinite_roots().size() == 2);
        CHECK(S.finite_roots().empty());
        for (auto& a : S.infinite_roots()) {
            auto cv = S.inf_coroots.at(a);
            CHECK(a.inf[0] * cv[0] == 2);
        }
        // orthogonal lambda pairs to zero
        GramForm g{{Q(1), Q(0)}, {Q(0), Q(1)}};
        Character a{{1, 0}, {}};
        auto cv = infinite_coroot(a, g);
        CHECK(cv == IntVec{2, 0});
        CHECK_THROWS_AS(infinite_coroot(Character{{1, 1}, {}}, GramForm{{Q(1), Q(0)}, {Q(0), Q(2)}}), Error);
    }

    TEST_CASE("pu6m3 coroots pair into A2 cartan range") {
        auto I = make_instance("pu:n=6,m=3,parts=2");
        auto S = assemble(I);
        CHECK(S.infinite_roots().size() == 24);
        CHECK(S.finite_roots().size() == 3);
        for (auto& a : S.infinite_roots())
            for (auto& b : S.infinite_roots()) {
                Int v = 0;
                for (int i = 0; i < 2; ++i) v += b.inf[i] * S.inf_coroots.at(a)[i];
                CHECK(v >= -2);
                CHECK(v <= 2);
            }
        for (auto& [a, d] : S.fin) {
            CHECK(S.roots.at(a) == 3);
            CHECK(d.predicted == 8);
            REQUIRE(d.group);
            CHECK(d.group->size() == 8);
        }
    }

    TEST_CASE("vogan counts match the oracle") {
        auto klein = assemble(make_instance("pu:n=2,m=1,parts=2"));
        CHECK(counts_by_order(klein, false) == std::map<Int, std::set<Int>>{{2, {2}}});
        CHECK(counts_by_order(klein, true) == std::map<Int, std::set<Int>>{{2, {2}}});
        auto h3 = assemble(make_instance("pu:n=3,m=1,parts=3"));
        CHECK(counts_by_order(h3, true) == std::map<Int, std::set<Int>>{{3, {3}}});
        auto h4 = assemble(make_instance("pu:n=4,m=1,parts=4"));
        CHECK(h4.finite_roots().size() == 15);
        CHECK(counts_by_order(h4, false) == std::map<Int, std::set<Int>>{{2, {2}}, {4, {4}}});
        CHECK(counts_by_order(h4, true) == std::map<Int, std::set<Int>>{{2, {2}}, {4, {4}}});
        for (auto& [a, d] : h4.fin)
            for (auto& x : *d.group) CHECK(pair(h4.A, a, x) == 0);
    }

    TEST_CASE("axioms hold on assembled systems") {
        for (auto d : {"pu:n=2,m=2", "pu:n=4,m=1,parts=4", "pu:n=6,m=3,parts=2", "po:k=1,s0=0,s1=2",
                       "autsu:k=0,s0=1,s1=1", "prod:name=A1xHeis3", "prod:name=A1swap", "pu:n=4,m=1,parts=2.2"}) {
            auto S = assemble(make_instance(d));
            auto rep = validate_axioms(S);
            for (auto& it : rep.items) CHECK_MESSAGE(it.pass, d << " " << it.name << " " << it.witness);
            CHECK_MESSAGE(check_restricted(S).ok(), d);
        }
    }

    TEST_CASE("corrupted systems fail the right axiom") {
        auto base = assemble(make_instance("pu:n=6,m=3,parts=2"));
        {
            auto S = base;
            auto a = S.infinite_roots().front();
            S.roots.erase(neg(S.A, a));
            S.inf_coroots.erase(neg(S.A, a));
            auto rep = validate_axioms(S);
            CHECK_FALSE(rep.find("(4) reflections")->pass);
        }
        {
            auto S = base;
            auto& d = S.fin.begin()->second;
            auto g = *d.group;
            g.push_back(TorsionElement{{Q(1, 3), Q(0)}, {0, 0}});
            std::sort(g.begin(), g.end());
            d.group = g;
            auto rep = validate_axioms(S);
            CHECK_FALSE(rep.find("(3) coroot groups")->pass);
        }
        {
            auto S = base;
            S.gram = GramForm{{Q(1), Q(0)}, {Q(0), Q(3)}};
            auto rep = validate_axioms(S);
            CHECK_FALSE(rep.find("(2) strong integrality")->pass);
        }
    }

    TEST_CASE("fixed point count") {
        auto f = fixed_point_count({{0, -1}, {1, 0}});
        CHECK(f.route1 == 2);
        CHECK(f.route2 == 2);
        CHECK(f.order == 4);
        auto id = fixed_point_count(mat_identity(3));
        CHECK(id.positive_dim);
        CHECK(id.route1 == 0);
        auto c3 = fixed_point_count(companion_matrix(cyclotomic_poly(3)));
        CHECK(c3.route1 == 3);
        CHECK(c3.route2 == 3);
        CHECK_THROWS_AS(fixed_point_count({{1, 1}, {0, 1}}), Error);
    }

    TEST_CASE("fixed point routes agree") {
        std::mt19937 rng(7);
        std::vector<Int> ds;
        for (Int d = 1; d <= 30; ++d)
            if (euler_phi(d) <= 8) ds.push_back(d);
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<IntMat> blocks;
            int size = 0;
            while (true) {
                Int d = ds[rng() % ds.size()];
                int deg = static_cast<int>(euler_phi(d));
                if (size + deg > 8) break;
                if (rng() % 3 == 0) {
                    // permutation block: a d-cycle on Z^d
                    if (size + d > 8) break;
                    IntMat p(d, IntVec(d, 0));
                    for (int i = 0; i < d; ++i) p[(i + 1) % d][i] = 1;
                    blocks.push_back(p);
                    size += static_cast<int>(d);
                } else {
                    blocks.push_back(companion_matrix(cyclotomic_poly(d)));
                    size += deg;
                }
            }
            if (blocks.empty()) continue;
            auto y = block_diag(blocks);
            // conjugate by a permutation
            int n = static_cast<int>(y.size());
            std::vector<int> p(n);
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
            IntMat z(n, IntVec(n, 0));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) z[p[i]][p[j]] = y[i][j];
            auto f = fixed_point_count(z);
            if (f.positive_dim)
                CHECK(f.route1 == 0);
            else
                CHECK(f.route1 == f.route2);
        }
    }
}
