#include <doctest.h>

#include "twr/weyl.hpp"

using namespace twr;

TEST_SUITE("weyl") {
    TEST_CASE("reflections") {
        AbelianGroup T(1, {});
        auto s = reflection_auto(T, Character{{2}, {}}, {1});
        CHECK_FALSE(s.is_identity());
        CHECK(s.compose(s).is_identity());
        CHECK_THROWS_AS(reflection_auto(T, Character{{1}, {}}, {1}), Error);

        auto S = assemble(make_instance("pu:n=6,m=3,parts=2"));
        for (auto& a : S.infinite_roots()) {
            auto r = reflection_auto(S.A, a, S.inf_coroots.at(a));
            CHECK(r.compose(r).is_identity());
            CHECK(r.acts_trivially_on_torsion());
            for (auto& [l, m] : S.roots) {
                auto img = r.apply(l);
                CHECK(S.is_root(img));
                CHECK(img.is_finite() == l.is_finite());
                if (pair_cochar(l, S.inf_coroots.at(a)) == 0) CHECK(img == l);
            }
        }
    }

    TEST_CASE("transvections") {
        auto S = assemble(make_instance("pu:n=4,m=1,parts=4"));
        const auto& A = S.A;
        TorsionElement zero{{}, {0, 0}};
        for (auto& [a, d] : S.fin) {
            CHECK(transvection_auto(A, a, zero).is_identity());
            for (auto& x : *d.group)
                for (auto& y : *d.group) {
                    auto lhs = transvection_auto(A, a, x).compose(transvection_auto(A, a, y));
                    CHECK(lhs == transvection_auto(A, a, add(A, x, y)));
                }
            if (char_order(A, a) == 4) {
                // a generator of the coroot group gives an order 4 unipotent map
                for (auto& x : *d.group) {
                    if (torsion_order(A, x) != 4) continue;
                    auto t = transvection_auto(A, a, x);
                    auto g = generate(A, {t});
                    CHECK(g.order() == 4);
                }
            }
        }
        Character l{{}, {1, 0}};
        CHECK_THROWS_AS(transvection_auto(A, l, TorsionElement{{}, {1, 0}}), Error);
    }

    TEST_CASE("closures") {
        AbelianGroup A(2, {});
        // A2 in the basis of simple roots with the Cartan pairing
        auto s1 = reflection_auto(A, Character{{1, 0}, {}}, {2, -1});
        auto s2 = reflection_auto(A, Character{{0, 1}, {}}, {-1, 2});
        CHECK(generate(A, {s1, s2}).order() == 6);
        CHECK_THROWS_AS(generate(A, {s1, s2}, 4), Error);

        auto W4 = weyl_groups(assemble(make_instance("pu:n=4,m=1,parts=4")));
        CHECK(W4.small.order() == 48);
        CHECK(W4.f.order() == 48);
        auto W2 = weyl_groups(assemble(make_instance("pu:n=2,m=1,parts=2")));
        CHECK(W2.small.order() == 6);
        auto a = generate(A, {s1, s2});
        auto b = generate(A, {s2, s1});
        CHECK(a.same_elements(b));
    }

    TEST_CASE("filters") {
        auto W = weyl_groups(assemble(make_instance("pu:n=2,m=2")));
        CHECK(W.small.order() == 2);
        CHECK(W.filt.W0.order() == 1);
        CHECK(W.filt.W1.order() == 2);
        CHECK(W.f.order() == 1);
        CHECK(W.tiny.order() == 2);
        auto H = weyl_groups(assemble(make_instance("pu:n=4,m=1,parts=4")));
        CHECK(H.filt.W0.same_elements(H.f));
        CHECK(H.filt.normal);
    }

    TEST_CASE("theorems on small instances") {
        for (auto d : {"pu:n=2,m=2", "pu:n=2,m=1,parts=2", "pu:n=3,m=1,parts=3", "pu:n=4,m=1,parts=4",
                       "pu:n=4,m=1,parts=2.2", "pu:n=6,m=3,parts=2", "pu:n=4,m=2,parts=2", "prod:name=A1xHeis3",
                       "prod:name=A1swap", "gprime:n=6"}) {
            auto I = make_instance(d);
            auto S = assemble(I);
            auto W = weyl_groups(S, &I);
            auto rep = verify_weyl_theorems(S, W);
            for (auto& it : rep.checks.items)
                CHECK_MESSAGE(it.pass, std::string(d) << " " << it.name << " " << it.witness);
            // block-permuting generators are outside the oracle
            CHECK_MESSAGE(W.explicit_coroots == (std::string(d) != "prod:name=A1swap"), std::string(d));
            if (W.explicit_coroots && I.maximal) CHECK_MESSAGE(W.middle.has_value(), std::string(d));
        }
        auto I = make_instance("pu:n=6,m=3,parts=2");
        auto S = assemble(I);
        auto W = weyl_groups(S, &I);
        CHECK(W.Rprime.order() == 6);
        CHECK(lifted_simple_system(S).size() == 2);
    }

    TEST_CASE("order level fallback is partial") {
        auto S = assemble(make_instance("po:k=1,s0=0,s1=2"));
        auto W = weyl_groups(S);
        auto rep = verify_weyl_theorems(S, W);
        CHECK(rep.partial());
        CHECK(rep.checks.ok());
    }

    TEST_CASE("proper generalized finite roots") {
        auto S = assemble(make_instance("pu:n=4,m=1,parts=4"));
        auto p = proper_generalized_finite_roots(S);
        // every nonzero character is a root here; the order 4 ones are proper
        CHECK(p.size() == 12);
        for (auto& l : p) CHECK(char_order(S.A, l) == 4);
    }
}
