#include "twr/weyl.hpp"

#include <algorithm>
#include <deque>

namespace twr {

namespace {

Character basis_char(const AbelianGroup& A, int j) {
    Character c{IntVec(A.rank, 0), IntVec(A.s(), 0)};
    if (j < A.rank)
        c.inf[j] = 1;
    else
        c.fin[j - A.rank] = 1;
    return c;
}

template <class F>
DualAutomorphism from_char_map(const AbelianGroup& A, F f) {
    int n = A.dim();
    IntMat m(n, IntVec(n, 0));
    for (int j = 0; j < n; ++j) {
        auto img = f(basis_char(A, j));
        for (int i = 0; i < A.rank; ++i) m[i][j] = img.inf[i];
        for (int i = 0; i < A.s(); ++i) m[A.rank + i][j] = img.fin[i];
    }
    return DualAutomorphism(A, m);
}

AutGroup from_elements(const AbelianGroup& A, std::vector<DualAutomorphism> els) {
    AutGroup G;
    G.A = A;
    for (auto& e : els) {
        if (G.index.count(e.key())) continue;
        G.index[e.key()] = G.elements.size();
        G.elements.push_back(e);
    }
    for (size_t i = 1; i < G.elements.size(); ++i) G.generators.push_back(G.elements[i]);
    return G;
}

std::vector<DualAutomorphism> dedupe(const std::vector<DualAutomorphism>& v) {
    std::vector<DualAutomorphism> out;
    std::unordered_map<IntVec, int, KeyHash> seen;
    for (auto& g : v)
        if (!g.is_identity() && seen.emplace(g.key(), 1).second) out.push_back(g);
    return out;
}

}  // namespace

bool AutGroup::same_elements(const AutGroup& o) const {
    if (order() != o.order()) return false;
    for (auto& e : elements)
        if (!o.contains(e)) return false;
    return true;
}

DualAutomorphism reflection_auto(const AbelianGroup& A, const Character& alpha, const Cocharacter& cv) {
    if (pair_cochar(alpha, cv) != 2) throw Error(kErrInvalid, "alpha(coroot) != 2");
    return from_char_map(A, [&](const Character& l) { return sub(A, l, scale(A, pair_cochar(l, cv), alpha)); });
}

DualAutomorphism transvection_auto(const AbelianGroup& A, const Character& lambda, const TorsionElement& xi) {
    if (!lambda.is_finite()) throw Error(kErrInvalid, "transvection needs a finite character");
    Int n = char_order(A, lambda);
    auto nx = scale(A, n, xi);
    if (!(nx == canon(A, TorsionElement{QVec(A.rank, 0), IntVec(A.s(), 0)})))
        throw Error(kErrInvalid, "xi is not n-torsion");
    if (pair(A, lambda, xi) != 0) throw Error(kErrInvalid, "xi not in ker lambda");
    return from_char_map(A, [&](const Character& m) { return transvect_char(A, lambda, xi, m); });
}

AutGroup generate(const AbelianGroup& A, const std::vector<DualAutomorphism>& gens, size_t bound) {
    AutGroup G;
    G.A = A;
    G.generators = gens;
    auto id = DualAutomorphism::identity(A);
    G.index[id.key()] = 0;
    G.elements.push_back(id);
    std::deque<size_t> q{0};
    while (!q.empty()) {
        size_t i = q.front();
        q.pop_front();
        for (auto& g : gens) {
            auto y = g.compose(G.elements[i]);
            if (G.index.count(y.key())) continue;
            if (G.elements.size() >= bound) throw Error(kErrBound, "group closure exceeds bound");
            G.index[y.key()] = G.elements.size();
            G.elements.push_back(y);
            q.push_back(G.elements.size() - 1);
        }
    }
    return G;
}

AutGroup filter(const AutGroup& W, const std::function<bool(const DualAutomorphism&)>& keep) {
    std::vector<DualAutomorphism> els;
    for (auto& e : W.elements)
        if (keep(e)) els.push_back(e);
    return from_elements(W.A, els);
}

bool is_normal(const AutGroup& H, const AutGroup& W) {
    for (auto& g : W.generators) {
        auto gi = g.inverse();
        for (auto& h : H.elements)
            if (!H.contains(g.compose(h).compose(gi))) return false;
    }
    return true;
}

AutGroup intersect(const AutGroup& H, const AutGroup& K) {
    std::vector<DualAutomorphism> els;
    for (auto& e : H.elements)
        if (K.contains(e)) els.push_back(e);
    return from_elements(H.A, els);
}

size_t product_size(const AutGroup& H, const AutGroup& K) {
    return H.order() * K.order() / intersect(H, K).order();
}

SubgroupFilters subgroup_filters(const AutGroup& W) {
    SubgroupFilters f;
    f.W0 = filter(W, [](const DualAutomorphism& g) { return g.acts_trivially_on_free_quotient(); });
    f.W1 = filter(W, [](const DualAutomorphism& g) { return g.acts_trivially_on_torsion(); });
    f.Wprime = intersect(f.W0, f.W1);
    f.normal = is_normal(f.W0, W) && is_normal(f.W1, W) && is_normal(f.Wprime, W);
    return f;
}

std::vector<Character> lifted_simple_system(const TwistedRootSystem& S) {
    auto R = restricted_system(S);
    std::vector<Character> out;
    for (auto& v : simple_system(R)) {
        // roots are sorted, so the first match has the smallest finite part
        for (auto& [c, m] : S.roots)
            if (c.inf == v) {
                out.push_back(c);
                break;
            }
    }
    return out;
}

std::vector<Character> proper_generalized_finite_roots(const TwistedRootSystem& S) {
    const auto& A = S.A;
    AbelianGroup F(0, A.inv);
    std::vector<Character> gfr;
    if (A.finite_order() > 100000) throw Error(kErrBound, "too many finite characters");
    for (auto& t : all_elements_finite(F)) {
        // finite characters of A are indexed like elements of prod Z/d_j
        Character l{IntVec(A.rank, 0), t.fin};
        if (l.is_zero()) continue;
        Int n = char_order(A, l);
        Int g = n;
        for (Int k = 1; k < n; ++k)
            if (S.is_root(scale(A, k, l))) g = gcd_i(g, k);
        if (g == 1) gfr.push_back(l);
    }
    std::vector<Character> out;
    for (auto& l : gfr) {
        Int n = char_order(A, l);
        bool proper = true;
        for (auto& m : gfr) {
            Int nm = char_order(A, m);
            if (nm <= n) continue;
            for (Int k = 1; k < nm && proper; ++k)
                if (scale(A, k, m) == l) proper = false;
            if (!proper) break;
        }
        if (proper) out.push_back(l);
    }
    return out;
}

WeylGroups weyl_groups(const TwistedRootSystem& S, const Instance* I, size_t bound) {
    WeylGroups W;
    const auto& A = S.A;
    std::vector<DualAutomorphism> refl, trans;
    for (auto& a : S.infinite_roots()) refl.push_back(reflection_auto(A, a, S.inf_coroots.at(a)));
    W.explicit_coroots = true;
    for (auto& [a, d] : S.fin) {
        if (!d.group) {
            W.explicit_coroots = false;
            continue;
        }
        for (auto& xi : *d.group) trans.push_back(transvection_auto(A, a, xi));
    }
    refl = dedupe(refl);
    trans = dedupe(trans);
    W.tiny = generate(A, refl, bound);
    W.f = generate(A, trans, bound);
    auto all = refl;
    all.insert(all.end(), trans.begin(), trans.end());
    W.small = generate(A, all, bound);
    std::vector<DualAutomorphism> rp;
    for (auto& a : lifted_simple_system(S)) rp.push_back(reflection_auto(A, a, S.inf_coroots.at(a)));
    W.Rprime = generate(A, dedupe(rp), bound);
    W.filt = subgroup_filters(W.small);

    if (I && I->maximal && W.explicit_coroots && A.finite_order() <= 100000) {
        auto mid = refl;
        bool ok = true;
        for (auto& l : proper_generalized_finite_roots(S)) {
            auto grp = coroot_group_oracle(l, *I);
            if (!grp) {
                ok = false;
                break;
            }
            for (auto& xi : *grp) mid.push_back(transvection_auto(A, l, xi));
        }
        if (ok) W.middle = generate(A, dedupe(mid), bound);
    }
    return W;
}

CheckItem check_reflection_pairs(const TwistedRootSystem& S, const WeylGroups& W) {
    CheckItem it{"reflection pairs in W_f", true, ""};
    const auto& A = S.A;
    auto inf = S.infinite_roots();
    for (auto& a1 : inf)
        for (auto& a2 : inf) {
            bool same = a1.inf == a2.inf;
            bool dbl = true;
            for (size_t i = 0; i < a1.inf.size(); ++i) dbl = dbl && a1.inf[i] == 2 * a2.inf[i];
            if (!same && !dbl) continue;
            auto g = reflection_auto(A, a1, S.inf_coroots.at(a1))
                         .compose(reflection_auto(A, a2, S.inf_coroots.at(a2)));
            if (!W.f.contains(g)) {
                it.pass = false;
                it.witness = char_str(a1) + " " + char_str(a2);
                return it;
            }
        }
    return it;
}

WeylReport verify_weyl_theorems(const TwistedRootSystem& S, const WeylGroups& W) {
    WeylReport rep;
    auto sz = [](size_t x) { return std::to_string(x); };
    rep.checks.add("normal subgroups",
                   W.filt.normal && is_normal(W.f, W.small) && is_normal(W.tiny, W.small));
    if (!W.explicit_coroots) {
        for (auto n : {"W_0 = W_f", "W_small = W_f W_tiny", "W_small = W_f x| W_R'", "W_1 = W_tiny W'",
                       "reflection pairs in W_f", "W_middle = W_small"})
            rep.skipped.push_back(n);
        return rep;
    }
    rep.checks.add("W_0 = W_f", W.filt.W0.same_elements(W.f),
                   "|W_0|=" + sz(W.filt.W0.order()) + " |W_f|=" + sz(W.f.order()));
    size_t ft = product_size(W.f, W.tiny);
    rep.checks.add("W_small = W_f W_tiny", ft == W.small.order(),
                   "|W_f W_tiny|=" + sz(ft) + " |W_small|=" + sz(W.small.order()));
    size_t meet = intersect(W.f, W.Rprime).order();
    size_t fr = product_size(W.f, W.Rprime);
    bool in_small = intersect(W.Rprime, W.small).order() == W.Rprime.order();
    rep.checks.add("W_small = W_f x| W_R'", meet == 1 && fr == W.small.order() && in_small,
                   "|W_R'|=" + sz(W.Rprime.order()) + " meet=" + sz(meet) + " product=" + sz(fr));
    size_t tw = product_size(W.tiny, W.filt.Wprime);
    bool tiny_in = intersect(W.tiny, W.filt.W1).order() == W.tiny.order();
    rep.checks.add("W_1 = W_tiny W'", tiny_in && tw == W.filt.W1.order(),
                   "|W_tiny W'|=" + sz(tw) + " |W_1|=" + sz(W.filt.W1.order()));
    auto pr = check_reflection_pairs(S, W);
    rep.checks.add(pr.name, pr.pass, pr.witness);
    if (W.middle)
        rep.checks.add("W_middle = W_small", W.middle->same_elements(W.small),
                       "|W_middle|=" + sz(W.middle->order()));
    else
        rep.skipped.push_back("W_middle = W_small");
    return rep;
}

}  // namespace twr
