#include "twr/decomp.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace twr {

namespace {

// reduced row basis of the span, in the original frame indices
std::vector<CycSparse> span_basis(const std::vector<CycSparse>& vs, const CycField* F) {
    std::set<int> cols;
    for (auto& v : vs)
        for (auto& [k, x] : v) cols.insert(k);
    if (cols.empty()) return {};
    std::vector<int> cl(cols.begin(), cols.end());
    std::map<int, size_t> ci;
    for (size_t i = 0; i < cl.size(); ++i) ci[cl[i]] = i;
    CycMat M;
    for (auto& v : vs) {
        if (v.empty()) continue;
        CycVec row(cl.size(), Cyc::zero(F));
        for (auto& [k, x] : v) row[ci[k]] = x;
        M.push_back(row);
    }
    auto piv = cyc_row_reduce(M);
    std::vector<CycSparse> out;
    for (size_t r = 0; r < piv.size(); ++r) {
        CycSparse v;
        for (size_t c = 0; c < cl.size(); ++c)
            if (!M[r][c].is_zero()) v.push_back({cl[c], M[r][c]});
        out.push_back(v);
    }
    return out;
}

int basis_size(const std::map<Character, std::vector<CycSparse>>& m) {
    int s = 0;
    for (auto& [c, v] : m) s += static_cast<int>(v.size());
    return s;
}

}  // namespace

WeightTable materialized_table(const Instance& I) {
    if (I.table.has_bases) return I.table;
    WeightOptions o;
    o.materialize = true;
    return weight_table(I.alg, I.act, o);
}

IdealSplit g_infinity_split(const TwistedRootSystem& S, const WeightTable& t, const GradedAlgebra& alg) {
    if (!t.has_bases) throw Error(kErrInvalid, "weight-space bases not materialized");
    const auto& A = S.A;
    const CycField* F = t.field;
    IdealSplit sp;
    sp.dim_g = alg.dim();

    std::vector<Character> inf;
    for (auto& [c, b] : t.bases)
        if (!c.is_finite()) {
            inf.push_back(c);
            sp.inf_basis[c] = b;
        }
    std::map<Character, std::vector<CycSparse>> pool;
    for (auto& a : inf)
        for (auto& b : inf) {
            if (a.inf != vec_neg(b.inf)) continue;
            auto& dst = pool[add(A, a, b)];
            for (auto& u : t.bases.at(a))
                for (auto& v : t.bases.at(b)) dst.push_back(bracket_vectors(u, v, alg, F));
        }
    for (auto& [l, vs] : pool) {
        auto b = span_basis(vs, F);
        if (!b.empty()) sp.inf_basis[l] = b;
    }
    sp.dim_inf = basis_size(sp.inf_basis);

    // centralizer of g_inf, weight by weight
    std::vector<std::pair<Character, const CycSparse*>> Y;
    for (auto& [l, vs] : sp.inf_basis)
        for (auto& v : vs) Y.push_back({l, &v});
    for (auto& [l, B] : t.bases) {
        if (Y.empty()) {
            sp.f_basis[l] = B;
            continue;
        }
        std::map<std::pair<size_t, int>, size_t> rowid;
        CycMat M;
        for (size_t i = 0; i < B.size(); ++i)
            for (size_t y = 0; y < Y.size(); ++y) {
                if (!t.bases.count(add(A, l, Y[y].first))) continue;
                for (auto& [k, x] : bracket_vectors(B[i], *Y[y].second, alg, F)) {
                    auto key = std::make_pair(y, k);
                    auto it = rowid.find(key);
                    if (it == rowid.end()) {
                        it = rowid.emplace(key, M.size()).first;
                        M.push_back(CycVec(B.size(), Cyc::zero(F)));
                    }
                    M[it->second][i] += x;
                }
            }
        auto ker = cyc_nullspace(M, B.size(), F);
        std::vector<CycSparse> fb;
        for (auto& kv : ker) {
            std::map<int, Cyc> acc;
            for (size_t i = 0; i < B.size(); ++i) {
                if (kv[i].is_zero()) continue;
                for (auto& [idx, val] : B[i]) {
                    auto it = acc.find(idx);
                    if (it == acc.end())
                        acc.emplace(idx, kv[i] * val);
                    else
                        it->second += kv[i] * val;
                }
            }
            CycSparse v;
            for (auto& [idx, val] : acc)
                if (!val.is_zero()) v.push_back({idx, val});
            fb.push_back(v);
        }
        if (!fb.empty()) sp.f_basis[l] = fb;
    }
    sp.dim_f = basis_size(sp.f_basis);

    for (auto& [l, B] : t.bases) {
        std::vector<CycSparse> both;
        if (sp.inf_basis.count(l)) both = sp.inf_basis[l];
        if (sp.f_basis.count(l)) both.insert(both.end(), sp.f_basis[l].begin(), sp.f_basis[l].end());
        if (span_rank(both, F) != static_cast<int>(both.size())) {
            sp.direct = false;
            sp.witness = "g_inf and g_f meet at " + char_str(l);
        }
    }
    // [g, g_inf] in g_inf
    std::map<Character, std::vector<CycSparse>> images;
    for (auto& [l, B] : t.bases)
        for (auto& b : B)
            for (auto& [m, y] : Y) {
                auto nu = add(A, l, m);
                if (!t.bases.count(nu)) continue;
                auto v = bracket_vectors(b, *y, alg, F);
                if (!v.empty()) images[nu].push_back(v);
            }
    for (auto& [nu, vs] : images) {
        std::vector<CycSparse> base;
        if (sp.inf_basis.count(nu)) base = sp.inf_basis[nu];
        size_t d = base.size();
        base.insert(base.end(), vs.begin(), vs.end());
        if (span_rank(base, F) != static_cast<int>(d)) {
            sp.ideal = false;
            sp.witness = "[g, g_inf] leaves g_inf at " + char_str(nu);
        }
    }
    return sp;
}

ASimplicity a_simplicity(const TwistedRootSystem& S, const Instance& I, const IdealSplit& split) {
    if (!split.g_is_ginf()) throw Error(kErrInvalid, "a_simplicity needs g = g_inf");
    ASimplicity r;
    auto R = restricted_system(S);
    if (!R.roots.empty()) {
        auto comps = classify_type(R);
        r.r_irreducible = comps.size() == 1;
        r.witness = type_label(comps);
    } else {
        r.witness = "empty";
    }
    r.factors = I.num_factors();
    std::vector<int> parent(r.factors);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto& p : I.factor_perm)
        for (int f = 0; f < static_cast<int>(p.size()); ++f) parent[find(f)] = find(p[f]);
    std::set<int> roots;
    for (int f = 0; f < r.factors; ++f) roots.insert(find(f));
    r.orbits = static_cast<int>(roots.size());
    r.a_simple = r.orbits == 1;
    r.witness += " factors=" + std::to_string(r.factors) + " orbits=" + std::to_string(r.orbits);
    return r;
}

std::vector<Int> prime_support(Int n) {
    std::vector<Int> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

PrimeData prime_components(const WeightTable& t, const Instance& I, const GradedAlgebra* alg) {
    const auto& A = t.A;
    if (A.rank != 0) throw Error(kErrInvalid, "prime decomposition needs a finite A");
    PrimeData d;
    d.n = A.exponent();
    d.primes = prime_support(d.n);
    std::map<Character, std::vector<Int>> supp;
    for (auto& [c, m] : t.mult) {
        if (c.is_zero() || m == 0) continue;
        supp[c] = prime_support(char_order(A, c));
        d.dim_g += m;
    }
    for (Int p : d.primes) {
        d.dim_gp[p] = 0;
        d.derived_dim_gp[p] = -1;
    }
    for (auto& [c, s] : supp) {
        int m = t.mult_of(c);
        if (s.size() == 1) {
            d.dim_gp[s[0]] += m;
            d.dim_gprime += m;
        }
        d.dim_MI[s] += m;
    }
    int tot = 0;
    for (auto& [I_, m] : d.dim_MI) tot += m;
    d.eq5 = tot == d.dim_g;

    auto divides_all = [](const std::vector<Int>& s, const std::vector<Int>& ps) {
        for (Int p : s)
            if (std::find(ps.begin(), ps.end(), p) == ps.end()) return false;
        return true;
    };
    size_t np = d.primes.size();
    for (size_t mask = 1; mask < (size_t(1) << np); ++mask) {
        std::vector<Int> in, out;
        Int m = 1;
        for (size_t i = 0; i < np; ++i) {
            if (mask >> i & 1) {
                in.push_back(d.primes[i]);
                m *= d.primes[i];
            } else {
                out.push_back(d.primes[i]);
            }
        }
        int gm = 0, gmp = 0, rest = 0;
        for (auto& [c, s] : supp) {
            int k = t.mult_of(c);
            if (divides_all(s, in))
                gm += k;
            else if (divides_all(s, out))
                gmp += k;
            else
                rest += k;
        }
        d.eq6[m] = {gm, gmp, rest};
        if (gm + gmp + rest != d.dim_g) d.eq6_ok = false;
    }

    if (alg && t.has_bases) {
        d.orth_checked = true;
        auto disjoint = [](const std::vector<Int>& a, const std::vector<Int>& b) {
            for (Int x : a)
                if (std::find(b.begin(), b.end(), x) != b.end()) return false;
            return true;
        };
        for (auto& [a, sa] : supp)
            for (auto& [b, sb] : supp) {
                if (!(a < b) || !disjoint(sa, sb)) continue;
                if (!bracket_pairs(a, b, t, *alg).is_zero) {
                    d.orth = false;
                    d.witness = "[" + char_str(a) + ", " + char_str(b) + "] != 0";
                }
            }
        for (Int p : d.primes) {
            std::vector<CycSparse> vs;
            for (auto& [a, sa] : supp)
                for (auto& [b, sb] : supp) {
                    if (sa.size() != 1 || sb.size() != 1 || sa[0] != p || sb[0] != p) continue;
                    for (auto& u : t.bases.at(a))
                        for (auto& v : t.bases.at(b)) vs.push_back(bracket_vectors(u, v, *alg, t.field));
                }
            d.derived_dim_gp[p] = span_rank(vs, t.field);
        }
    }
    (void)I;
    return d;
}

WeightTable gprime_table(const WeightTable& t) {
    WeightTable r;
    r.A = t.A;
    r.L = t.L;
    r.field = t.field;
    for (auto& [c, m] : t.mult) {
        if (c.is_zero()) {
            r.mult[c] = m;
            continue;
        }
        if (prime_support(char_order(t.A, c)).size() == 1) r.mult[c] = m;
    }
    r.star = t.star;
    return r;
}

GPrimeWeyl gprime_weyl_equal(const Instance& I, const Instance* model) {
    GPrimeWeyl g;
    const auto& A = I.A();
    if (A.rank != 0) throw Error(kErrInvalid, "prime decomposition needs a finite A");
    auto tp = gprime_table(I.table);
    bool vogan = true;
    std::string wit;
    for (auto& [c, m] : I.table.mult) {
        if (c.is_zero() || m == 0) continue;
        if (vogan_count(c, I.table) != vogan_count(c, tp)) {
            vogan = false;
            wit = char_str(c);
        }
    }
    g.checks.add("vogan counts agree on g'", vogan, wit);
    if (!model) {
        g.skipped.push_back("W_small(G') = W_small(G)");
        return g;
    }
    std::map<Character, int> mt, mm;
    for (auto& [c, m] : tp.mult)
        if (m) mt[c] = m;
    for (auto& [c, m] : model->table.mult)
        if (m) mm[c] = m;
    g.checks.add("model table equals g' table", mt == mm && model->A() == A);
    auto S = assemble(I);
    auto Sp = assemble(*model);
    auto W = weyl_groups(S);
    auto Wp = weyl_groups(Sp);
    g.order_g = W.small.order();
    g.order_gprime = Wp.small.order();
    if (!W.explicit_coroots || !Wp.explicit_coroots) {
        g.skipped.push_back("W_small(G') = W_small(G)");
        return g;
    }
    g.checks.add("W_small(G') = W_small(G)", W.small.same_elements(Wp.small),
                 std::to_string(g.order_g) + " vs " + std::to_string(g.order_gprime));
    return g;
}

}  // namespace twr
