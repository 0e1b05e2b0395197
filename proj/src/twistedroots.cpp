#include "twr/twistedroots.hpp"

#include <algorithm>
#include <numeric>

namespace twr {

std::vector<Character> TwistedRootSystem::infinite_roots() const {
    std::vector<Character> v;
    for (auto& [c, m] : roots)
        if (!c.is_finite()) v.push_back(c);
    return v;
}

std::vector<Character> TwistedRootSystem::finite_roots() const {
    std::vector<Character> v;
    for (auto& [c, m] : roots)
        if (c.is_finite()) v.push_back(c);
    return v;
}

Cocharacter infinite_coroot(const Character& alpha, const GramForm& gram) {
    int r = static_cast<int>(gram.size());
    if (static_cast<int>(alpha.inf.size()) != r) throw Error(kErrShape, "gram does not match the character");
    if (alpha.is_finite()) throw Error(kErrInvalid, "coroot of a finite character");
    QVec Ga(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) Ga[i] += gram[i][j] * qi(alpha.inf[j]);
    Q aa = 0;
    for (int i = 0; i < r; ++i) aa += Ga[i] * qi(alpha.inf[i]);
    if (aa <= 0) throw Error(kErrCheck, "gram is not positive on " + char_str(alpha));
    Cocharacter out(r);
    for (int i = 0; i < r; ++i) {
        Q v = 2 * Ga[i] / aa;
        if (v.get_den() != 1)
            throw Error(kErrCheck, "strong integrality fails for " + char_str(alpha) + " at lambda = e_" +
                                       std::to_string(i) + " (value " + v.get_str() + ")");
        out[i] = v.get_num().get_si();
    }
    return out;
}

Int vogan_count(const Character& lambda, const WeightTable& t) {
    const auto& A = t.A;
    if (!lambda.is_finite()) throw Error(kErrInvalid, "vogan_count needs a finite character");
    Int n = char_order(A, lambda);
    if (n < 2) throw Error(kErrInvalid, "vogan_count needs a nontrivial character");
    Int out = 1;
    for (auto [p, e] : factorize(n)) {
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            int m = t.mult_of(scale(A, n / pk, lambda));
            for (int i = 0; i < m; ++i) out *= p;
        }
    }
    return out;
}

FixedPointCount fixed_point_count(const IntMat& y, Int order_bound) {
    int n = static_cast<int>(y.size());
    for (auto& row : y)
        if (static_cast<int>(row.size()) != n) throw Error(kErrShape, "matrix must be square");
    FixedPointCount f;
    f.order = matrix_order(y, order_bound);
    if (f.order == 0) throw Error(kErrInvalid, "matrix has no finite order within the bound");
    IntMat d = mat_identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[i][j] -= y[i][j];
    Z det = det_z(d);
    f.route1 = abs(det);
    auto fac = cyclotomic_factorization(charpoly(y), f.order);
    if (fac.empty() && n > 0) throw Error(kErrInternal, "characteristic polynomial is not cyclotomic");
    f.route2 = 1;
    for (auto [dd, m] : fac) {
        if (dd == 1) {
            f.positive_dim = true;
            continue;
        }
        auto pf = factorize(dd);
        if (pf.size() == 1)
            for (int i = 0; i < m; ++i) f.route2 *= zi(pf[0].first);
    }
    if (f.positive_dim) f.route2 = 0;
    return f;
}

// ---------------------------------------------------------------- oracle

namespace {

MonomialOperator op_power(const MonomialOperator& a, Int k, int N) {
    MonomialOperator r = MonomialOperator::identity(N, a.modulus);
    for (Int i = 0; i < k; ++i) r = a.compose(r);
    return r;
}

struct HomSolver {
    int off, m;
    Int Mc;
    std::vector<char> allowed;  // m*m
    std::vector<int> parent;
    std::vector<Int> pot;
    std::vector<char> zero;

    std::pair<int, Int> find(int u) {
        if (parent[u] == u) return {u, 0};
        auto [r, p] = find(parent[u]);
        parent[u] = r;
        pot[u] = mod_i(pot[u] + p, Mc);
        return {r, pot[u]};
    }

    // x_u = zeta^e x_v
    void link(int u, int v, Int e) {
        auto [ru, pu] = find(u);
        auto [rv, pv] = find(v);
        if (ru == rv) {
            if (mod_i(pu - e - pv, Mc) != 0) zero[ru] = 1;
            return;
        }
        parent[ru] = rv;
        pot[ru] = mod_i(e + pv - pu, Mc);
        if (zero[ru]) zero[rv] = 1;
    }

    int dim(const std::vector<MonomialOperator>& P, const std::vector<MonomialOperator>& Q, const IntVec& gamma) {
        int n2 = m * m;
        parent.resize(n2);
        std::iota(parent.begin(), parent.end(), 0);
        pot.assign(n2, 0);
        zero.assign(n2, 0);
        for (size_t j = 0; j < P.size(); ++j) {
            const auto& p = P[j];
            const auto& q = Q[j];
            std::vector<int> muinv(m);
            for (int b = 0; b < m; ++b) muinv[q.perm[off + b] - off] = b;
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    int u1 = a * m + (p.perm[off + b] - off);
                    int ai = muinv[a];
                    int u2 = ai * m + b;
                    Int e = gamma[j] + q.exps[off + ai] - p.exps[off + b];
                    bool a1 = allowed[u1], a2 = allowed[u2];
                    if (!a1 && !a2) continue;
                    if (!a1) {
                        zero[find(u2).first] = 1;
                        continue;
                    }
                    if (!a2) {
                        zero[find(u1).first] = 1;
                        continue;
                    }
                    link(u1, u2, e);
                }
        }
        int cnt = 0;
        for (int u = 0; u < n2; ++u)
            if (allowed[u] && parent[u] == u && !zero[u]) ++cnt;
        return cnt;
    }
};

// eigenvalue exponents (mod Mc) of a monomial operator restricted to a block; exps already mod Mc / Lc
std::vector<Int> spectrum(const MonomialOperator& a, int off, int m, Int Mc, Int Lc) {
    std::vector<Int> out;
    std::vector<char> seen(m, 0);
    Int M = Mc / Lc;
    for (int i = 0; i < m; ++i) {
        if (seen[i]) continue;
        Int s = 0;
        int len = 0;
        for (int j = i; !seen[j]; j = a.perm[off + j] - off) {
            seen[j] = 1;
            s += a.exps[off + j] / Lc;
            ++len;
        }
        for (int t = 0; t < len; ++t) out.push_back(mod_i((s + M * t) * (Lc / len), Mc));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> scalar_candidates(const std::vector<Int>& sp, const std::vector<Int>& sq, Int Mc) {
    std::vector<Int> out;
    std::vector<Int> seen;
    for (Int e : sq) {
        Int c = mod_i(sp[0] - e, Mc);
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
        seen.push_back(c);
        std::vector<Int> sh;
        for (Int x : sq) sh.push_back(mod_i(x + c, Mc));
        std::sort(sh.begin(), sh.end());
        if (sh == sp) out.push_back(c);
    }
    return out;
}

}  // namespace

bool oracle_applies(const Instance& I, const OracleOptions& opt) {
    if (!opt.enabled || I.alg.N > opt.max_N) return false;
    for (auto& b : I.alg.blocks)
        if (b.kind != "su") return false;
    for (auto& g : I.act.gens) {
        if (g.conj) return false;
    }
    for (auto& p : I.factor_perm)
        for (size_t b = 0; b < p.size(); ++b)
            if (p[b] != static_cast<int>(b)) return false;
    return true;
}

std::optional<std::vector<TorsionElement>> coroot_group_oracle(const Character& alpha, const Instance& I,
                                                               const OracleOptions& opt) {
    if (!oracle_applies(I, opt)) return std::nullopt;
    const auto& A = I.act.A;
    const auto& act = I.act;
    int N = I.alg.N;
    Int n = char_order(A, alpha);
    if (!alpha.is_finite() || n < 2) throw Error(kErrInvalid, "oracle needs a finite root");
    if (n_torsion_count(A, n) > 100000) return std::nullopt;

    Int M0 = n * act.torus_den;
    for (auto& g : act.gens) M0 = lcm_i(M0, g.modulus);
    for (Int d : A.inv) M0 = lcm_i(M0, d);
    Int Lc = 1;
    for (auto& b : I.alg.blocks)
        for (int l = 1; l <= b.size; ++l) Lc = lcm_i(Lc, l);
    Int Mc = M0 * Lc;

    std::vector<MonomialOperator> gens;
    for (auto& g : act.gens) gens.push_back(g.with_modulus(Mc));
    int s = A.s();

    auto same_weight = [&](int a, int b) {
        for (auto& row : act.torus)
            if (row[a] != row[b]) return false;
        return true;
    };

    std::vector<TorsionElement> out;
    for (auto& xi : n_torsion(A, n)) {
        if (pair(A, alpha, xi) != 0) continue;
        // rho(xi): diagonal torus part times products of generators
        IntVec dexp(N, 0);
        for (int a = 0; a < N; ++a) {
            Q e = 0;
            for (int k = 0; k < A.rank; ++k) e += xi.torus[k] * qi(act.torus[k][a]);
            e = e * qi(Mc) / qi(act.torus_den);
            if (e.get_den() != 1) throw Error(kErrInternal, "oracle modulus too small");
            dexp[a] = e.get_num().get_si();
        }
        MonomialOperator rx = MonomialOperator::diagonal(dexp, Mc);
        for (int j = 0; j < s; ++j) rx = rx.compose(op_power(gens[j], xi.fin[j], N));
        std::vector<MonomialOperator> img;
        for (int j = 0; j < s; ++j) {
            TorsionElement fj{QVec(A.rank, 0), IntVec(s, 0)};
            fj.fin[j] = 1;
            Q pr = pair(A, alpha, fj) * qi(n);
            Int k = pr.get_num().get_si();
            img.push_back(gens[j].compose(op_power(rx, k, N)));
        }
        bool ok = true;
        for (auto& blk : I.alg.blocks) {
            HomSolver H{blk.offset, blk.size, Mc, {}, {}, {}, {}};
            H.allowed.assign(blk.size * blk.size, 0);
            for (int a = 0; a < blk.size; ++a)
                for (int b = 0; b < blk.size; ++b) H.allowed[a * blk.size + b] = same_weight(blk.offset + a, blk.offset + b);
            IntVec zero_g(s, 0);
            int e1 = H.dim(gens, gens, zero_g);
            int e2 = H.dim(img, img, zero_g);
            if (e1 != e2) {
                ok = false;
                break;
            }
            std::vector<std::vector<Int>> cand(s);
            Int tuples = 1;
            for (int j = 0; j < s; ++j) {
                cand[j] = scalar_candidates(spectrum(gens[j], blk.offset, blk.size, Mc, Lc),
                                            spectrum(img[j], blk.offset, blk.size, Mc, Lc), Mc);
                tuples *= static_cast<Int>(cand[j].size());
            }
            if (tuples == 0) {
                ok = false;
                break;
            }
            if (tuples > opt.max_tuples) return std::nullopt;
            bool found = false;
            std::vector<size_t> idx(s, 0);
            while (!found) {
                IntVec gam(s);
                for (int j = 0; j < s; ++j) gam[j] = cand[j][idx[j]];
                if (H.dim(gens, img, gam) == e1) found = true;
                int j = 0;
                while (j < s && ++idx[j] == cand[j].size()) idx[j++] = 0;
                if (j == s) break;
            }
            if (!found) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(xi);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- assembly

TwistedRootSystem assemble(const Instance& I, const OracleOptions& opt) {
    TwistedRootSystem S;
    S.A = I.act.A;
    S.gram = I.gram;
    for (auto& [c, m] : I.table.mult)
        if (!c.is_zero()) S.roots[c] = m;
    for (auto& [c, m] : S.roots) {
        if (!c.is_finite()) {
            S.inf_coroots[c] = infinite_coroot(c, S.gram);
        } else {
            FiniteCorootData d;
            d.order = char_order(S.A, c);
            d.predicted = vogan_count(c, I.table);
            d.asserted = I.maximal;
            d.group = coroot_group_oracle(c, I, opt);
            S.fin[c] = d;
        }
    }
    return S;
}

Character reflect_char(const TwistedRootSystem& S, const Character& alpha, const Character& lambda) {
    const auto& cv = S.inf_coroots.at(alpha);
    Int k = 0;
    for (size_t i = 0; i < cv.size(); ++i) k += lambda.inf[i] * cv[i];
    return sub(S.A, lambda, scale(S.A, k, alpha));
}

TorsionElement reflect_torsion(const TwistedRootSystem& S, const Character& alpha, const TorsionElement& t) {
    const auto& cv = S.inf_coroots.at(alpha);
    Q th = pair(S.A, alpha, t);
    TorsionElement r = t;
    for (size_t i = 0; i < cv.size(); ++i) r.torus[i] -= th * qi(cv[i]);
    return canon(S.A, r);
}

Character transvect_char(const AbelianGroup& A, const Character& alpha, const TorsionElement& xi,
                         const Character& lambda) {
    Int n = char_order(A, alpha);
    Q m = pair(A, lambda, xi) * qi(n);
    if (m.get_den() != 1) throw Error(kErrInvalid, "xi is not n-torsion");
    return sub(A, lambda, scale(A, m.get_num().get_si(), alpha));
}

TorsionElement transvect_torsion(const AbelianGroup& A, const Character& alpha, const TorsionElement& xi,
                                 const TorsionElement& t) {
    Int n = char_order(A, alpha);
    Q k = pair(A, alpha, t) * qi(n);
    if (k.get_den() != 1) throw Error(kErrInvalid, "alpha(t) is not an n-th root of unity");
    return add(A, t, scale(A, k.get_num().get_si(), xi));
}

namespace {

std::vector<TorsionElement> sorted(std::vector<TorsionElement> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

template <class F>
bool roots_stable(const TwistedRootSystem& S, F f, std::string& wit) {
    for (auto& [c, m] : S.roots) {
        auto img = f(c);
        auto it = S.roots.find(img);
        if (it == S.roots.end()) {
            wit = char_str(c) + " -> " + char_str(img) + " not a root";
            return false;
        }
        if (it->second != m) {
            wit = char_str(c) + " -> " + char_str(img) + " multiplicity changes";
            return false;
        }
    }
    return true;
}

// transport of coroot groups; G maps torsion elements, F maps characters
template <class F, class G>
bool coroots_stable(const TwistedRootSystem& S, F f, G g, std::string& wit) {
    for (auto& [b, d] : S.fin) {
        auto img = f(b);
        auto it = S.fin.find(img);
        if (it == S.fin.end()) {
            wit = "image of finite root " + char_str(b) + " is not a finite root";
            return false;
        }
        if (it->second.predicted != d.predicted) {
            wit = "coroot order changes at " + char_str(b);
            return false;
        }
        if (d.group && it->second.group) {
            std::vector<TorsionElement> t;
            for (auto& x : *d.group) t.push_back(g(x));
            if (sorted(t) != *it->second.group) {
                wit = "coroot group of " + char_str(b) + " not transported";
                return false;
            }
        }
    }
    return true;
}

}  // namespace

CheckReport validate_axioms(const TwistedRootSystem& S) {
    CheckReport rep;
    const auto& A = S.A;
    std::string wit;

    // (1)
    bool ok = true;
    for (auto& [c, m] : S.roots) {
        if (c.is_zero() || m <= 0) {
            ok = false;
            wit = "zero or empty root " + char_str(c);
        }
        if (!(canon(A, c) == c)) {
            ok = false;
            wit = "non-canonical character " + char_str(c);
        }
        if (!c.is_finite() && !S.inf_coroots.count(c)) {
            ok = false;
            wit = "infinite root without coroot " + char_str(c);
        }
        if (c.is_finite() && !S.fin.count(c)) {
            ok = false;
            wit = "finite root without coroot data " + char_str(c);
        }
    }
    rep.add("(1) partition", ok, ok ? "" : wit);
    ok = true;
    wit.clear();
    for (auto& a : S.infinite_roots()) {
        if (S.roots.at(a) != 1) {
            ok = false;
            wit = "dim g_alpha = " + std::to_string(S.roots.at(a)) + " at " + char_str(a);
        }
        if (!S.is_root(neg(A, a))) {
            ok = false;
            wit = "-alpha missing for " + char_str(a);
        }
        for (Int k = 2; k <= 4; ++k)
            if (S.is_root(scale(A, k, a)) || S.is_root(scale(A, -k, a))) {
                ok = false;
                wit = std::to_string(k) + " * " + char_str(a) + " is a root";
            }
    }
    rep.add("(1) infinite roots", ok, wit);

    // (2)
    ok = true;
    wit.clear();
    for (auto& a : S.infinite_roots()) {
        try {
            auto cv = infinite_coroot(a, S.gram);
            Int aa = 0;
            for (size_t i = 0; i < cv.size(); ++i) aa += a.inf[i] * cv[i];
            if (aa != 2 || cv != S.inf_coroots.at(a)) {
                ok = false;
                wit = "alpha(coroot) != 2 at " + char_str(a);
            }
        } catch (const Error& e) {
            ok = false;
            wit = e.what();
        }
    }
    rep.add("(2) strong integrality", ok, wit);

    // (3)
    ok = true;
    wit.clear();
    for (auto& [a, d] : S.fin) {
        if (d.predicted < 1) {
            ok = false;
            wit = "empty coroot group at " + char_str(a);
        }
        if (!d.group) continue;
        const auto& G = *d.group;
        std::set<TorsionElement> set(G.begin(), G.end());
        if (!set.count(canon(A, TorsionElement{QVec(A.rank, 0), IntVec(A.s(), 0)}))) {
            ok = false;
            wit = "coroot group misses the identity at " + char_str(a);
        }
        for (auto& x : G) {
            if (pair(A, a, x) != 0) {
                ok = false;
                wit = torsion_str(x) + " not in ker " + char_str(a);
            }
            if (!(scale(A, d.order, x) == canon(A, TorsionElement{QVec(A.rank, 0), IntVec(A.s(), 0)}))) {
                ok = false;
                wit = torsion_str(x) + " not n-torsion";
            }
            for (auto& y : G)
                if (!set.count(add(A, x, y))) {
                    ok = false;
                    wit = "coroot group of " + char_str(a) + " not closed";
                }
        }
    }
    rep.add("(3) coroot groups", ok, wit);

    // (4)
    ok = true;
    wit.clear();
    for (auto& a : S.infinite_roots()) {
        auto f = [&](const Character& l) { return reflect_char(S, a, l); };
        auto g = [&](const TorsionElement& t) { return reflect_torsion(S, a, t); };
        if (!roots_stable(S, f, wit) || !coroots_stable(S, f, g, wit)) {
            ok = false;
            wit = "s_" + char_str(a) + ": " + wit;
            break;
        }
    }
    rep.add("(4) reflections", ok, wit);

    // (5)
    ok = true;
    wit.clear();
    for (auto& [a, d] : S.fin) {
        for (Int k = 2; k < d.order; ++k) {
            if (gcd_i(k, d.order) != 1) continue;
            auto ka = scale(A, k, a);
            auto it = S.fin.find(ka);
            if (it == S.fin.end()) {
                ok = false;
                wit = std::to_string(k) + " * " + char_str(a) + " is not a root";
                continue;
            }
            if (it->second.predicted != d.predicted || (d.group && it->second.group && *d.group != *it->second.group)) {
                ok = false;
                wit = "coroot groups of " + char_str(a) + " and " + char_str(ka) + " differ";
            }
        }
    }
    rep.add("(5) galois", ok, wit);

    // (6)
    ok = true;
    wit.clear();
    bool any_explicit = false;
    for (auto& [a, d] : S.fin) {
        if (!d.group) continue;
        any_explicit = true;
        for (auto& xi : *d.group) {
            auto f = [&](const Character& l) { return transvect_char(A, a, xi, l); };
            auto g = [&](const TorsionElement& t) { return transvect_torsion(A, a, xi, t); };
            bool good = false;
            try {
                good = roots_stable(S, f, wit) && coroots_stable(S, f, g, wit);
            } catch (const Error& e) {
                wit = e.what();
            }
            if (!good) {
                ok = false;
                wit = "s_(" + char_str(a) + "," + torsion_str(xi) + "): " + wit;
                break;
            }
        }
        if (!ok) break;
    }
    rep.add("(6) transvections", ok, ok && !any_explicit && !S.fin.empty() ? "order level only" : wit);
    return rep;
}

LatticeRootSystem restricted_system(const TwistedRootSystem& S) {
    std::map<IntVec, int> m;
    for (auto& [c, k] : S.roots)
        if (!c.is_finite()) m[c.inf] += k;
    return make_root_system(S.gram, m);
}

CheckReport check_restricted(const TwistedRootSystem& S) {
    auto R = restricted_system(S);
    std::vector<IntVec> gens;
    for (int i = 0; i < S.A.rank; ++i) {
        IntVec e(S.A.rank, 0);
        e[i] = 1;
        gens.push_back(e);
    }
    return verify_root_system(R, gens);
}

}  // namespace twr
