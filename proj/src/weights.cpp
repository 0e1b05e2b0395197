#include <algorithm>
#include <deque>
#include <set>

#include "twr/realization.hpp"

namespace twr {

int WeightTable::mult_of(const Character& c) const {
    auto it = mult.find(c);
    return it == mult.end() ? 0 : it->second;
}

int WeightTable::total() const {
    int s = 0;
    for (auto& [c, m] : mult) s += m;
    return s;
}

Int action_conductor(const ActionData& act) {
    Int L = 2;
    for (auto& g : act.gens) L = lcm_i(L, g.modulus);
    for (Int d : act.A.inv) L = lcm_i(L, d);
    return L;
}

namespace {

struct Orbit {
    std::vector<int> members;
    std::vector<IntVec> g;
    IntVec ph;
    IntVec tau;
    std::vector<IntVec> allowed;
};

Int lambda_exp(const IntVec& lambda, const IntVec& g, const IntVec& d, Int L) {
    Int s = 0;
    for (size_t j = 0; j < d.size(); ++j) s += lambda[j] * g[j] * (L / d[j]);
    return mod_i(s, L);
}

std::vector<IntVec> all_finite_chars(const IntVec& d) {
    std::vector<IntVec> out;
    IntVec cur(d.size(), 0);
    while (true) {
        out.push_back(cur);
        size_t k = 0;
        while (k < d.size()) {
            if (++cur[k] < d[k]) break;
            cur[k] = 0;
            ++k;
        }
        if (k == d.size()) break;
    }
    return out;
}

std::vector<Orbit> orbits(const MonomialBasis& B, const std::vector<BasisAction>& acts, const IntVec& d, Int L,
                          const std::vector<IntVec>& weights, const std::vector<IntVec>& fin_chars) {
    int n = B.size();
    int s = static_cast<int>(acts.size());
    std::vector<int> seen(n, -1);
    std::vector<Orbit> out;
    for (int i0 = 0; i0 < n; ++i0) {
        if (seen[i0] >= 0) continue;
        Orbit o;
        std::vector<int> local(n, -1);
        std::vector<std::pair<IntVec, Int>> schreier;
        auto visit = [&](int i, const IntVec& g, Int ph) {
            local[i] = static_cast<int>(o.members.size());
            o.members.push_back(i);
            o.g.push_back(g);
            o.ph.push_back(ph);
        };
        visit(i0, IntVec(s, 0), 0);
        for (size_t q = 0; q < o.members.size(); ++q) {
            int i = o.members[q];
            for (int j = 0; j < s; ++j) {
                int k = acts[j].perm[i];
                IntVec ng = o.g[q];
                ng[j] = mod_i(ng[j] + 1, d[j]);
                Int nph = mod_i(o.ph[q] + acts[j].phase[i], L);
                if (local[k] < 0) {
                    if (seen[k] >= 0) throw Error(kErrInternal, "orbit bookkeeping");
                    visit(k, ng, nph);
                } else {
                    int lk = local[k];
                    IntVec sg(s);
                    bool nz = false;
                    for (int t = 0; t < s; ++t) {
                        sg[t] = mod_i(ng[t] - o.g[lk][t], d[t]);
                        nz = nz || sg[t] != 0;
                    }
                    Int chi = mod_i(nph - o.ph[lk], L);
                    if (!nz && chi != 0) throw Error(kErrCheck, "group relations violated on the frame");
                    if (nz) schreier.push_back({sg, chi});
                }
            }
        }
        for (int m : o.members) {
            seen[m] = 1;
            if (weights[m] != weights[i0]) throw Error(kErrCheck, "generators do not commute with the torus");
        }
        o.tau = weights[i0];
        std::sort(schreier.begin(), schreier.end());
        schreier.erase(std::unique(schreier.begin(), schreier.end()), schreier.end());
        for (auto& lam : fin_chars) {
            bool ok = true;
            for (auto& [sg, chi] : schreier)
                if (lambda_exp(lam, sg, d, L) != chi) {
                    ok = false;
                    break;
                }
            if (ok) o.allowed.push_back(lam);
        }
        if (o.allowed.size() != o.members.size()) throw Error(kErrCheck, "orbit and character counts disagree");
        out.push_back(std::move(o));
    }
    return out;
}

std::vector<IntVec> torus_weights(const MonomialBasis& B, const IntMat& W, Int den) {
    std::vector<IntVec> w;
    int r = static_cast<int>(W.size());
    for (auto& m : B.elems) {
        IntVec v(r, 0);
        for (int k = 0; k < r; ++k) v[k] = W[k][m[0].row] - W[k][m[0].col];
        for (auto& e : m)
            for (int k = 0; k < r; ++k)
                if (W[k][e.row] - W[k][e.col] != v[k]) throw Error(kErrCheck, "frame element is not a torus weight vector");
        for (auto& x : v) {
            if (x % den) throw Error(kErrCheck, "torus weight not integral");
            x /= den;
        }
        w.push_back(v);
    }
    return w;
}

BasisAction compose_act(const BasisAction& a, const BasisAction& b, Int L) {
    // a after b
    BasisAction r;
    size_t n = a.perm.size();
    r.perm.resize(n);
    r.phase.resize(n);
    for (size_t i = 0; i < n; ++i) {
        r.perm[i] = a.perm[b.perm[i]];
        r.phase[i] = mod_i(b.phase[i] + a.phase[b.perm[i]], L);
    }
    return r;
}

BasisAction identity_act(int n) {
    BasisAction r;
    r.perm.resize(n);
    for (int i = 0; i < n; ++i) r.perm[i] = i;
    r.phase.assign(n, 0);
    return r;
}

bool is_identity(const BasisAction& a) {
    for (size_t i = 0; i < a.perm.size(); ++i)
        if (a.perm[i] != static_cast<int>(i) || a.phase[i] != 0) return false;
    return true;
}

}  // namespace

WeightTable weight_table(const GradedAlgebra& alg, const ActionData& act, const WeightOptions& opt) {
    const AbelianGroup& A = act.A;
    if (static_cast<int>(act.gens.size()) != A.s()) throw Error(kErrShape, "one generator per invariant factor");
    if (static_cast<int>(act.torus.size()) != A.rank) throw Error(kErrShape, "one torus row per rank");
    for (auto& row : act.torus)
        if (static_cast<int>(row.size()) != alg.N) throw Error(kErrShape, "torus weight length");
    WeightTable t;
    t.A = A;
    t.L = action_conductor(act);
    t.field = cyc_field(t.L);
    Int L = t.L;
    const IntVec& d = A.inv;
    int s = A.s();

    std::vector<BasisAction> fa, ca;
    for (auto& g : act.gens) {
        fa.push_back(act_on_basis(g, alg.frame, L));
        if (alg.center.size()) ca.push_back(act_on_basis(g, alg.center, L));
    }
    for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j) {
            auto x = compose_act(fa[i], fa[j], L), y = compose_act(fa[j], fa[i], L);
            if (x.perm != y.perm || x.phase != y.phase)
                throw Error(kErrCheck, "generators " + std::to_string(i) + " and " + std::to_string(j) +
                                           " do not commute modulo scalars");
        }
        BasisAction p = identity_act(alg.frame.size());
        for (Int k = 0; k < d[i]; ++k) p = compose_act(fa[i], p, L);
        if (!is_identity(p)) throw Error(kErrCheck, "generator " + std::to_string(i) + " has order not dividing " + std::to_string(d[i]));
    }

    auto fw = torus_weights(alg.frame, act.torus, act.torus_den);
    auto cw = torus_weights(alg.center, act.torus, act.torus_den);
    auto fin_chars = all_finite_chars(d);
    auto forb = orbits(alg.frame, fa, d, L, fw, fin_chars);
    auto corb = orbits(alg.center, ca, d, L, cw, fin_chars);

    std::map<Character, int> fmult, cmult;
    for (auto& o : forb)
        for (auto& lam : o.allowed) fmult[Character{o.tau, lam}] += 1;
    for (auto& o : corb)
        for (auto& lam : o.allowed) cmult[Character{o.tau, lam}] += 1;
    for (auto& [c, m] : fmult) {
        int cm = cmult.count(c) ? cmult[c] : 0;
        if (m - cm > 0) t.mult[c] = m - cm;
        if (m - cm < 0) throw Error(kErrInternal, "center weight missing from the frame");
    }
    for (auto& [c, m] : cmult)
        if (!fmult.count(c)) throw Error(kErrInternal, "center weight missing from the frame");

    Character zero = zero_char(A);
    t.star = t.mult_of(zero) == A.rank;

    // counting formula: mult(lambda) = |F|^{-1} sum_f lambda(f)^{-1} tr(Ad f | torus block)
    Int order = A.finite_order();
    if (order <= opt.counting_limit) {
        std::map<IntVec, std::vector<int>> fblock, cblock;
        for (int i = 0; i < alg.frame.size(); ++i) fblock[fw[i]].push_back(i);
        for (int i = 0; i < alg.center.size(); ++i) cblock[cw[i]].push_back(i);
        // all elements of F with their frame/center actions
        std::vector<IntVec> elems = fin_chars;  // same index set prod Z/d_j
        std::vector<BasisAction> eact, ecact;
        for (auto& e : elems) {
            BasisAction p = identity_act(alg.frame.size());
            BasisAction q = identity_act(alg.center.size());
            for (int j = 0; j < s; ++j)
                for (Int k = 0; k < e[j]; ++k) {
                    p = compose_act(fa[j], p, L);
                    if (alg.center.size()) q = compose_act(ca[j], q, L);
                }
            eact.push_back(p);
            ecact.push_back(q);
        }
        std::set<IntVec> taus;
        for (auto& [w, v] : fblock) taus.insert(w);
        for (auto& tau : taus) {
            // trace counts per element, indexed by exponent
            std::vector<IntVec> tr(elems.size(), IntVec(L, 0));
            for (size_t e = 0; e < elems.size(); ++e) {
                for (int i : fblock[tau])
                    if (eact[e].perm[i] == i) tr[e][eact[e].phase[i]] += 1;
                if (cblock.count(tau))
                    for (int i : cblock[tau])
                        if (ecact[e].perm[i] == i) tr[e][ecact[e].phase[i]] -= 1;
            }
            for (auto& lam : fin_chars) {
                IntVec acc(L, 0);
                for (size_t e = 0; e < elems.size(); ++e) {
                    Int shift = lambda_exp(lam, elems[e], d, L);
                    for (Int x = 0; x < L; ++x)
                        if (tr[e][x]) acc[mod_i(x - shift, L)] += tr[e][x];
                }
                Cyc v(t.field);
                for (Int x = 0; x < L; ++x)
                    if (acc[x]) v += Cyc::zeta(t.field, x) * Cyc::rational(t.field, qi(acc[x]));
                Character c{tau, lam};
                Cyc expect = Cyc::rational(t.field, qi(order * t.mult_of(c)));
                if (v != expect)
                    throw Error(kErrCheck, "counting formula disagrees at " + char_str(c));
            }
        }
        t.counting_checked = true;
    }

    bool materialize = opt.materialize || alg.dim() <= opt.materialize_limit;
    if (materialize) {
        const CycField* F = t.field;
        std::map<Character, std::vector<CycSparse>> fvec;
        for (auto& o : forb)
            for (auto& lam : o.allowed) {
                CycSparse v;
                for (size_t m = 0; m < o.members.size(); ++m)
                    v.push_back({o.members[m], Cyc::zeta(F, o.ph[m] - lambda_exp(lam, o.g[m], d, L))});
                std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
                fvec[Character{o.tau, lam}].push_back(v);
            }
        // diagonal frame index -> su block
        std::map<int, int> diag_block;
        for (size_t b = 0; b < alg.blocks.size(); ++b) {
            auto& blk = alg.blocks[b];
            if (blk.kind != "su") continue;
            for (int a = 0; a < blk.size; ++a)
                diag_block[alg.frame.pos.at(static_cast<long long>(blk.offset + a) * alg.N + blk.offset + a).first] =
                    static_cast<int>(b);
        }
        for (auto& [c, vs] : fvec) {
            int want = t.mult_of(c);
            if (want == 0) continue;
            if (!cmult.count(c)) {
                t.bases[c] = vs;
                continue;
            }
            // intersect with the kernel of the block traces
            std::vector<int> blks;
            for (auto& b : alg.blocks)
                if (b.kind == "su") blks.push_back(static_cast<int>(&b - &alg.blocks[0]));
            CycMat T(blks.size(), CycVec(vs.size(), Cyc::zero(F)));
            for (size_t m = 0; m < vs.size(); ++m)
                for (auto& [idx, val] : vs[m]) {
                    auto it = diag_block.find(idx);
                    if (it == diag_block.end()) continue;
                    size_t row = std::find(blks.begin(), blks.end(), it->second) - blks.begin();
                    T[row][m] += val;
                }
            auto ker = cyc_nullspace(T, vs.size(), F);
            if (static_cast<int>(ker.size()) != want) throw Error(kErrInternal, "trace kernel has the wrong dimension");
            std::vector<CycSparse> basis;
            for (auto& kv : ker) {
                std::map<int, Cyc> acc;
                for (size_t m = 0; m < vs.size(); ++m) {
                    if (kv[m].is_zero()) continue;
                    for (auto& [idx, val] : vs[m]) {
                        auto it = acc.find(idx);
                        if (it == acc.end())
                            acc.emplace(idx, kv[m] * val);
                        else
                            it->second += kv[m] * val;
                    }
                }
                CycSparse v;
                for (auto& [idx, val] : acc)
                    if (!val.is_zero()) v.push_back({idx, val});
                basis.push_back(v);
            }
            t.bases[c] = basis;
        }
        t.has_bases = true;
    }
    return t;
}

CycSparse bracket_vectors(const CycSparse& u, const CycSparse& v, const GradedAlgebra& alg, const CycField* F) {
    std::map<int, Cyc> acc;
    for (auto& [i, a] : u)
        for (auto& [j, b] : v) {
            const auto& br = alg.frame_bracket(i, j);
            if (br.empty()) continue;
            Cyc ab = a * b;
            for (auto& [k, q] : br) {
                Cyc term = q == 1 ? ab : ab * Cyc::rational(F, q);
                auto it = acc.find(k);
                if (it == acc.end())
                    acc.emplace(k, term);
                else
                    it->second += term;
            }
        }
    CycSparse out;
    for (auto& [k, x] : acc)
        if (!x.is_zero()) out.push_back({k, x});
    return out;
}

int span_rank(const std::vector<CycSparse>& vs, const CycField* F) {
    std::set<int> cols;
    for (auto& v : vs)
        for (auto& [k, x] : v) cols.insert(k);
    if (cols.empty()) return 0;
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
    return cyc_rank(M);
}

BracketSpan bracket_pairs(const Character& l, const Character& m, const WeightTable& t, const GradedAlgebra& alg) {
    if (!t.has_bases) throw Error(kErrInvalid, "weight-space bases not materialized");
    auto a = t.bases.find(l), b = t.bases.find(m);
    if (a == t.bases.end() || b == t.bases.end()) throw Error(kErrInvalid, "character is not a weight");
    std::vector<CycSparse> vs;
    for (auto& u : a->second)
        for (auto& v : b->second) vs.push_back(bracket_vectors(u, v, alg, t.field));
    BracketSpan s;
    s.dim = span_rank(vs, t.field);
    s.is_zero = s.dim == 0;
    return s;
}

}  // namespace twr
