#include "twr/realization.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace twr {

// ---------------------------------------------------------------- monomial operators

MonomialOperator MonomialOperator::identity(int n, Int modulus) {
    MonomialOperator m;
    m.perm.resize(n);
    std::iota(m.perm.begin(), m.perm.end(), 0);
    m.exps.assign(n, 0);
    m.modulus = modulus;
    return m;
}

MonomialOperator MonomialOperator::diagonal(const IntVec& exps, Int modulus) {
    MonomialOperator m = identity(static_cast<int>(exps.size()), modulus);
    for (size_t i = 0; i < exps.size(); ++i) m.exps[i] = mod_i(exps[i], modulus);
    return m;
}

MonomialOperator MonomialOperator::permutation(const std::vector<int>& perm) {
    MonomialOperator m = identity(static_cast<int>(perm.size()), 1);
    m.perm = perm;
    return m;
}

MonomialOperator MonomialOperator::with_modulus(Int mnew) const {
    if (mnew % modulus != 0) throw Error(kErrInvalid, "modulus must be a multiple");
    MonomialOperator m = *this;
    for (auto& x : m.exps) x = x * (mnew / modulus);
    m.modulus = mnew;
    return m;
}

MonomialOperator MonomialOperator::compose(const MonomialOperator& o) const {
    if (size() != o.size()) throw Error(kErrShape, "operator sizes differ");
    Int M = lcm_i(modulus, o.modulus);
    MonomialOperator a = with_modulus(M), b = o.with_modulus(M);
    // the right factor enters conjugated when the left one is antiholomorphic
    if (a.conj)
        for (auto& x : b.exps) x = mod_i(-x, M);
    MonomialOperator r;
    r.modulus = M;
    r.conj = a.conj != b.conj;
    int n = size();
    r.perm.resize(n);
    r.exps.resize(n);
    for (int c = 0; c < n; ++c) {
        r.perm[c] = a.perm[b.perm[c]];
        r.exps[c] = mod_i(b.exps[c] + a.exps[b.perm[c]], M);
    }
    return r;
}

MonomialOperator MonomialOperator::inverse() const {
    int n = size();
    // P^{-1} e_{perm[b]} = zeta^{-exps[b]} e_b
    MonomialOperator r;
    r.modulus = modulus;
    r.perm.resize(n);
    r.exps.resize(n);
    for (int b = 0; b < n; ++b) {
        r.perm[perm[b]] = b;
        r.exps[perm[b]] = mod_i(-exps[b], modulus);
    }
    if (conj) {
        // (X -> -P X^T P^{-1})^{-1} is X -> -Q X^T Q^{-1} with Q = P^T = conj(P^{-1})
        for (auto& x : r.exps) x = mod_i(-x, modulus);
        r.conj = true;
    }
    return r;
}

bool MonomialOperator::operator==(const MonomialOperator& o) const {
    if (conj != o.conj || perm != o.perm) return false;
    Int M = lcm_i(modulus, o.modulus);
    auto a = with_modulus(M), b = o.with_modulus(M);
    return a.exps == b.exps;
}

std::string MonomialOperator::str() const {
    std::ostringstream os;
    os << (conj ? "conj" : "") << "[";
    for (int i = 0; i < size(); ++i) os << (i ? " " : "") << perm[i] << ":" << exps[i];
    os << "]/" << modulus;
    return os.str();
}

MonomialOperator kron(const MonomialOperator& a, const MonomialOperator& b) {
    Int M = lcm_i(a.modulus, b.modulus);
    auto A = a.with_modulus(M), B = b.with_modulus(M);
    int na = a.size(), nb = b.size();
    MonomialOperator r;
    r.modulus = M;
    r.conj = a.conj || b.conj;
    r.perm.resize(na * nb);
    r.exps.resize(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            r.perm[i * nb + j] = A.perm[i] * nb + B.perm[j];
            r.exps[i * nb + j] = mod_i(A.exps[i] + B.exps[j], M);
        }
    return r;
}

MonomialOperator direct_sum(const std::vector<MonomialOperator>& ops) {
    MonomialOperator r;
    r.modulus = 1;
    for (auto& o : ops) r.modulus = lcm_i(r.modulus, o.modulus);
    int off = 0;
    for (size_t k = 0; k < ops.size(); ++k) {
        auto o = ops[k].with_modulus(r.modulus);
        if (k && o.conj != r.conj) throw Error(kErrInvalid, "mixed conjugation in direct sum");
        r.conj = o.conj;
        for (int i = 0; i < o.size(); ++i) {
            r.perm.push_back(o.perm[i] + off);
            r.exps.push_back(o.exps[i]);
        }
        off += o.size();
    }
    return r;
}

// ---------------------------------------------------------------- bases and algebras

static long long pos_key(int N, int r, int c) { return static_cast<long long>(r) * N + c; }

void MonomialBasis::add(const SparseMat& m) {
    int idx = size();
    for (auto& e : m) {
        long long k = pos_key(N, e.row, e.col);
        if (pos.count(k)) throw Error(kErrInternal, "basis supports overlap");
        pos[k] = {idx, e.coeff};
    }
    elems.push_back(m);
}

namespace {

void add_su_block(GradedAlgebra& g, int off, int n) {
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.frame.add({{off + a, off + b, 1}});
    SparseMat id;
    for (int a = 0; a < n; ++a) id.push_back({off + a, off + a, 1});
    g.center.add(id);
}

void add_so_block(GradedAlgebra& g, int off, const std::vector<int>& beta) {
    int n = static_cast<int>(beta.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            SparseMat m{{off + beta[a], off + b, 1}, {off + beta[b], off + a, -1}};
            std::sort(m.begin(), m.end(), [](auto& x, auto& y) { return std::tie(x.row, x.col) < std::tie(y.row, y.col); });
            g.frame.add(m);
        }
}

void add_sp_block(GradedAlgebra& g, int off, const std::vector<int>& pi, const std::vector<int>& sign) {
    int n = static_cast<int>(pi.size());
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            SparseMat m;
            if (a == b) {
                m.push_back({off + pi[a], off + a, sign[a]});
            } else {
                m.push_back({off + pi[a], off + b, sign[a]});
                m.push_back({off + pi[b], off + a, sign[b]});
            }
            std::sort(m.begin(), m.end(), [](auto& x, auto& y) { return std::tie(x.row, x.col) < std::tie(y.row, y.col); });
            g.frame.add(m);
        }
}

}  // namespace

GradedAlgebra build_from_blocks(const std::vector<BlockSpec>& blocks, const std::string& name) {
    GradedAlgebra g;
    g.name = name;
    int N = 0;
    for (auto& b : blocks) N += b.n;
    g.N = N;
    g.frame.N = N;
    g.center.N = N;
    int off = 0;
    for (auto& b : blocks) {
        if (b.n < 1) throw Error(kErrInvalid, "empty block");
        if (b.kind == "su") {
            if (b.n < 2) throw Error(kErrInvalid, "su block needs n >= 2");
            add_su_block(g, off, b.n);
        } else if (b.kind == "so") {
            std::vector<int> beta = b.perm;
            if (beta.empty()) {
                beta.resize(b.n);
                std::iota(beta.begin(), beta.end(), 0);
            }
            for (int a = 0; a < b.n; ++a)
                if (beta[beta[a]] != a) throw Error(kErrInvalid, "so form must be a symmetric permutation");
            add_so_block(g, off, beta);
        } else if (b.kind == "sp") {
            if (b.n % 2) throw Error(kErrInvalid, "sp block needs even size");
            std::vector<int> pi = b.perm, sg = b.sign;
            if (pi.empty()) {
                int h = b.n / 2;
                pi.resize(b.n);
                sg.resize(b.n);
                // Omega = [[0, I], [-I, 0]], Omega^{-1} = [[0, -I], [I, 0]]
                for (int a = 0; a < h; ++a) {
                    pi[a] = a + h;
                    sg[a] = 1;
                    pi[a + h] = a;
                    sg[a + h] = -1;
                }
            }
            add_sp_block(g, off, pi, sg);
        } else {
            throw Error(kErrInvalid, "unknown block kind " + b.kind);
        }
        g.blocks.push_back({b.kind, off, b.n});
        off += b.n;
    }
    return g;
}

GradedAlgebra build_algebra(const std::string& kind, int n) {
    int dim = kind == "su" ? n * n - 1 : kind == "so" ? n * (n - 1) / 2 : kind == "sp" ? n * (2 * n + 1) : -1;
    if (dim < 0) throw Error(kErrInvalid, "unknown algebra kind " + kind);
    if (dim > 300) throw Error(kErrBound, "algebra too large");
    BlockSpec b{kind, kind == "sp" ? 2 * n : n, {}, {}};
    return build_from_blocks({b}, kind + "(" + std::to_string(n) + ")");
}

std::vector<std::pair<int, Q>> GradedAlgebra::frame_coords(const std::map<std::pair<int, int>, Q>& m) const {
    std::map<int, Q> coords;
    for (auto& [rc, v] : m) {
        if (v == 0) continue;
        auto it = frame.pos.find(pos_key(N, rc.first, rc.second));
        if (it == frame.pos.end()) throw Error(kErrInternal, "matrix outside the frame span");
        auto [idx, coeff] = it->second;
        Q c = v / qi(coeff);
        auto f = coords.find(idx);
        if (f == coords.end())
            coords[idx] = c;
        else if (f->second != c)
            throw Error(kErrInternal, "matrix not in the frame span");
    }
    return {coords.begin(), coords.end()};
}

const std::vector<std::pair<int, Q>>& GradedAlgebra::frame_bracket(int i, int j) const {
    long long key = static_cast<long long>(i) * frame.size() + j;
    auto it = bracket_cache.find(key);
    if (it != bracket_cache.end()) return it->second;
    std::map<std::pair<int, int>, Q> m;
    for (auto& x : frame.elems[i])
        for (auto& y : frame.elems[j]) {
            if (x.col == y.row) m[{x.row, y.col}] += qi(x.coeff * y.coeff);
            if (y.col == x.row) m[{y.row, x.col}] -= qi(x.coeff * y.coeff);
        }
    return bracket_cache.emplace(key, frame_coords(m)).first->second;
}

// ---------------------------------------------------------------- structure constants

StructureConstants structure_constants(const GradedAlgebra& alg) {
    StructureConstants sc;
    // basis of g: non-diagonal frame elements, then H_a = E_aa - E_{a+1,a+1} per su block
    std::vector<std::vector<std::pair<int, Q>>> in_frame;
    std::vector<bool> diag(alg.frame.size(), false);
    for (auto& b : alg.blocks)
        if (b.kind == "su")
            for (int a = 0; a < b.size; ++a) diag[alg.frame.pos.at(pos_key(alg.N, b.offset + a, b.offset + a)).first] = true;
    for (int i = 0; i < alg.frame.size(); ++i)
        if (!diag[i]) {
            in_frame.push_back({{i, Q(1)}});
            sc.basis.push_back(alg.frame.elems[i]);
        }
    size_t nondiag = in_frame.size();
    for (auto& b : alg.blocks)
        if (b.kind == "su")
            for (int a = 0; a + 1 < b.size; ++a) {
                int p = alg.frame.pos.at(pos_key(alg.N, b.offset + a, b.offset + a)).first;
                int q = alg.frame.pos.at(pos_key(alg.N, b.offset + a + 1, b.offset + a + 1)).first;
                in_frame.push_back({{p, Q(1)}, {q, Q(-1)}});
                sc.basis.push_back({{b.offset + a, b.offset + a, 1}, {b.offset + a + 1, b.offset + a + 1, -1}});
            }
    sc.dim = static_cast<int>(sc.basis.size());
    // frame coordinates back to g coordinates
    std::vector<int> frame_to_basis(alg.frame.size(), -1);
    for (size_t k = 0; k < nondiag; ++k) frame_to_basis[in_frame[k][0].first] = static_cast<int>(k);
    auto to_basis = [&](const std::vector<std::pair<int, Q>>& fc) {
        std::map<int, Q> out;
        std::map<int, Q> dvals;  // diagonal frame values
        for (auto& [f, v] : fc) {
            if (frame_to_basis[f] >= 0)
                out[frame_to_basis[f]] += v;
            else
                dvals[f] += v;
        }
        if (!dvals.empty()) {
            size_t hidx = nondiag;
            for (auto& b : alg.blocks) {
                if (b.kind != "su") continue;
                Q run = 0;
                for (int a = 0; a < b.size; ++a) {
                    int p = alg.frame.pos.at(pos_key(alg.N, b.offset + a, b.offset + a)).first;
                    auto it = dvals.find(p);
                    if (it != dvals.end()) run += it->second;
                    if (a + 1 < b.size) {
                        if (run != 0) out[static_cast<int>(hidx)] += run;
                        ++hidx;
                    } else if (run != 0) {
                        throw Error(kErrInternal, "bracket left the traceless part");
                    }
                }
            }
        }
        std::vector<std::pair<int, Q>> v;
        for (auto& [k, x] : out)
            if (x != 0) v.push_back({k, x});
        return v;
    };
    sc.c.assign(sc.dim, std::vector<std::vector<std::pair<int, Q>>>(sc.dim));
    for (int i = 0; i < sc.dim; ++i)
        for (int j = 0; j < sc.dim; ++j) {
            std::map<int, Q> acc;
            for (auto& [fi, vi] : in_frame[i])
                for (auto& [fj, vj] : in_frame[j])
                    for (auto& [fk, vk] : alg.frame_bracket(fi, fj)) acc[fk] += vi * vj * vk;
            std::vector<std::pair<int, Q>> fc;
            for (auto& [k, x] : acc)
                if (x != 0) fc.push_back({k, x});
            sc.c[i][j] = to_basis(fc);
        }
    return sc;
}

bool check_jacobi(const StructureConstants& sc, long long max_triples, std::string* witness) {
    int d = sc.dim;
    auto br = [&](const std::map<int, Q>& x, int j) {
        // [x, b_j]
        std::map<int, Q> out;
        for (auto& [i, v] : x)
            for (auto& [k, c] : sc.c[i][j]) out[k] += v * c;
        return out;
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::map<int, Q> a, b;
            for (auto& [k, c] : sc.c[i][j]) a[k] += c;
            for (auto& [k, c] : sc.c[j][i]) a[k] += c;
            for (auto& [k, c] : a)
                if (c != 0) {
                    if (witness) *witness = "antisymmetry fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                    return false;
                }
        }
    long long total = static_cast<long long>(d) * d * d;
    long long step = total <= max_triples ? 1 : total / max_triples + 1;
    for (long long t = 0; t < total; t += step) {
        int i = static_cast<int>(t / (static_cast<long long>(d) * d));
        int j = static_cast<int>((t / d) % d);
        int k = static_cast<int>(t % d);
        // [b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]] computed as -[[b_j,b_k], b_i] ...
        std::map<int, Q> sum;
        auto term = [&](int x, int y, int z) {
            std::map<int, Q> yz;
            for (auto& [m, c] : sc.c[y][z]) yz[m] += c;
            for (auto& [m, c] : br(yz, x)) sum[m] -= c;
        };
        term(i, j, k);
        term(j, k, i);
        term(k, i, j);
        for (auto& [m, c] : sum)
            if (c != 0) {
                if (witness)
                    *witness = "Jacobi fails on (" + std::to_string(i) + "," + std::to_string(j) + "," +
                               std::to_string(k) + ")";
                return false;
            }
    }
    return true;
}

// ---------------------------------------------------------------- adjoint action on bases

namespace {
struct PhasedEntry {
    int row, col;
    Int coeff;
    Int exp;
};

std::vector<PhasedEntry> apply_op(const MonomialOperator& a, const SparseMat& m, Int L) {
    Int s = L / a.modulus;
    std::vector<PhasedEntry> out;
    for (auto& e : m) {
        if (!a.conj)
            out.push_back({a.perm[e.row], a.perm[e.col], e.coeff, mod_i((a.exps[e.row] - a.exps[e.col]) * s, L)});
        else
            out.push_back({a.perm[e.col], a.perm[e.row], -e.coeff, mod_i((a.exps[e.col] - a.exps[e.row]) * s, L)});
    }
    return out;
}
}  // namespace

BasisAction act_on_basis(const MonomialOperator& a, const MonomialBasis& B, Int L) {
    if (a.size() != B.N) throw Error(kErrShape, "operator size does not match the algebra");
    if (L % a.modulus != 0 || L % 2 != 0) throw Error(kErrInvalid, "conductor incompatible with operator");
    BasisAction act;
    act.perm.resize(B.size());
    act.phase.resize(B.size());
    for (int i = 0; i < B.size(); ++i) {
        auto img = apply_op(a, B.elems[i], L);
        auto it = B.pos.find(pos_key(B.N, img[0].row, img[0].col));
        if (it == B.pos.end()) throw Error(kErrInvalid, "operator does not normalize the frame");
        int j = it->second.first;
        if (B.elems[j].size() != img.size()) throw Error(kErrInvalid, "operator does not act monomially on the frame");
        // ratio = (coeff / frame coeff) * zeta^exp, with coeff ratio +-1
        Int ratio_exp = -1;
        for (auto& e : img) {
            auto p = B.pos.find(pos_key(B.N, e.row, e.col));
            if (p == B.pos.end() || p->second.first != j)
                throw Error(kErrInvalid, "operator does not act monomially on the frame");
            Int c = p->second.second;
            Int ex = e.exp;
            if (e.coeff == -c)
                ex = mod_i(ex + L / 2, L);
            else if (e.coeff != c)
                throw Error(kErrInvalid, "operator does not act monomially on the frame");
            if (ratio_exp < 0)
                ratio_exp = ex;
            else if (ratio_exp != ex)
                throw Error(kErrInvalid, "inconsistent phase on a frame element");
        }
        act.perm[i] = j;
        act.phase[i] = ratio_exp;
    }
    return act;
}

std::vector<std::pair<int, Cyc>> adjoint_action(const MonomialOperator& a, const GradedAlgebra& alg, int idx,
                                                const CycField* F) {
    auto act = act_on_basis(a, alg.frame, F->N);
    return {{act.perm[idx], Cyc::zeta(F, act.phase[idx])}};
}

}  // namespace twr
