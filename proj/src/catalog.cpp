#include "twr/catalog.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace twr {

namespace {

std::string join_parts(const std::vector<int>& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "." : "") + std::to_string(p[i]);
    return s;
}

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

MonomialOperator pauli_x() { return MonomialOperator::permutation({1, 0}); }
MonomialOperator pauli_z() { return MonomialOperator::diagonal({0, 1}, 2); }

// op on tensor factor f, identity elsewhere; factor 0 is the slow index
MonomialOperator on_factor(const std::vector<int>& dims, int f, const MonomialOperator& op) {
    MonomialOperator r = MonomialOperator::identity(1);
    for (int i = 0; i < static_cast<int>(dims.size()); ++i)
        r = kron(r, i == f ? op : MonomialOperator::identity(dims[i]));
    return r;
}

int block_of(const GradedAlgebra& alg, int idx) {
    for (int b = 0; b < static_cast<int>(alg.blocks.size()); ++b)
        if (idx >= alg.blocks[b].offset && idx < alg.blocks[b].offset + alg.blocks[b].size) return b;
    throw Error(kErrInternal, "index outside every block");
}

void finalize(Instance& I) {
    I.table = weight_table(I.alg, I.act);
    if (I.star_required && !I.table.star)
        throw Error(kErrCheck, I.descriptor() + ": (*) fails, mult(0) = " +
                                   std::to_string(I.table.mult_of(zero_char(I.act.A))) + " but rank = " +
                                   std::to_string(I.act.A.rank));
    std::vector<Character> nz;
    for (auto& [c, m] : I.table.mult)
        if (!c.is_zero()) nz.push_back(c);
    if (!generates(nz, I.act.A)) throw Error(kErrCheck, I.descriptor() + ": A does not act faithfully");
    I.gram = killing_gram(I.table);
    int nb = static_cast<int>(I.alg.blocks.size());
    I.factor_of_block.resize(nb);
    std::iota(I.factor_of_block.begin(), I.factor_of_block.end(), 0);
    I.factor_perm.clear();
    for (auto& g : I.act.gens) {
        std::vector<int> p(nb);
        for (int b = 0; b < nb; ++b) p[b] = block_of(I.alg, g.perm[I.alg.blocks[b].offset]);
        I.factor_perm.push_back(p);
    }
}

Int pow2(int k) { return Int(1) << k; }

// when -1 in the torus acts trivially, use cocharacters (1/2)(1,...,1), e_2, ..., e_r
void half_basis(Instance& I, const IntMat& Tstd) {
    int r = static_cast<int>(Tstd.size());
    IntMat T = Tstd;
    for (int i = 1; i < r; ++i)
        for (size_t a = 0; a < T[i].size(); ++a) {
            T[0][a] += Tstd[i][a];
            T[i][a] *= 2;
        }
    I.act.torus = T;
    I.act.torus_den = 2;
    I.to_std.assign(r, IntVec(r, 0));
    I.to_std[0][0] = 2;
    for (int i = 1; i < r; ++i) {
        I.to_std[0][i] = -1;
        I.to_std[i][i] = 1;
    }
}

int to_int(const std::string& s) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw Error(kErrParse, "bad integer '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw Error(kErrParse, "bad integer '" + s + "'");
    }
}

// V = z_1, zbar_1, ..., z_s1, zbar_s1, w_1, ..., w_s0 tensored with (C^2)^{k}
struct TensorFrame {
    int k, s0, s1, dimV, w, n;
    std::vector<int> betaV;
    TensorFrame(int k_, int s0_, int s1_) : k(k_), s0(s0_), s1(s1_) {
        if (k < 0 || s0 < 0 || s1 < 0) throw Error(kErrInvalid, "parameters must be nonnegative");
        if (k > 4) throw Error(kErrBound, "k too large");
        dimV = 2 * s1 + s0;
        w = static_cast<int>(pow2(k));
        n = dimV * w;
        betaV.resize(dimV);
        for (int i = 0; i < s1; ++i) {
            betaV[2 * i] = 2 * i + 1;
            betaV[2 * i + 1] = 2 * i;
        }
        for (int c = 0; c < s0; ++c) betaV[2 * s1 + c] = 2 * s1 + c;
    }
    IntMat torus() const {
        IntMat T(s1, IntVec(n, 0));
        for (int i = 0; i < s1; ++i)
            for (int x = 0; x < w; ++x) {
                T[i][(2 * i) * w + x] = 1;
                T[i][(2 * i + 1) * w + x] = -1;
            }
        return T;
    }
    // sign flips on w_c for c >= 2, then the Pauli pairs on each qubit
    std::vector<MonomialOperator> finite_gens() const {
        std::vector<MonomialOperator> g;
        for (int c = 1; c < s0; ++c) {
            IntVec e(dimV, 0);
            e[2 * s1 + c] = 1;
            g.push_back(kron(MonomialOperator::diagonal(e, 2), MonomialOperator::identity(w)));
        }
        std::vector<int> qubits(k, 2);
        for (int q = 0; q < k; ++q) {
            g.push_back(kron(MonomialOperator::identity(dimV), on_factor(qubits, q, pauli_x())));
            g.push_back(kron(MonomialOperator::identity(dimV), on_factor(qubits, q, pauli_z())));
        }
        return g;
    }
    std::vector<int> beta() const {
        return kron(MonomialOperator::permutation(betaV), MonomialOperator::identity(w)).perm;
    }
};

}  // namespace

// ---------------------------------------------------------------- instances

std::string Instance::descriptor() const {
    std::string s = family + ":";
    for (size_t i = 0; i < params.size(); ++i) {
        s += i ? "," : "";
        s += params[i].first.empty() ? params[i].second : params[i].first + "=" + params[i].second;
    }
    return s;
}

IntVec Instance::std_coords(const IntVec& v) const {
    if (to_std.empty()) return v;
    IntVec out(to_std.size(), 0);
    for (size_t i = 0; i < to_std.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += to_std[i][j] * v[j];
    return out;
}

int Instance::num_factors() const {
    return factor_of_block.empty() ? 0 : *std::max_element(factor_of_block.begin(), factor_of_block.end()) + 1;
}

GramForm killing_gram(const WeightTable& t) {
    int r = t.A.rank;
    QMat M(r, QVec(r, 0));
    for (auto& [c, m] : t.mult)
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) M[i][j] += qi(m * c.inf[i] * c.inf[j]);
    if (r == 0) return {};
    if (rank_q(M) != r) throw Error(kErrCheck, "torus weights do not span X*(A^0)");
    return inverse_q(M);
}

Instance pu_instance(int n, int m, const std::vector<int>& parts_in) {
    if (n < 2 || m < 1 || n % m) throw Error(kErrInvalid, "pu needs m | n and n >= 2");
    int q = n / m;
    // omitted parts: one cyclic factor of order n/m
    std::vector<int> parts = parts_in;
    if (parts.empty() && q > 1) parts = {q};
    Int prod = 1;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 2) throw Error(kErrInvalid, "parts must be >= 2");
        if (i && parts[i - 1] % parts[i]) throw Error(kErrInvalid, "parts must satisfy n_{i+1} | n_i");
        prod *= parts[i];
    }
    if (prod != q) throw Error(kErrInvalid, "product of parts must equal n/m");
    Instance I;
    I.family = "pu";
    I.params = {{"n", std::to_string(n)}, {"m", std::to_string(m)}};
    if (!parts.empty()) I.params.push_back({"parts", join_parts(parts)});
    I.alg = build_algebra("su", n);
    IntMat T(m - 1, IntVec(n, 0));
    for (int k = 1; k < m; ++k)
        for (int x = 0; x < q; ++x) T[k - 1][k * q + x] = 1;
    IntVec d;
    std::vector<MonomialOperator> gens;
    for (size_t i = 0; i < parts.size(); ++i) {
        auto C = on_factor(parts, static_cast<int>(i), clock_op(parts[i]));
        auto S = on_factor(parts, static_cast<int>(i), shift_op(parts[i]));
        gens.push_back(kron(MonomialOperator::identity(m), C));
        gens.push_back(kron(MonomialOperator::identity(m), S));
        d.push_back(parts[i]);
        d.push_back(parts[i]);
    }
    I.act = {AbelianGroup(m - 1, d), T, gens};
    finalize(I);
    return I;
}

namespace {

Instance tensor_common(const std::string& fam, int k, int s0, int s1) {
    Instance I;
    I.family = fam;
    I.params = {{"k", std::to_string(k)}, {"s0", std::to_string(s0)}, {"s1", std::to_string(s1)}};
    return I;
}

AbelianGroup twos(int rank, size_t count) { return AbelianGroup(rank, IntVec(count, 2)); }

}  // namespace

Instance po_instance(int k, int s0, int s1) {
    TensorFrame F(k, s0, s1);
    if (F.n < 5) throw Error(kErrInvalid, "po needs n >= 5");
    if (F.n > 25) throw Error(kErrBound, "po ambient too large");
    Instance I = tensor_common("po", k, s0, s1);
    I.alg = build_from_blocks({{"so", F.n, F.beta(), {}}}, "so(" + std::to_string(F.n) + ")");
    auto g = F.finite_gens();
    I.act = {twos(s1, g.size()), F.torus(), g};
    if (s0 == 0 && s1 > 0) half_basis(I, F.torus());
    finalize(I);
    return I;
}

Instance psp_instance(int k, int s0, int s1) {
    TensorFrame F(k, s0, s1);
    if (k == 0 && s0 > 0) throw Error(kErrInvalid, "psp with k = 0 needs s0 = 0");
    if (F.n < 2) throw Error(kErrInvalid, "psp needs n >= 2");
    if (F.n > 24) throw Error(kErrBound, "psp ambient too large");
    Instance I = tensor_common("psp", k, s0, s1);
    std::vector<int> pi(F.n), sign(F.n);
    if (k == 0) {
        // Omega e_z = -e_zbar, Omega e_zbar = e_z
        for (int a = 0; a < F.n; ++a) {
            pi[a] = F.betaV[a];
            sign[a] = a % 2 == 0 ? 1 : -1;
        }
    } else {
        // Omega = B_V (x) (eps (x) I) with eps on the first qubit; sign is that of -Omega
        int half = F.w / 2;
        for (int v = 0; v < F.dimV; ++v)
            for (int x = 0; x < F.w; ++x) {
                int b = x / half, r = x % half;
                int a = v * F.w + x;
                pi[a] = F.betaV[v] * F.w + (1 - b) * half + r;
                sign[a] = b == 0 ? 1 : -1;
            }
    }
    I.alg = build_from_blocks({{"sp", F.n, pi, sign}}, "sp(" + std::to_string(F.n) + ")");
    auto g = F.finite_gens();
    I.act = {twos(s1, g.size()), F.torus(), g};
    if (s0 == 0 && s1 > 0) half_basis(I, F.torus());
    finalize(I);
    return I;
}

Instance aut_su_outer_instance(int k, int s0, int s1) {
    TensorFrame F(k, s0, s1);
    if (F.n < 3) throw Error(kErrInvalid, "autsu needs n >= 3");
    if (F.n > 17) throw Error(kErrBound, "autsu ambient too large");
    Instance I = tensor_common("autsu", k, s0, s1);
    I.alg = build_algebra("su", F.n);
    auto g = F.finite_gens();
    MonomialOperator tau = MonomialOperator::permutation(F.beta());
    tau.conj = true;
    g.push_back(tau);
    I.act = {twos(s1, g.size()), F.torus(), g};
    if (s0 == 0 && s1 > 0) half_basis(I, F.torus());
    finalize(I);
    return I;
}

Instance symmetric_instance(const std::string& kind, int p, int q) {
    Instance I;
    I.family = "sym";
    I.maximal = false;
    I.star_required = false;
    MonomialOperator theta;
    IntMat T;
    if (kind == "AI") {
        if (p < 2) throw Error(kErrInvalid, "AI needs n >= 2");
        I.params = {{"", "AI"}, {"n", std::to_string(p)}};
        I.alg = build_algebra("su", p);
        T.assign(p - 1, IntVec(p, 0));
        for (int k = 1; k < p; ++k) T[k - 1][k] = 1;
        theta = MonomialOperator::identity(p);
        theta.conj = true;
    } else if (kind == "AII") {
        if (p < 2) throw Error(kErrInvalid, "AII needs n >= 2");
        I.params = {{"", "AII"}, {"n", std::to_string(p)}};
        int N = 2 * p;
        I.alg = build_algebra("su", N);
        T.assign(p - 1, IntVec(N, 0));
        for (int k = 1; k < p; ++k) T[k - 1][2 * k] = T[k - 1][2 * k + 1] = 1;
        // J e_{2i} = -e_{2i+1}, J e_{2i+1} = e_{2i}
        std::vector<int> perm(N);
        IntVec e(N, 0);
        for (int i = 0; i < p; ++i) {
            perm[2 * i] = 2 * i + 1;
            perm[2 * i + 1] = 2 * i;
            e[2 * i] = 1;
        }
        theta = MonomialOperator::diagonal(e, 2);
        theta.perm = perm;
        theta.conj = true;
    } else if (kind == "AIII") {
        if (q < 1 || p < q) throw Error(kErrInvalid, "AIII needs p >= q >= 1");
        I.params = {{"", "AIII"}, {"p", std::to_string(p)}, {"q", std::to_string(q)}};
        int N = p + q;
        I.alg = build_algebra("su", N);
        T.assign(q, IntVec(N, 0));
        std::vector<int> perm(N);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = 0; i < q; ++i) {
            T[i][2 * i] = 1;
            T[i][2 * i + 1] = -1;
            perm[2 * i] = 2 * i + 1;
            perm[2 * i + 1] = 2 * i;
        }
        theta = MonomialOperator::permutation(perm);
    } else {
        throw Error(kErrInvalid, "unsupported symmetric pair " + kind);
    }
    I.theta = theta;
    I.act = {AbelianGroup(static_cast<int>(T.size()), {}), T, {}};
    if (kind == "AIII" && p == q) half_basis(I, T);
    finalize(I);
    return I;
}

CheckReport check_theta(const Instance& I) {
    CheckReport rep;
    if (!I.theta) throw Error(kErrInvalid, "instance has no involution");
    const auto& alg = I.alg;
    auto act = act_on_basis(*I.theta, alg.frame, 2);
    auto cact = act_on_basis(*I.theta, alg.center, 2);
    int F = alg.frame.size();
    bool inv = true;
    for (int i = 0; i < F; ++i) {
        int j = act.perm[i];
        if (act.perm[j] != i || mod_i(act.phase[i] + act.phase[j], 2) != 0) inv = false;
    }
    rep.add("involution", inv, inv ? "" : "theta^2 is not the identity on the frame");
    // torus directions lie in the -1 eigenspace: diagonal frame elements E_aa
    bool in_p = true;
    std::string wit;
    for (size_t r = 0; r < I.act.torus.size(); ++r) {
        const auto& w = I.act.torus[r];
        for (int a = 0; a < alg.N; ++a) {
            auto it = alg.frame.pos.find(static_cast<long long>(a) * alg.N + a);
            if (it == alg.frame.pos.end()) continue;
            int i = it->second.first;
            int j = act.perm[i];
            auto& e = alg.frame.elems[j][0];
            if (e.row != e.col) {
                in_p = false;
                continue;
            }
            Int sgn = act.phase[i] % 2 == 0 ? 1 : -1;
            if (sgn * w[a] != -w[e.row]) {
                in_p = false;
                wit = "cocharacter " + std::to_string(r) + " at index " + std::to_string(a);
            }
        }
    }
    rep.add("torus_in_p", in_p, wit);
    // dim(g_0 cap p) = dim a
    auto minus_dim = [](const BasisAction& a, const std::vector<bool>& use) {
        int cnt = 0;
        std::vector<bool> seen(a.perm.size(), false);
        for (size_t i = 0; i < a.perm.size(); ++i) {
            if (!use[i] || seen[i]) continue;
            int j = a.perm[i];
            seen[i] = seen[j] = true;
            if (j != static_cast<int>(i))
                ++cnt;
            else if (a.phase[i] % 2)
                ++cnt;
        }
        return cnt;
    };
    std::vector<bool> use(F, false);
    for (int i = 0; i < F; ++i) {
        auto& e = alg.frame.elems[i][0];
        bool z = true;
        for (auto& w : I.act.torus)
            if (w[e.row] != w[e.col]) z = false;
        use[i] = z;
    }
    std::vector<bool> cuse(alg.center.size(), true);
    int pdim = minus_dim(act, use) - minus_dim(cact, cuse);
    bool maxab = pdim == I.act.A.rank;
    rep.add("maximal_in_p", maxab, "dim(g_0 cap p) = " + std::to_string(pdim));
    return rep;
}

Instance product_instance(const std::string& name) {
    Instance I;
    I.family = "prod";
    I.params = {{"name", name}};
    if (name == "A1xA2") {
        I.alg = build_from_blocks({{"su", 2, {}, {}}, {"su", 3, {}, {}}}, "su(2)+su(3)");
        IntMat T(3, IntVec(5, 0));
        T[0][1] = 1;
        T[1][3] = 1;
        T[2][4] = 1;
        I.act = {AbelianGroup(3, {}), T, {}};
    } else if (name == "A1xHeis3") {
        I.alg = build_from_blocks({{"su", 2, {}, {}}, {"su", 3, {}, {}}}, "su(2)+su(3)");
        IntMat T(1, IntVec(5, 0));
        T[0][1] = 1;
        auto id2 = MonomialOperator::identity(2);
        I.act = {AbelianGroup(1, {3, 3}), T, {direct_sum({id2, clock_op(3)}), direct_sum({id2, shift_op(3)})}};
    } else if (name == "A1swap") {
        I.alg = build_from_blocks({{"su", 2, {}, {}}, {"su", 2, {}, {}}}, "su(2)+su(2)");
        IntMat T(1, IntVec(4, 0));
        T[0][1] = T[0][3] = 1;
        I.act = {AbelianGroup(1, {2}), T, {MonomialOperator::permutation({2, 3, 0, 1})}};
    } else {
        throw Error(kErrInvalid, "unknown product instance " + name);
    }
    finalize(I);
    return I;
}

Instance gprime_instance(int n) {
    if (n < 2) throw Error(kErrInvalid, "gprime needs n >= 2");
    std::vector<BlockSpec> blocks;
    std::vector<MonomialOperator> cl, sh;
    std::string name;
    for (auto [p, a] : factorize(n)) {
        int q = 1;
        for (int i = 0; i < a; ++i) q *= static_cast<int>(p);
        blocks.push_back({"su", q, {}, {}});
        cl.push_back(clock_op(q));
        sh.push_back(shift_op(q));
        name += (name.empty() ? "" : "+") + std::string("su(") + std::to_string(q) + ")";
    }
    Instance I;
    I.family = "gprime";
    I.params = {{"n", std::to_string(n)}};
    I.alg = build_from_blocks(blocks, name);
    if (I.alg.dim() > 300) throw Error(kErrBound, "gprime ambient too large");
    I.act = {AbelianGroup(0, {n, n}), {}, {direct_sum(cl), direct_sum(sh)}};
    finalize(I);
    return I;
}

// ---------------------------------------------------------------- descriptors

Descriptor parse_descriptor(const std::string& s) {
    Descriptor d;
    auto colon = s.find(':');
    if (colon == std::string::npos || colon == 0) throw Error(kErrParse, "descriptor needs 'family:params'");
    d.family = s.substr(0, colon);
    std::string rest = s.substr(colon + 1);
    std::stringstream ss(rest);
    std::string tok;
    bool first = true;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw Error(kErrParse, "empty descriptor field");
        auto eq = tok.find('=');
        if (eq == std::string::npos) {
            if (!first || !d.variant.empty()) throw Error(kErrParse, "unexpected field '" + tok + "'");
            d.variant = tok;
        } else {
            std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
            if (k.empty() || v.empty()) throw Error(kErrParse, "malformed field '" + tok + "'");
            if (d.kv.count(k)) throw Error(kErrParse, "duplicate key '" + k + "'");
            d.kv[k] = v;
        }
        first = false;
    }
    return d;
}

namespace {

void expect_keys(const Descriptor& d, const std::set<std::string>& required, const std::set<std::string>& optional) {
    for (auto& k : required)
        if (!d.kv.count(k)) throw Error(kErrParse, d.family + " needs key '" + k + "'");
    for (auto& [k, v] : d.kv)
        if (!required.count(k) && !optional.count(k)) throw Error(kErrParse, "unknown key '" + k + "' for " + d.family);
}

std::vector<int> parse_parts(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s + ".") {
        if (c == '.' || c == 'x' || c == '*') {
            if (cur.empty()) throw Error(kErrParse, "bad parts list '" + s + "'");
            out.push_back(to_int(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

}  // namespace

Instance make_instance(const std::string& s) {
    Descriptor d = parse_descriptor(s);
    auto get = [&](const std::string& k) { return to_int(d.kv.at(k)); };
    if (d.family == "pu") {
        if (!d.variant.empty()) throw Error(kErrParse, "pu takes key=value fields only");
        expect_keys(d, {"n", "m"}, {"parts"});
        std::vector<int> parts;
        if (d.kv.count("parts")) parts = parse_parts(d.kv.at("parts"));
        return pu_instance(get("n"), get("m"), parts);
    }
    if (d.family == "po" || d.family == "psp" || d.family == "autsu") {
        if (!d.variant.empty()) throw Error(kErrParse, d.family + " takes key=value fields only");
        expect_keys(d, {"k", "s0", "s1"}, {});
        int k = get("k"), s0 = get("s0"), s1 = get("s1");
        if (d.family == "po") return po_instance(k, s0, s1);
        if (d.family == "psp") return psp_instance(k, s0, s1);
        return aut_su_outer_instance(k, s0, s1);
    }
    if (d.family == "sym") {
        if (d.variant == "AIII") {
            expect_keys(d, {"p", "q"}, {});
            return symmetric_instance("AIII", get("p"), get("q"));
        }
        if (d.variant == "AI" || d.variant == "AII") {
            expect_keys(d, {"n"}, {});
            return symmetric_instance(d.variant, get("n"));
        }
        throw Error(kErrParse, "sym needs AI, AII or AIII");
    }
    if (d.family == "prod") {
        expect_keys(d, {"name"}, {});
        return product_instance(d.kv.at("name"));
    }
    if (d.family == "gprime") {
        expect_keys(d, {"n"}, {});
        return gprime_instance(get("n"));
    }
    throw Error(kErrParse, "unknown family '" + d.family + "'");
}

// ---------------------------------------------------------------- permutations

std::vector<std::vector<int>> transitive_sigma(int n, const std::vector<int>& parts) {
    if (n < 1) throw Error(kErrInvalid, "n must be positive");
    Int P = 1;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw Error(kErrInvalid, "parts must be positive");
        if (i && parts[i - 1] % parts[i]) throw Error(kErrInvalid, "parts must satisfy n_{i+1} | n_i");
        P *= parts[i];
    }
    if (n % P) throw Error(kErrInvalid, "product of parts must divide n");
    std::vector<std::vector<int>> out;
    Int prev = 1;
    for (int ni : parts) {
        Int cur = prev * ni;
        std::vector<int> s(n);
        for (int x = 0; x < n; ++x) {
            Int base = (x / cur) * cur;
            s[x] = static_cast<int>(base + mod_i(x - base + prev, cur));
        }
        out.push_back(s);
        prev = cur;
    }
    return out;
}

bool perms_commute(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[b[i]] != b[a[i]]) return false;
    return true;
}

std::vector<int> cycle_lengths(const std::vector<int>& p) {
    std::vector<int> out;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool generated_group_transitive(const std::vector<std::vector<int>>& gens, int n) {
    if (n <= 1) return true;
    std::vector<bool> seen(n, false);
    std::deque<int> q{0};
    seen[0] = true;
    int cnt = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (auto& g : gens)
            if (!seen[g[x]]) {
                seen[g[x]] = true;
                ++cnt;
                q.push_back(g[x]);
            }
    }
    return cnt == n;
}

CyclotomicModule cyclotomic_module(int n) {
    if (n < 1) throw Error(kErrInvalid, "n must be positive");
    CyclotomicModule m;
    m.phi = cyclotomic_poly(n);
    m.companion = companion_matrix(m.phi);
    if (charpoly(m.companion) != m.phi) throw Error(kErrInternal, "companion charpoly mismatch");
    if (matrix_order(m.companion, 4 * static_cast<Int>(n) + 4) != n) throw Error(kErrInternal, "companion order mismatch");
    return m;
}

// ---------------------------------------------------------------- table rows

std::optional<TableRow> table_row(const std::string& fam, int a, int b, int c) {
    TableRow r;
    if (fam == "pu") {
        int n = a, m = b;
        if (m < 1 || n % m) return std::nullopt;
        Int q = n / m;
        r.label = m == 1 ? "empty" : "A" + std::to_string(m - 1);
        if (m > 1) {
            r.mult["a"] = q * q;
            r.group = {"a"};
        }
        return r;
    }
    int k = a, s0 = b, s1 = c;
    if (s1 < 1) return std::nullopt;
    Int four = pow2(2 * k);
    Int h = k == 0 ? 0 : pow2(k - 1);
    auto cl = [&](const std::string& fam_letter) {
        if (s1 == 1) return std::string(fam_letter == "BC" ? "BC1" : "A1");
        if (s1 == 2 && (fam_letter == "B" || fam_letter == "C")) return std::string("C2");
        if (fam_letter == "D") return s1 == 3 ? std::string("A3") : "D" + std::to_string(s1);
        return fam_letter + std::to_string(s1);
    };
    if (fam == "po") {
        if (k == 0 && s0 == 0) {
            if (s1 == 2) {
                r.label = "A1+A1";
            } else {
                r.label = cl("D");
            }
            r.mult["ij"] = four;
        } else if (s0 == 0) {
            r.label = cl("C");
            r.mult["ij"] = four;
            r.mult["2e"] = h * (pow2(k) - 1);
        } else if (k == 0) {
            r.label = cl("B");
            r.mult["e"] = s0;
            r.mult["ij"] = 1;
        } else {
            r.label = cl("BC");
            r.mult["e"] = s0 * four;
            r.mult["2e"] = h * (pow2(k) - 1);
            r.mult["ij"] = four;
        }
        // the long roots of C_{s1} vanish when their multiplicity formula gives 0
        if (r.mult.count("2e") && r.mult["2e"] == 0) r.mult.erase("2e");
    } else if (fam == "psp") {
        Int lg = (pow2(k) * (pow2(k) + 1)) / 2;
        if (s0 == 0) {
            r.label = cl("C");
            r.mult["ij"] = four;
            r.mult["2e"] = lg;
        } else {
            if (k == 0) return std::nullopt;
            r.label = cl("BC");
            r.mult["e"] = s0 * four;
            r.mult["2e"] = lg;
            r.mult["ij"] = four;
        }
    } else if (fam == "autsu") {
        if (s0 == 0) {
            r.label = cl("C");
            r.mult["ij"] = 2 * four;
            r.mult["2e"] = four;
        } else {
            r.label = cl("BC");
            r.mult["e"] = s0 * four;
            r.mult["2e"] = four;
            r.mult["ij"] = 2 * four;
        }
    } else {
        return std::nullopt;
    }
    if (fam == "po" || fam == "psp") r.group = {"ij"};
    if (fam == "autsu") r.group = {"ij", "2e"};
    if (s1 == 1) r.mult.erase("ij");
    for (auto it = r.group.begin(); it != r.group.end();)
        it = r.mult.count(*it) ? std::next(it) : r.group.erase(it);
    return r;
}

std::string root_shape(const std::string& fam, const IntVec& v) {
    if (fam == "pu") return "a";
    int nz = 0;
    Int mx = 0;
    for (Int x : v)
        if (x) {
            ++nz;
            mx = std::max(mx, x < 0 ? -x : x);
        }
    if (nz == 1 && mx == 1) return "e";
    if (nz == 1 && mx == 2) return "2e";
    if (nz == 2 && mx == 1) return "ij";
    return "other";
}

std::vector<std::string> suite_descriptors() {
    std::vector<std::string> v = {
        "pu:n=2,m=2",          "pu:n=2,m=1,parts=2",  "pu:n=3,m=1,parts=3",   "pu:n=3,m=3",
        "pu:n=4,m=1,parts=4",  "pu:n=4,m=1,parts=2.2", "pu:n=4,m=2,parts=2",  "pu:n=6,m=3,parts=2",
        "pu:n=6,m=2,parts=3",  "pu:n=6,m=1,parts=6",  "pu:n=8,m=2,parts=2.2", "pu:n=12,m=2,parts=6",
        "po:k=0,s0=0,s1=3",    "po:k=1,s0=0,s1=2",    "po:k=0,s0=1,s1=2",     "po:k=0,s0=3,s1=1",
        "po:k=1,s0=1,s1=1",    "po:k=2,s0=0,s1=1",    "psp:k=0,s0=0,s1=2",    "psp:k=1,s0=0,s1=2",
        "psp:k=1,s0=1,s1=1",   "autsu:k=0,s0=0,s1=3", "autsu:k=0,s0=1,s1=1",  "autsu:k=1,s0=0,s1=1",
        "prod:name=A1xA2",     "prod:name=A1xHeis3",  "prod:name=A1swap",     "gprime:n=6",
    };
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<std::string> table_descriptors(int max_n) {
    std::vector<std::string> out;
    for (int n = 2; n <= max_n; ++n)
        for (int m = 2; m <= n; ++m) {
            if (n % m) continue;
            int q = n / m;
            std::string d = "pu:n=" + std::to_string(n) + ",m=" + std::to_string(m);
            if (q > 1) d += ",parts=" + std::to_string(q);
            out.push_back(d);
        }
    for (int k = 0; k <= 4; ++k)
        for (int s1 = 1; s1 <= max_n; ++s1)
            for (int s0 = 0; s0 <= max_n; ++s0) {
                Int n = pow2(k) * (s0 + 2 * s1);
                if (n > max_n) continue;
                std::string p = ":k=" + std::to_string(k) + ",s0=" + std::to_string(s0) + ",s1=" + std::to_string(s1);
                if (n >= 5) out.push_back("po" + p);
                if (!(k == 0 && s0 > 0)) out.push_back("psp" + p);
                if (n >= 3) out.push_back("autsu" + p);
            }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace twr
