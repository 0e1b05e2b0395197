#include "twr/rootlattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace twr {

IntVec vec_add(const IntVec& a, const IntVec& b) {
    IntVec c(a);
    for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}
IntVec vec_sub(const IntVec& a, const IntVec& b) {
    IntVec c(a);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return c;
}
IntVec vec_scale(Int k, const IntVec& a) {
    IntVec c(a);
    for (auto& x : c) x *= k;
    return c;
}
IntVec vec_neg(const IntVec& a) { return vec_scale(-1, a); }
bool vec_zero(const IntVec& a) {
    return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}
std::string vec_str(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

bool is_positive_definite(const GramForm& g) {
    size_t n = g.size();
    for (size_t k = 1; k <= n; ++k) {
        QMat m(k, QVec(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) m[i][j] = g[i][j];
        if (det_q(m) <= 0) return false;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (g[i][j] != g[j][i]) return false;
    return true;
}

Q inner(const GramForm& g, const IntVec& a, const IntVec& b) {
    Q s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) s += qi(a[i] * b[j]) * g[i][j];
    }
    return s;
}

Q inner_q(const GramForm& g, const QVec& a, const QVec& b) {
    Q s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) s += a[i] * b[j] * g[i][j];
    }
    return s;
}

LatticeRootSystem make_root_system(const GramForm& g, const std::map<IntVec, int>& mult) {
    LatticeRootSystem S;
    S.gram = g;
    S.mult = mult;
    for (auto& [r, m] : mult) S.roots.push_back(r);
    return S;
}

Q cartan_integer(const IntVec& lambda, const IntVec& alpha, const GramForm& g) {
    Q aa = inner(g, alpha, alpha);
    if (aa == 0) throw Error(kErrInvalid, "cartan number against zero root");
    return Q(2) * inner(g, lambda, alpha) / aa;
}

IntVec reflect(const IntVec& lambda, const IntVec& alpha, const GramForm& g) {
    Q c = cartan_integer(lambda, alpha, g);
    if (c.get_den() != 1)
        throw Error(kErrCheck, "non-integral cartan number " + c.get_str() + " for " + vec_str(lambda) +
                                   " against " + vec_str(alpha));
    return vec_sub(lambda, vec_scale(c.get_num().get_si(), alpha));
}

bool CheckReport::ok() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
}

void CheckReport::add(const std::string& name, bool pass, const std::string& witness) {
    items.push_back({name, pass, witness});
}

const CheckItem* CheckReport::find(const std::string& name) const {
    for (auto& c : items)
        if (c.name == name) return &c;
    return nullptr;
}

void CheckReport::merge(const CheckReport& o, const std::string& prefix) {
    for (auto c : o.items) {
        c.name = prefix + c.name;
        items.push_back(c);
    }
}

CheckReport verify_root_system(const LatticeRootSystem& S, const std::vector<IntVec>& lattice_gens) {
    CheckReport rep;
    {
        bool ok = true;
        std::string w;
        for (auto& r : S.roots)
            if (vec_zero(r)) {
                ok = false;
                w = "zero vector is listed as a root";
            }
        rep.add("nonzero", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (auto& [r, m] : S.mult) {
            auto it = S.mult.find(vec_neg(r));
            if (it == S.mult.end() || it->second != m) {
                ok = false;
                w = "-" + vec_str(r) + " missing or multiplicity differs";
                break;
            }
        }
        rep.add("negation", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (auto& a : S.roots) {
            if (!ok) break;
            for (auto& [b, m] : S.mult) {
                Q c = cartan_integer(b, a, S.gram);
                if (c.get_den() != 1) {
                    ok = false;
                    w = "s_" + vec_str(a) + " of " + vec_str(b) + " not integral";
                    break;
                }
                IntVec img = vec_sub(b, vec_scale(c.get_num().get_si(), a));
                auto it = S.mult.find(img);
                if (it == S.mult.end() || it->second != m) {
                    ok = false;
                    w = "s_" + vec_str(a) + "(" + vec_str(b) + ") = " + vec_str(img) + " not a root of the same multiplicity";
                    break;
                }
            }
        }
        rep.add("reflection", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (auto& a : S.roots) {
            if (!ok) break;
            for (auto& l : lattice_gens) {
                Q c = cartan_integer(l, a, S.gram);
                if (c.get_den() != 1) {
                    ok = false;
                    w = "<" + vec_str(l) + ", coroot of " + vec_str(a) + "> = " + c.get_str();
                    break;
                }
            }
        }
        rep.add("strong_integrality", ok, w);
    }
    return rep;
}

namespace {
int find_root(std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}
}  // namespace

std::vector<ComponentType> classify_type(const LatticeRootSystem& S) {
    int n = static_cast<int>(S.roots.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (inner(S.gram, S.roots[i], S.roots[j]) != 0) parent[find_root(parent, i)] = find_root(parent, j);
    std::map<int, std::vector<IntVec>> groups;
    for (int i = 0; i < n; ++i) groups[find_root(parent, i)].push_back(S.roots[i]);
    std::vector<ComponentType> out;
    for (auto& [key, roots] : groups) {
        ComponentType c;
        c.roots = roots;
        std::sort(c.roots.begin(), c.roots.end());
        QMat m;
        for (auto& r : roots) {
            QVec row;
            for (Int x : r) row.push_back(qi(x));
            m.push_back(row);
        }
        int rk = rank_q(m);
        c.rank = rk;
        std::set<IntVec> rs(roots.begin(), roots.end());
        bool doubled = false;
        for (auto& r : roots)
            if (rs.count(vec_scale(2, r))) doubled = true;
        std::set<Q> norms;
        for (auto& r : roots) norms.insert(inner(S.gram, r, r));
        std::vector<Q> nv(norms.begin(), norms.end());
        size_t N = roots.size();
        Int k = rk;
        auto fail = [&](const std::string& why) {
            throw Error(kErrCheck, "unclassified root system component of rank " + std::to_string(rk) + ": " + why);
        };
        std::map<Q, std::string> cls;
        if (doubled) {
            if (k == 1) {
                if (nv.size() != 2 || N != 4 || nv[1] != 4 * nv[0]) fail("bad BC1 shape");
                cls[nv[0]] = "short";
                cls[nv[1]] = "long";
            } else {
                if (nv.size() != 3 || N != static_cast<size_t>(2 * k * k + 2 * k) || nv[1] != 2 * nv[0] ||
                    nv[2] != 4 * nv[0])
                    fail("bad BC shape");
                cls[nv[0]] = "short";
                cls[nv[1]] = "med";
                cls[nv[2]] = "long";
            }
            c.family = "BC";
        } else if (nv.size() == 1) {
            cls[nv[0]] = "short";
            if (N == static_cast<size_t>(k * (k + 1)))
                c.family = "A";
            else if (k >= 4 && N == static_cast<size_t>(2 * k * (k - 1)))
                c.family = "D";
            else
                fail("simply-laced but neither A nor D");
        } else if (nv.size() == 2) {
            if (nv[1] != 2 * nv[0]) fail("length ratio not 2");
            cls[nv[0]] = "short";
            cls[nv[1]] = "long";
            size_t ns = 0;
            for (auto& r : roots)
                if (inner(S.gram, r, r) == nv[0]) ++ns;
            size_t nl = N - ns;
            if (k >= 2 && ns == static_cast<size_t>(2 * k) && nl == static_cast<size_t>(2 * k * (k - 1)))
                c.family = k == 2 ? "C" : "B";
            else if (k >= 2 && nl == static_cast<size_t>(2 * k) && ns == static_cast<size_t>(2 * k * (k - 1)))
                c.family = "C";
            else
                fail("two root lengths but not B or C");
        } else {
            fail("more than two root lengths without doubled roots");
        }
        for (auto& r : c.roots) {
            std::string l = cls[inner(S.gram, r, r)];
            c.length_class[r] = l;
            auto it = S.mult.find(r);
            c.mult_by_class[l].insert(it == S.mult.end() ? 1 : it->second);
        }
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const ComponentType& a, const ComponentType& b) {
        if (a.family != b.family) return a.family < b.family;
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.roots < b.roots;
    });
    return out;
}

std::string type_label(const std::vector<ComponentType>& comps) {
    if (comps.empty()) return "empty";
    std::string s;
    for (size_t i = 0; i < comps.size(); ++i) s += (i ? "+" : "") + comps[i].label();
    return s;
}

static bool lex_positive(const IntVec& v) {
    for (Int x : v)
        if (x != 0) return x > 0;
    return false;
}

std::vector<IntVec> positive_roots(const LatticeRootSystem& S) {
    std::vector<IntVec> p;
    for (auto& r : S.roots)
        if (lex_positive(r)) p.push_back(r);
    return p;
}

std::vector<IntVec> simple_system(const LatticeRootSystem& S) {
    auto pos = positive_roots(S);
    std::set<IntVec> sums;
    for (size_t i = 0; i < pos.size(); ++i)
        for (size_t j = i; j < pos.size(); ++j) sums.insert(vec_add(pos[i], pos[j]));
    std::vector<IntVec> simple;
    for (auto& r : pos)
        if (!sums.count(r)) simple.push_back(r);
    return simple;
}

std::vector<QVec> lattice_basis(const std::vector<QVec>& vecs) {
    if (vecs.empty()) return {};
    size_t n = vecs[0].size();
    Z den = 1;
    for (auto& v : vecs)
        for (auto& x : v) den = lcm(den, Z(x.get_den()));
    std::vector<std::vector<Z>> M(n, std::vector<Z>(vecs.size()));
    for (size_t j = 0; j < vecs.size(); ++j)
        for (size_t i = 0; i < n; ++i) {
            Q s = vecs[j][i] * Q(den);
            M[i][j] = s.get_num();
        }
    auto snf = smith_normal_form(M);
    QMat U(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) U[i][j] = Q(snf.U[i][j]);
    QMat Ui = inverse_q(U);
    std::vector<QVec> basis;
    size_t k = std::min(n, vecs.size());
    for (size_t c = 0; c < k; ++c) {
        if (snf.D[c][c] == 0) continue;
        QVec b(n);
        for (size_t i = 0; i < n; ++i) b[i] = Ui[i][c] * Q(snf.D[c][c]) / Q(den);
        basis.push_back(b);
    }
    return basis;
}

IntVec lattice_coords(const std::vector<QVec>& basis, const QVec& v) {
    size_t k = basis.size(), n = v.size();
    // augmented system basis * c = v
    QMat A(n, QVec(k + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < k; ++j) A[i][j] = basis[j][i];
        A[i][k] = v[i];
    }
    size_t r = 0;
    std::vector<size_t> piv;
    for (size_t c = 0; c < k && r < n; ++c) {
        size_t p = r;
        while (p < n && A[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(A[p], A[r]);
        Q f = A[r][c];
        for (auto& x : A[r]) x /= f;
        for (size_t i = 0; i < n; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Q g = A[i][c];
            for (size_t j = 0; j <= k; ++j) A[i][j] -= g * A[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    for (size_t i = r; i < n; ++i)
        if (A[i][k] != 0) throw Error(kErrCheck, "vector outside the lattice span");
    IntVec out(k, 0);
    for (size_t i = 0; i < piv.size(); ++i) {
        if (A[i][k].get_den() != 1) throw Error(kErrCheck, "vector not in the lattice");
        out[piv[i]] = A[i][k].get_num().get_si();
    }
    return out;
}

LatticeRootSystem restricted_projection(const LatticeRootSystem& Delta, const std::vector<IntVec>& simple,
                                        const std::vector<IntVec>& sub) {
    if (sub.size() >= simple.size()) throw Error(kErrInvalid, "projection target is empty");
    const GramForm& G = Delta.gram;
    size_t n = G.size();
    size_t k = sub.size();
    QMat S(k, QVec(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) S[i][j] = inner(G, sub[i], sub[j]);
    QMat Si = k ? inverse_q(S) : QMat{};
    auto project = [&](const IntVec& v) {
        QVec p(n);
        for (size_t i = 0; i < n; ++i) p[i] = qi(v[i]);
        std::vector<Q> b(k);
        for (size_t i = 0; i < k; ++i) b[i] = inner(G, sub[i], v);
        for (size_t j = 0; j < k; ++j) {
            Q c = 0;
            for (size_t i = 0; i < k; ++i) c += Si[j][i] * b[i];
            for (size_t t = 0; t < n; ++t) p[t] -= c * qi(sub[j][t]);
        }
        return p;
    };
    std::vector<QVec> images;
    std::vector<int> mults;
    for (auto& [r, m] : Delta.mult) {
        QVec p = project(r);
        bool zero = std::all_of(p.begin(), p.end(), [](const Q& x) { return x == 0; });
        if (zero) continue;
        images.push_back(p);
        mults.push_back(m);
    }
    auto basis = lattice_basis(images);
    size_t d = basis.size();
    GramForm g2(d, QVec(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) g2[i][j] = inner_q(G, basis[i], basis[j]);
    std::map<IntVec, int> mult;
    for (size_t i = 0; i < images.size(); ++i) mult[lattice_coords(basis, images[i])] += mults[i];
    return make_root_system(g2, mult);
}

LatticeRootSystem standard_system(const std::string& family, int n) {
    std::map<IntVec, int> m;
    int dim = family == "A" ? n + 1 : n;
    auto e = [&](int i) {
        IntVec v(dim, 0);
        v[i] = 1;
        return v;
    };
    if (family == "A") {
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (i != j) m[vec_sub(e(i), e(j))] = 1;
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int s : {1, -1})
                    for (int t : {1, -1}) m[vec_add(vec_scale(s, e(i)), vec_scale(t, e(j)))] = 1;
        for (int i = 0; i < n; ++i)
            for (int s : {1, -1}) {
                if (family == "B" || family == "BC") m[vec_scale(s, e(i))] = 1;
                if (family == "C" || family == "BC") m[vec_scale(2 * s, e(i))] = 1;
            }
        if (family != "B" && family != "C" && family != "D" && family != "BC")
            throw Error(kErrInvalid, "unknown family " + family);
    }
    GramForm g(dim, QVec(dim, 0));
    for (int i = 0; i < dim; ++i) g[i][i] = 1;
    return make_root_system(g, m);
}

}  // namespace twr
