#include "twr/abgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace twr {

Int gcd_i(Int a, Int b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }
Int lcm_i(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    return std::abs(a / gcd_i(a, b) * b);
}
Int mod_i(Int a, Int m) {
    if (m == 0) return a;
    Int r = a % m;
    return r < 0 ? r + m : r;
}

static Q frac_part(const Q& x) {
    Z fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Q r = x - Q(fl);
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------- SNF

namespace {
using ZMat = std::vector<std::vector<Z>>;

ZMat identity_z(size_t n) {
    ZMat I(n, std::vector<Z>(n, 0));
    for (size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

void swap_rows(ZMat& M, size_t a, size_t b) { std::swap(M[a], M[b]); }
void swap_cols(ZMat& M, size_t a, size_t b) {
    for (auto& row : M) std::swap(row[a], row[b]);
}
// row a += k * row b
void add_row(ZMat& M, size_t a, size_t b, const Z& k) {
    for (size_t j = 0; j < M[a].size(); ++j) M[a][j] += k * M[b][j];
}
void add_col(ZMat& M, size_t a, size_t b, const Z& k) {
    for (auto& row : M) row[a] += k * row[b];
}
}  // namespace

// rows a, b <- [[s, u], [-y, x]] * rows a, b  (determinant 1 when s*x + u*y = 1)
static void combine_rows(ZMat& M, size_t a, size_t b, const Z& s, const Z& u, const Z& x, const Z& y) {
    for (size_t j = 0; j < M[a].size(); ++j) {
        Z ra = s * M[a][j] + u * M[b][j];
        Z rb = x * M[b][j] - y * M[a][j];
        M[a][j] = ra;
        M[b][j] = rb;
    }
}

static void combine_cols(ZMat& M, size_t a, size_t b, const Z& s, const Z& u, const Z& x, const Z& y) {
    for (auto& row : M) {
        Z ca = s * row[a] + u * row[b];
        Z cb = x * row[b] - y * row[a];
        row[a] = ca;
        row[b] = cb;
    }
}

SNF smith_normal_form(const std::vector<std::vector<Z>>& M) {
    size_t m = M.size();
    size_t n = m ? M[0].size() : 0;
    SNF out;
    out.D = M;
    out.U = identity_z(m);
    out.V = identity_z(n);
    auto& D = out.D;
    for (size_t t = 0; t < m && t < n; ++t) {
        bool found = false;
        size_t pi = t, pj = t;
        Z best;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j)
                if (D[i][j] != 0 && (!found || abs(D[i][j]) < best)) {
                    best = abs(D[i][j]);
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        swap_rows(D, t, pi);
        swap_rows(out.U, t, pi);
        swap_cols(D, t, pj);
        swap_cols(out.V, t, pj);
        while (true) {
            for (size_t i = t + 1; i < m; ++i) {
                if (D[i][t] == 0) continue;
                Z g, s, u;
                mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), D[t][t].get_mpz_t(),
                           D[i][t].get_mpz_t());
                if (D[i][t] % D[t][t] == 0) {
                    g = D[t][t];
                    s = 1;
                    u = 0;
                }
                Z x = D[t][t] / g, y = D[i][t] / g;
                combine_rows(D, t, i, s, u, x, y);
                combine_rows(out.U, t, i, s, u, x, y);
            }
            bool moved = false;
            for (size_t j = t + 1; j < n; ++j) {
                if (D[t][j] == 0) continue;
                Z g, s, u;
                mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), D[t][t].get_mpz_t(),
                           D[t][j].get_mpz_t());
                if (D[t][j] % D[t][t] == 0) {
                    g = D[t][t];
                    s = 1;
                    u = 0;
                }
                Z x = D[t][t] / g, y = D[t][j] / g;
                combine_cols(D, t, j, s, u, x, y);
                combine_cols(out.V, t, j, s, u, x, y);
                moved = true;
            }
            if (moved) {
                bool col_clear = true;
                for (size_t i = t + 1; i < m; ++i)
                    if (D[i][t] != 0) col_clear = false;
                if (!col_clear) continue;
            }
            // divisibility of the trailing block by the pivot
            bool fixed = false;
            for (size_t i = t + 1; i < m && !fixed; ++i)
                for (size_t j = t + 1; j < n; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        add_row(D, t, i, 1);
                        add_row(out.U, t, i, 1);
                        fixed = true;
                        break;
                    }
            if (!fixed) break;
            // row t now has entries right of the pivot; the column pass clears them
        }
        if (D[t][t] < 0) {
            for (auto& x : D[t]) x = -x;
            for (auto& x : out.U[t]) x = -x;
        }
    }
    return out;
}

SNF smith_normal_form(const IntMat& M) {
    ZMat z;
    for (auto& r : M) {
        std::vector<Z> row;
        for (Int x : r) row.emplace_back(static_cast<long>(x));
        z.push_back(row);
    }
    return smith_normal_form(z);
}

std::vector<Z> snf_diagonal(const std::vector<std::vector<Z>>& M) {
    auto s = smith_normal_form(M);
    std::vector<Z> d;
    size_t k = std::min(s.D.size(), s.D.empty() ? 0 : s.D[0].size());
    for (size_t i = 0; i < k; ++i) d.push_back(s.D[i][i]);
    return d;
}

// ---------------------------------------------------------------- group

AbelianGroup::AbelianGroup(int r, IntVec d) : rank(r), inv(std::move(d)) {
    if (r < 0) throw Error(kErrInvalid, "negative rank");
    for (size_t j = 0; j < inv.size(); ++j) {
        if (inv[j] < 2) throw Error(kErrInvalid, "invariant factor below 2");
        if (j > 0 && inv[j - 1] % inv[j] != 0)
            throw Error(kErrInvalid, "invariants must satisfy d_{j+1} | d_j");
    }
}

Int AbelianGroup::finite_order() const {
    Int o = 1;
    for (Int d : inv) o *= d;
    return o;
}

Int AbelianGroup::exponent() const { return inv.empty() ? 1 : inv[0]; }

bool Character::is_finite() const {
    return std::all_of(inf.begin(), inf.end(), [](Int x) { return x == 0; });
}
bool Character::is_zero() const {
    return is_finite() && std::all_of(fin.begin(), fin.end(), [](Int x) { return x == 0; });
}

size_t CharacterHash::operator()(const Character& c) const {
    size_t h = 1469598103934665603ull;
    for (Int x : c.inf) h = (h ^ static_cast<size_t>(x + 0x9e3779b9)) * 1099511628211ull;
    h ^= 0xabcdef;
    for (Int x : c.fin) h = (h ^ static_cast<size_t>(x + 0x7f4a7c15)) * 1099511628211ull;
    return h;
}

size_t KeyHash::operator()(const IntVec& v) const {
    size_t h = 1469598103934665603ull;
    for (Int x : v) h = (h ^ static_cast<size_t>(x + 0x9e3779b9)) * 1099511628211ull;
    return h;
}

static void check_shape(const AbelianGroup& A, const Character& c) {
    if (static_cast<int>(c.inf.size()) != A.rank || static_cast<int>(c.fin.size()) != A.s())
        throw Error(kErrShape, "character shape does not match group");
}

Character canon(const AbelianGroup& A, Character c) {
    check_shape(A, c);
    for (int j = 0; j < A.s(); ++j) c.fin[j] = mod_i(c.fin[j], A.inv[j]);
    return c;
}

Character make_char(const AbelianGroup& A, IntVec inf, IntVec fin) {
    return canon(A, Character{std::move(inf), std::move(fin)});
}

Character zero_char(const AbelianGroup& A) {
    return Character{IntVec(A.rank, 0), IntVec(A.s(), 0)};
}

Character add(const AbelianGroup& A, const Character& x, const Character& y) {
    check_shape(A, x);
    check_shape(A, y);
    Character c = x;
    for (int i = 0; i < A.rank; ++i) c.inf[i] += y.inf[i];
    for (int j = 0; j < A.s(); ++j) c.fin[j] = mod_i(c.fin[j] + y.fin[j], A.inv[j]);
    return c;
}

Character neg(const AbelianGroup& A, const Character& x) { return scale(A, -1, x); }

Character sub(const AbelianGroup& A, const Character& x, const Character& y) {
    return add(A, x, neg(A, y));
}

Character scale(const AbelianGroup& A, Int k, const Character& x) {
    check_shape(A, x);
    Character c = x;
    for (auto& v : c.inf) v *= k;
    for (int j = 0; j < A.s(); ++j) c.fin[j] = mod_i(c.fin[j] * k, A.inv[j]);
    return c;
}

Int char_order(const AbelianGroup& A, const Character& c) {
    if (!c.is_finite()) return 0;
    Int o = 1;
    for (int j = 0; j < A.s(); ++j) o = lcm_i(o, A.inv[j] / gcd_i(A.inv[j], c.fin[j]));
    return o;
}

std::string char_str(const Character& c) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c.inf.size(); ++i) os << (i ? "," : "") << c.inf[i];
    os << ";";
    for (size_t i = 0; i < c.fin.size(); ++i) os << (i ? "," : "") << c.fin[i];
    os << ")";
    return os.str();
}

Int pair_cochar(const Character& c, const Cocharacter& t) {
    if (c.inf.size() != t.size()) throw Error(kErrShape, "cocharacter shape");
    Int s = 0;
    for (size_t i = 0; i < t.size(); ++i) s += c.inf[i] * t[i];
    return s;
}

bool TorsionElement::operator<(const TorsionElement& o) const {
    if (torus.size() != o.torus.size()) return torus.size() < o.torus.size();
    for (size_t i = 0; i < torus.size(); ++i)
        if (torus[i] != o.torus[i]) return torus[i] < o.torus[i];
    return fin < o.fin;
}

TorsionElement canon(const AbelianGroup& A, TorsionElement t) {
    if (static_cast<int>(t.torus.size()) != A.rank || static_cast<int>(t.fin.size()) != A.s())
        throw Error(kErrShape, "torsion element shape does not match group");
    for (auto& x : t.torus) x = frac_part(x);
    for (int j = 0; j < A.s(); ++j) t.fin[j] = mod_i(t.fin[j], A.inv[j]);
    return t;
}

TorsionElement add(const AbelianGroup& A, const TorsionElement& x, const TorsionElement& y) {
    TorsionElement t = x;
    for (size_t i = 0; i < t.torus.size(); ++i) t.torus[i] += y.torus[i];
    for (size_t j = 0; j < t.fin.size(); ++j) t.fin[j] += y.fin[j];
    return canon(A, t);
}

TorsionElement scale(const AbelianGroup& A, Int k, const TorsionElement& x) {
    TorsionElement t = x;
    for (auto& v : t.torus) v *= qi(k);
    for (auto& v : t.fin) v *= k;
    return canon(A, t);
}

Int torsion_order(const AbelianGroup& A, const TorsionElement& t) {
    Int o = 1;
    for (auto& x : t.torus) o = lcm_i(o, x.get_den().get_si());
    for (int j = 0; j < A.s(); ++j) o = lcm_i(o, A.inv[j] / gcd_i(A.inv[j], t.fin[j]));
    return o;
}

std::string torsion_str(const TorsionElement& t) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < t.torus.size(); ++i) os << (i ? "," : "") << t.torus[i].get_str();
    os << ";";
    for (size_t i = 0; i < t.fin.size(); ++i) os << (i ? "," : "") << t.fin[i];
    os << ")";
    return os.str();
}

Q pair(const AbelianGroup& A, const Character& l, const TorsionElement& t) {
    check_shape(A, l);
    if (static_cast<int>(t.torus.size()) != A.rank || static_cast<int>(t.fin.size()) != A.s())
        throw Error(kErrShape, "torsion element shape does not match group");
    Q s = 0;
    for (int i = 0; i < A.rank; ++i) s += Q(static_cast<long>(l.inf[i])) * t.torus[i];
    for (int j = 0; j < A.s(); ++j)
        s += Q(static_cast<long>(l.fin[j] * t.fin[j]), static_cast<long>(A.inv[j]));
    return frac_part(s);
}

Int n_torsion_count(const AbelianGroup& A, Int n) {
    Int c = 1;
    for (int i = 0; i < A.rank; ++i) c *= n;
    for (Int d : A.inv) c *= gcd_i(n, d);
    return c;
}

std::vector<TorsionElement> n_torsion(const AbelianGroup& A, Int n, Int limit) {
    if (n < 1) throw Error(kErrInvalid, "n must be positive");
    Int bound = n_torsion_count(A, n);
    if (bound > limit) throw Error(kErrBound, "n-torsion enumeration exceeds limit");
    std::vector<TorsionElement> out;
    std::vector<Int> step(A.s());
    for (int j = 0; j < A.s(); ++j) step[j] = A.inv[j] / gcd_i(n, A.inv[j]);
    std::vector<Int> ctr(A.rank + A.s(), 0);
    std::vector<Int> lim(A.rank + A.s());
    for (int i = 0; i < A.rank; ++i) lim[i] = n;
    for (int j = 0; j < A.s(); ++j) lim[A.rank + j] = gcd_i(n, A.inv[j]);
    while (true) {
        TorsionElement t;
        for (int i = 0; i < A.rank; ++i) t.torus.push_back(Q(static_cast<long>(ctr[i]), static_cast<long>(n)));
        for (int j = 0; j < A.s(); ++j) t.fin.push_back(ctr[A.rank + j] * step[j]);
        out.push_back(canon(A, t));
        size_t k = 0;
        while (k < ctr.size()) {
            if (++ctr[k] < lim[k]) break;
            ctr[k] = 0;
            ++k;
        }
        if (k == ctr.size()) break;
    }
    return out;
}

bool generates(const std::vector<Character>& chars, const AbelianGroup& A) {
    int r = A.rank, s = A.s();
    int dim = r + s;
    if (dim == 0) return true;
    std::vector<std::vector<Z>> M(dim);
    for (auto& c : chars) {
        check_shape(A, c);
        for (int i = 0; i < r; ++i) M[i].push_back(Z(static_cast<long>(c.inf[i])));
        for (int j = 0; j < s; ++j) M[r + j].push_back(Z(static_cast<long>(c.fin[j])));
    }
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < dim; ++i) M[i].push_back(i == r + j ? Z(static_cast<long>(A.inv[j])) : Z(0));
    if (M[0].empty()) return false;
    auto d = snf_diagonal(M);
    if (static_cast<int>(d.size()) < dim) return false;
    for (int i = 0; i < dim; ++i)
        if (d[i] != 1) return false;
    return true;
}

std::vector<TorsionElement> all_elements_finite(const AbelianGroup& A) {
    if (A.rank != 0) throw Error(kErrInvalid, "group is not finite");
    return n_torsion(A, A.exponent(), 100000000);
}

std::vector<TorsionElement> common_kernel_finite(const std::vector<Character>& chars,
                                                 const AbelianGroup& A) {
    std::vector<TorsionElement> out;
    for (auto& t : all_elements_finite(A)) {
        bool in = true;
        for (auto& c : chars)
            if (pair(A, c, t) != 0) {
                in = false;
                break;
            }
        if (in) out.push_back(t);
    }
    return out;
}

// ---------------------------------------------------------------- linear algebra over Q

Q det_q(QMat m) {
    size_t n = m.size();
    Q det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Q f = m[i][c] / m[c][c];
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

QMat inverse_q(const QMat& a) {
    size_t n = a.size();
    QMat m = a;
    QMat inv(n, QVec(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw Error(kErrInvalid, "singular matrix");
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        Q piv = m[c][c];
        for (size_t j = 0; j < n; ++j) {
            m[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Q f = m[i][c];
            for (size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

int rank_q(QMat m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    for (size_t c = 0; c < cols && static_cast<size_t>(rank) < rows; ++c) {
        size_t p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (size_t i = rank + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Q f = m[i][c] / m[rank][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

Z det_z(const IntMat& m) {
    QMat q;
    for (auto& r : m) {
        QVec row;
        for (Int x : r) row.emplace_back(static_cast<long>(x));
        q.push_back(row);
    }
    Q d = det_q(q);
    return d.get_num();
}

// ---------------------------------------------------------------- dual automorphisms

DualAutomorphism::DualAutomorphism(const AbelianGroup& A, IntMat m) : A_(A), m_(std::move(m)) {
    int n = A.dim();
    if (static_cast<int>(m_.size()) != n) throw Error(kErrShape, "automorphism matrix size");
    for (auto& row : m_)
        if (static_cast<int>(row.size()) != n) throw Error(kErrShape, "automorphism matrix size");
    for (int i = 0; i < A.rank; ++i)
        for (int j = A.rank; j < n; ++j)
            if (m_[i][j] != 0)
                throw Error(kErrInvalid, "torsion sublattice must map into torsion");
    for (int i = 0; i < A.s(); ++i)
        for (int j = 0; j < A.s(); ++j) {
            Int di = A.inv[i], dj = A.inv[j];
            if (mod_i(dj * m_[A.rank + i][A.rank + j], di) != 0)
                throw Error(kErrInvalid, "torsion column not compatible with relations");
        }
    canonicalize();
}

DualAutomorphism DualAutomorphism::identity(const AbelianGroup& A) {
    IntMat m(A.dim(), IntVec(A.dim(), 0));
    for (int i = 0; i < A.dim(); ++i) m[i][i] = 1;
    return DualAutomorphism(A, m);
}

void DualAutomorphism::canonicalize() {
    for (int i = 0; i < A_.s(); ++i)
        for (auto& x : m_[A_.rank + i]) x = mod_i(x, A_.inv[i]);
    key_.clear();
    for (auto& row : m_) key_.insert(key_.end(), row.begin(), row.end());
}

Character DualAutomorphism::apply(const Character& c) const {
    check_shape(A_, c);
    int r = A_.rank, n = A_.dim();
    IntVec v(c.inf);
    v.insert(v.end(), c.fin.begin(), c.fin.end());
    Character out{IntVec(r, 0), IntVec(A_.s(), 0)};
    for (int i = 0; i < n; ++i) {
        Int s = 0;
        for (int j = 0; j < n; ++j) s += m_[i][j] * v[j];
        if (i < r)
            out.inf[i] = s;
        else
            out.fin[i - r] = mod_i(s, A_.inv[i - r]);
    }
    return out;
}

DualAutomorphism DualAutomorphism::compose(const DualAutomorphism& o) const {
    int n = A_.dim();
    IntMat p(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (m_[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) p[i][j] += m_[i][k] * o.m_[k][j];
        }
    for (int i = 0; i < A_.s(); ++i)
        for (auto& x : p[A_.rank + i]) x = mod_i(x, A_.inv[i]);
    return DualAutomorphism(A_, p);
}

IntMat DualAutomorphism::free_block() const {
    IntMat p(A_.rank, IntVec(A_.rank));
    for (int i = 0; i < A_.rank; ++i)
        for (int j = 0; j < A_.rank; ++j) p[i][j] = m_[i][j];
    return p;
}

bool DualAutomorphism::is_identity() const { return *this == identity(A_); }

bool DualAutomorphism::acts_trivially_on_free_quotient() const {
    for (int i = 0; i < A_.rank; ++i)
        for (int j = 0; j < A_.rank; ++j)
            if (m_[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

bool DualAutomorphism::acts_trivially_on_torsion() const {
    for (int i = 0; i < A_.s(); ++i)
        for (int j = 0; j < A_.s(); ++j) {
            Int want = i == j ? 1 : 0;
            if (mod_i(m_[A_.rank + i][A_.rank + j] - want, A_.inv[i]) != 0) return false;
        }
    return true;
}

bool DualAutomorphism::is_invertible() const {
    if (A_.rank > 0) {
        Z d = det_z(free_block());
        if (d != 1 && d != -1) return false;
    }
    int s = A_.s();
    if (s == 0) return true;
    std::vector<std::vector<Z>> M(s);
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) M[i].push_back(Z(static_cast<long>(m_[A_.rank + i][A_.rank + j])));
        for (int j = 0; j < s; ++j) M[i].push_back(i == j ? Z(static_cast<long>(A_.inv[i])) : Z(0));
    }
    auto d = snf_diagonal(M);
    for (auto& x : d)
        if (x != 1) return false;
    return static_cast<int>(d.size()) == s;
}

DualAutomorphism DualAutomorphism::inverse() const {
    if (!is_invertible()) throw Error(kErrInvalid, "automorphism is not invertible");
    int r = A_.rank, s = A_.s(), n = A_.dim();
    // free block inverse over Z
    IntMat Pinv(r, IntVec(r, 0));
    if (r > 0) {
        QMat q;
        for (auto& row : free_block()) {
            QVec qr;
            for (Int x : row) qr.emplace_back(static_cast<long>(x));
            q.push_back(qr);
        }
        QMat qi = inverse_q(q);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) Pinv[i][j] = qi[i][j].get_num().get_si();
    }
    // torsion block inverse: R has finite order in Aut(F)
    IntMat R(s, IntVec(s));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) R[i][j] = m_[r + i][r + j];
    auto mulR = [&](const IntMat& a, const IntMat& b) {
        IntMat c(s, IntVec(s, 0));
        for (int i = 0; i < s; ++i)
            for (int k = 0; k < s; ++k)
                for (int j = 0; j < s; ++j) c[i][j] += a[i][k] * b[k][j];
        for (int i = 0; i < s; ++i)
            for (auto& x : c[i]) x = mod_i(x, A_.inv[i]);
        return c;
    };
    IntMat I(s, IntVec(s, 0));
    for (int i = 0; i < s; ++i) I[i][i] = 1 % A_.inv[i];
    IntMat prev = I, cur = R;
    Int guard = 0;
    while (cur != I) {
        prev = cur;
        cur = mulR(cur, R);
        if (++guard > 10000000) throw Error(kErrBound, "torsion block order too large");
    }
    IntMat Rinv = s ? (R == I ? I : prev) : IntMat{};
    // Q' = -Rinv * Q * Pinv
    IntMat out(n, IntVec(n, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) out[i][j] = Pinv[i][j];
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) out[r + i][r + j] = Rinv[i][j];
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < r; ++j) {
            Int acc = 0;
            for (int k = 0; k < s; ++k)
                for (int l = 0; l < r; ++l) acc += Rinv[i][k] * m_[r + k][l] * Pinv[l][j];
            out[r + i][j] = mod_i(-acc, A_.inv[i]);
        }
    return DualAutomorphism(A_, out);
}

std::string DualAutomorphism::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < m_.size(); ++i) {
        os << (i ? ";" : "");
        for (size_t j = 0; j < m_[i].size(); ++j) os << (j ? "," : "") << m_[i][j];
    }
    os << "]";
    return os.str();
}

}  // namespace twr
