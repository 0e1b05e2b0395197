#include "twr/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace twr {

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int poly_deg(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    poly_trim(c);
    return c;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    poly_trim(c);
    return c;
}

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    int db = poly_deg(b);
    if (db < 0) throw Error(kErrInvalid, "polynomial division by zero");
    r = a;
    poly_trim(r);
    int da = poly_deg(r);
    q.assign(da >= db ? da - db + 1 : 0, 0);
    while ((da = poly_deg(r)) >= db) {
        Q f = r[da] / b[db];
        q[da - db] = f;
        for (int i = 0; i <= db; ++i) r[da - db + i] -= f * b[i];
        poly_trim(r);
    }
    poly_trim(q);
}

Q poly_eval(const Poly& p, const Q& x) {
    Q v = 0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) v = v * x + p[i];
    return v;
}

std::vector<Int> divisors(Int n) {
    std::vector<Int> d;
    for (Int k = 1; k <= n; ++k)
        if (n % k == 0) d.push_back(k);
    return d;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
    std::vector<std::pair<Int, int>> f;
    for (Int p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

Int euler_phi(Int n) {
    Int r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

const Poly& cyclotomic_poly(Int n) {
    static std::mutex mu;
    static std::map<Int, Poly> cache;
    if (n < 1) throw Error(kErrInvalid, "cyclotomic index must be positive");
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    Poly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (Int d : divisors(n)) {
        if (d == n) continue;
        Poly q, r;
        poly_divmod(p, cyclotomic_poly(d), q, r);
        if (poly_deg(r) >= 0) throw Error(kErrInternal, "cyclotomic division not exact");
        p = q;
    }
    std::lock_guard<std::mutex> lk(mu);
    return cache.emplace(n, p).first->second;
}

IntMat mat_identity(int n) {
    IntMat I(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMat c(n, IntVec(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

IntMat companion_matrix(const Poly& p) {
    int d = poly_deg(p);
    if (d < 1 || p[d] != 1) throw Error(kErrInvalid, "companion matrix needs a monic polynomial");
    IntMat C(d, IntVec(d, 0));
    for (int i = 1; i < d; ++i) C[i][i - 1] = 1;
    for (int i = 0; i < d; ++i) {
        if (p[i].get_den() != 1) throw Error(kErrInvalid, "companion matrix needs integer coefficients");
        C[i][d - 1] = -p[i].get_num().get_si();
    }
    return C;
}

// Faddeev-LeVerrier over Q
Poly charpoly(const IntMat& M) {
    int n = static_cast<int>(M.size());
    QMat A(n, QVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[i][j] = qi(M[i][j]);
    Poly c(n + 1, 0);
    c[n] = 1;
    QMat Mk(n, QVec(n, 0));  // M_0 = 0
    for (int k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        QMat next(n, QVec(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (A[i][l] == 0) continue;
                for (int j = 0; j < n; ++j) next[i][j] += A[i][l] * Mk[l][j];
            }
        for (int i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
        Mk = next;
        Q tr = 0;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) tr += A[i][l] * Mk[l][i];
        c[n - k] = -tr / qi(k);
    }
    return c;
}

Int matrix_order(const IntMat& M, Int bound) {
    IntMat I = mat_identity(static_cast<int>(M.size()));
    IntMat P = M;
    for (Int k = 1; k <= bound; ++k) {
        if (P == I) return k;
        P = mat_mul(P, M);
    }
    return 0;
}

std::vector<std::pair<Int, int>> cyclotomic_factorization(const Poly& p, Int max_index) {
    Poly rest = p;
    poly_trim(rest);
    std::vector<std::pair<Int, int>> out;
    for (Int d = 1; d <= max_index && poly_deg(rest) > 0; ++d) {
        const Poly& f = cyclotomic_poly(d);
        int m = 0;
        while (poly_deg(rest) >= poly_deg(f)) {
            Poly q, r;
            poly_divmod(rest, f, q, r);
            if (poly_deg(r) >= 0) break;
            rest = q;
            ++m;
        }
        if (m) out.emplace_back(d, m);
    }
    if (poly_deg(rest) != 0) return {};
    return out;
}

// ---------------------------------------------------------------- Q(zeta_N)

const CycField* cyc_field(Int N) {
    static std::mutex mu;
    static std::map<Int, std::unique_ptr<CycField>> cache;
    if (N < 1) throw Error(kErrInvalid, "conductor must be positive");
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second.get();
    auto f = std::make_unique<CycField>();
    f->N = N;
    f->modulus = cyclotomic_poly(N);
    f->degree = poly_deg(f->modulus);
    for (Int k = 0; k < N; ++k) {
        Poly tk(k + 1, 0);
        tk[k] = 1;
        Poly q, r;
        poly_divmod(tk, f->modulus, q, r);
        QVec v(f->degree, 0);
        for (size_t i = 0; i < r.size(); ++i) v[i] = r[i];
        f->powers.push_back(v);
    }
    return cache.emplace(N, std::move(f)).first->second.get();
}

Cyc Cyc::rational(const CycField* f, const Q& q) {
    Cyc c(f);
    c.c_[0] = q;
    return c;
}

Cyc Cyc::zeta(const CycField* f, Int k) {
    Cyc c(f);
    c.c_ = f->powers[mod_i(k, f->N)];
    return c;
}

bool Cyc::is_zero() const {
    for (auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Cyc Cyc::operator+(const Cyc& o) const {
    Cyc r = *this;
    r += o;
    return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
    Cyc r = *this;
    r -= o;
    return r;
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyc Cyc::operator*(const Cyc& o) const {
    Cyc r(f_);
    int d = f_->degree;
    for (int i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (o.c_[j] == 0) continue;
            Q p = c_[i] * o.c_[j];
            if (i + j < d) {
                r.c_[i + j] += p;
            } else {
                const QVec& red = f_->powers[(i + j) % f_->N];
                for (int k = 0; k < d; ++k)
                    if (red[k] != 0) r.c_[k] += p * red[k];
            }
        }
    }
    return r;
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw Error(kErrInvalid, "inverse of zero");
    // extended Euclid: s*a + u*m = g, g a nonzero constant
    Poly a = c_;
    poly_trim(a);
    Poly m = f_->modulus;
    Poly s0{Q(1)}, s1{};
    Poly r0 = a, r1 = m;
    while (poly_deg(r1) >= 0) {
        Poly q, r;
        poly_divmod(r0, r1, q, r);
        Poly s = poly_sub(s0, poly_mul(q, s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if (poly_deg(r0) != 0) throw Error(kErrInternal, "cyclotomic element not invertible");
    Q g = r0[0];
    Poly q, r;
    poly_divmod(s0, m, q, r);
    Cyc out(f_);
    for (size_t i = 0; i < r.size(); ++i) out.c_[i] = r[i] / g;
    return out;
}

Cyc Cyc::conj() const {
    Cyc r(f_);
    for (int i = 0; i < f_->degree; ++i)
        if (c_[i] != 0) r += Cyc::zeta(f_, -i) * Cyc::rational(f_, c_[i]);
    return r;
}

std::string Cyc::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].get_str();
        if (i) os << "*z^" << i;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<size_t> cyc_row_reduce(CycMat& M) {
    std::vector<size_t> pivots;
    if (M.empty()) return pivots;
    size_t rows = M.size(), cols = M[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && M[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(M[p], M[r]);
        Cyc inv = M[r][c].inverse();
        for (size_t j = c; j < cols; ++j)
            if (!M[r][j].is_zero()) M[r][j] = M[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c].is_zero()) continue;
            Cyc f = M[i][c];
            for (size_t j = c; j < cols; ++j)
                if (!M[r][j].is_zero()) M[i][j] -= f * M[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int cyc_rank(CycMat M) { return static_cast<int>(cyc_row_reduce(M).size()); }

CycMat cyc_nullspace(const CycMat& M, size_t ncols, const CycField* f) {
    CycMat R = M;
    auto piv = cyc_row_reduce(R);
    std::vector<bool> is_piv(ncols, false);
    for (size_t c : piv) is_piv[c] = true;
    CycMat basis;
    for (size_t fc = 0; fc < ncols; ++fc) {
        if (is_piv[fc]) continue;
        CycVec v(ncols, Cyc::zero(f));
        v[fc] = Cyc::one(f);
        for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -R[k][fc];
        basis.push_back(v);
    }
    return basis;
}

}  // namespace twr
