#pragma once

#include <memory>
#include <string>
#include <vector>

#include "twr/abgroup.hpp"

namespace twr {

// dense rational polynomials, coefficient i is the t^i term
using Poly = std::vector<Q>;

void poly_trim(Poly& p);
int poly_deg(const Poly& p);  // -1 for zero
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
// a = q*b + r
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Q poly_eval(const Poly& p, const Q& x);

// Phi_n by division of t^n - 1 by Phi_d for proper divisors d
const Poly& cyclotomic_poly(Int n);
Int euler_phi(Int n);
std::vector<Int> divisors(Int n);
std::vector<std::pair<Int, int>> factorize(Int n);

IntMat companion_matrix(const Poly& monic_integer_poly);
// characteristic polynomial det(tI - M), exact
Poly charpoly(const IntMat& M);
// order of a finite-order matrix, 0 if none up to the bound
Int matrix_order(const IntMat& M, Int bound = 1000);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat mat_identity(int n);

// multiplicities m(d) with charpoly = prod Phi_d^{m(d)}; empty if not a product of cyclotomics
std::vector<std::pair<Int, int>> cyclotomic_factorization(const Poly& p, Int max_index);

// Q(zeta_N) as Q[t]/Phi_N
struct CycField {
    Int N = 1;
    int degree = 1;
    Poly modulus;
    std::vector<QVec> powers;  // zeta^k reduced, k in [0, N)
};
const CycField* cyc_field(Int N);

class Cyc {
public:
    Cyc() = default;
    explicit Cyc(const CycField* f) : f_(f), c_(f->degree, 0) {}
    static Cyc zero(const CycField* f) { return Cyc(f); }
    static Cyc one(const CycField* f) { return rational(f, Q(1)); }
    static Cyc rational(const CycField* f, const Q& q);
    static Cyc zeta(const CycField* f, Int k);

    bool is_zero() const;
    bool is_rational() const;
    const QVec& coeffs() const { return c_; }
    const CycField* field() const { return f_; }

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator-() const;
    Cyc operator*(const Cyc& o) const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc inverse() const;
    Cyc conj() const;
    bool operator==(const Cyc& o) const { return c_ == o.c_; }
    bool operator!=(const Cyc& o) const { return !(*this == o); }
    std::string str() const;

private:
    const CycField* f_ = nullptr;
    QVec c_;
};

using CycVec = std::vector<Cyc>;
using CycMat = std::vector<CycVec>;

// row echelon form in place; returns pivot columns
std::vector<size_t> cyc_row_reduce(CycMat& M);
int cyc_rank(CycMat M);
// basis of {x : M x = 0}
CycMat cyc_nullspace(const CycMat& M, size_t ncols, const CycField* f);

}  // namespace twr
