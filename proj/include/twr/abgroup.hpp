#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace twr {

using Int = long long;
using Q = mpq_class;
using Z = mpz_class;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

inline Q qi(Int x) { return Q(static_cast<long>(x)); }
inline Z zi(Int x) { return Z(static_cast<long>(x)); }

struct Error : std::runtime_error {
    int code;
    Error(int c, const std::string& m) : std::runtime_error(m), code(c) {}
};

// error codes shared with the C API
enum ErrCode : int {
    kOk = 0,
    kErrInvalid = 1,
    kErrShape = 2,
    kErrBound = 3,
    kErrCheck = 4,
    kErrParse = 5,
    kErrInternal = 6
};

Int gcd_i(Int a, Int b);
Int lcm_i(Int a, Int b);
Int mod_i(Int a, Int m);

// U*M*V = D, D diagonal with d_i | d_{i+1} (nonnegative)
struct SNF {
    std::vector<std::vector<Z>> U, D, V;
};
SNF smith_normal_form(const std::vector<std::vector<Z>>& M);
SNF smith_normal_form(const IntMat& M);
std::vector<Z> snf_diagonal(const std::vector<std::vector<Z>>& M);

// A = T^rank x prod Z/inv[j], inv descending with inv[j+1] | inv[j]
struct AbelianGroup {
    int rank = 0;
    IntVec inv;

    AbelianGroup() = default;
    AbelianGroup(int r, IntVec d);
    int s() const { return static_cast<int>(inv.size()); }
    int dim() const { return rank + s(); }
    Int finite_order() const;
    Int exponent() const;
    bool operator==(const AbelianGroup& o) const { return rank == o.rank && inv == o.inv; }
};

struct Character {
    IntVec inf;
    IntVec fin;
    bool is_finite() const;
    bool is_zero() const;
    bool operator==(const Character& o) const { return inf == o.inf && fin == o.fin; }
    bool operator<(const Character& o) const {
        return inf != o.inf ? inf < o.inf : fin < o.fin;
    }
};

struct CharacterHash {
    size_t operator()(const Character& c) const;
};

Character make_char(const AbelianGroup& A, IntVec inf, IntVec fin);
Character canon(const AbelianGroup& A, Character c);
Character add(const AbelianGroup& A, const Character& x, const Character& y);
Character sub(const AbelianGroup& A, const Character& x, const Character& y);
Character neg(const AbelianGroup& A, const Character& x);
Character scale(const AbelianGroup& A, Int k, const Character& x);
Character zero_char(const AbelianGroup& A);
// order of a finite character; 0 for infinite ones
Int char_order(const AbelianGroup& A, const Character& c);
std::string char_str(const Character& c);

using Cocharacter = IntVec;
Int pair_cochar(const Character& c, const Cocharacter& t);

struct TorsionElement {
    QVec torus;  // each entry in [0,1)
    IntVec fin;  // entry j in [0, inv[j])
    bool operator==(const TorsionElement& o) const { return torus == o.torus && fin == o.fin; }
    bool operator<(const TorsionElement& o) const;
};

TorsionElement canon(const AbelianGroup& A, TorsionElement t);
TorsionElement add(const AbelianGroup& A, const TorsionElement& x, const TorsionElement& y);
TorsionElement scale(const AbelianGroup& A, Int k, const TorsionElement& x);
Int torsion_order(const AbelianGroup& A, const TorsionElement& t);
std::string torsion_str(const TorsionElement& t);

// value in [0,1)
Q pair(const AbelianGroup& A, const Character& l, const TorsionElement& t);

// all elements with n*t = 0; throws kErrBound past the limit
std::vector<TorsionElement> n_torsion(const AbelianGroup& A, Int n, Int limit = 1000000);
Int n_torsion_count(const AbelianGroup& A, Int n);

bool generates(const std::vector<Character>& chars, const AbelianGroup& A);
// brute-force simultaneous kernel on a finite group (rank 0)
std::vector<TorsionElement> common_kernel_finite(const std::vector<Character>& chars,
                                                 const AbelianGroup& A);
std::vector<TorsionElement> all_elements_finite(const AbelianGroup& A);

// action on X*(A) presented on Z^{r+s}; block lower triangular
class DualAutomorphism {
public:
    DualAutomorphism() = default;
    DualAutomorphism(const AbelianGroup& A, IntMat m);
    static DualAutomorphism identity(const AbelianGroup& A);

    const AbelianGroup& group() const { return A_; }
    const IntMat& matrix() const { return m_; }
    Character apply(const Character& c) const;
    DualAutomorphism compose(const DualAutomorphism& o) const;  // this after o
    DualAutomorphism inverse() const;
    bool is_identity() const;
    bool is_invertible() const;
    bool acts_trivially_on_free_quotient() const;
    bool acts_trivially_on_torsion() const;
    IntMat free_block() const;
    const IntVec& key() const { return key_; }
    std::string str() const;
    bool operator==(const DualAutomorphism& o) const { return key_ == o.key_; }

private:
    void canonicalize();
    AbelianGroup A_;
    IntMat m_;
    IntVec key_;
};

struct KeyHash {
    size_t operator()(const IntVec& v) const;
};

// utilities
Q det_q(QMat m);
QMat inverse_q(const QMat& m);
int rank_q(QMat m);
Z det_z(const IntMat& m);

}  // namespace twr
