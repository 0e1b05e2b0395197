#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twr/catalog.hpp"

namespace twr {

struct FiniteCorootData {
    Int order = 0;
    Int predicted = 0;       // Vogan count
    bool asserted = true;    // false when A is not known to be maximal abelian
    std::optional<std::vector<TorsionElement>> group;  // explicit elements, sorted
};

struct TwistedRootSystem {
    AbelianGroup A;
    GramForm gram;
    std::map<Character, int> roots;  // nonzero weights with multiplicities
    std::map<Character, Cocharacter> inf_coroots;
    std::map<Character, FiniteCorootData> fin;

    bool is_root(const Character& c) const { return roots.count(c) > 0; }
    std::vector<Character> infinite_roots() const;
    std::vector<Character> finite_roots() const;
};

Cocharacter infinite_coroot(const Character& alpha, const GramForm& gram);
Int vogan_count(const Character& lambda, const WeightTable& t);

struct FixedPointCount {
    bool positive_dim = false;  // det(I - y) = 0
    Z route1;                   // |det(I - y)|
    Z route2;                   // prod p^{m_y(p^k)}
    Int order = 0;
};
FixedPointCount fixed_point_count(const IntMat& y, Int order_bound = 1000);

struct OracleOptions {
    bool enabled = true;
    int max_N = 12;
    Int max_tuples = 100000;
};
// nullopt when the instance is outside the oracle's scope
std::optional<std::vector<TorsionElement>> coroot_group_oracle(const Character& alpha, const Instance& I,
                                                               const OracleOptions& opt = {});
bool oracle_applies(const Instance& I, const OracleOptions& opt = {});

TwistedRootSystem assemble(const Instance& I, const OracleOptions& opt = {});

// actions on characters (lambda -> lambda o phi^{-1}) and on torsion elements (t -> phi(t))
Character reflect_char(const TwistedRootSystem& S, const Character& alpha, const Character& lambda);
TorsionElement reflect_torsion(const TwistedRootSystem& S, const Character& alpha, const TorsionElement& t);
Character transvect_char(const AbelianGroup& A, const Character& alpha, const TorsionElement& xi,
                         const Character& lambda);
TorsionElement transvect_torsion(const AbelianGroup& A, const Character& alpha, const TorsionElement& xi,
                                 const TorsionElement& t);

// axioms (1)-(6) of an abstract twisted root system
CheckReport validate_axioms(const TwistedRootSystem& S);

// R' = restrictions of infinite roots to A^0, multiplicity = strip dimension
LatticeRootSystem restricted_system(const TwistedRootSystem& S);
CheckReport check_restricted(const TwistedRootSystem& S);

}  // namespace twr
