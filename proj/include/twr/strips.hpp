#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "twr/decomp.hpp"

namespace twr {

struct Strip {
    Character base;
    std::set<Character> R1, R2, R0a, Z0a;
};
Strip strip(const Character& alpha, const TwistedRootSystem& S);
bool is_subgroup(const AbelianGroup& A, const std::set<Character>& s);

// per-strip inclusions, constancy on simply-laced components, string closure
CheckReport strip_group_checks(const TwistedRootSystem& S);

struct YZ {
    std::map<Int, std::set<Character>> Y;  // prime -> projection of R_{0,a}
    bool has_Z = false;
    std::set<Character> Z2;
    CheckReport checks;
};
// p-primary part of a finite character
Character primary_part(const AbelianGroup& A, const Character& l, Int p);
YZ yz_decomposition(const Character& alpha, const TwistedRootSystem& S);

struct DimIdentity {
    std::string name;
    Int lhs = 0;  // from the realization
    Int rhs = 0;  // from the root data
};
struct DimReport {
    std::vector<DimIdentity> items;
    bool applies = true;  // the identities assume a (*)-subgroup
    bool ok() const;
};
DimReport dim_identities(const TwistedRootSystem& S, const WeightTable& t, const Instance& I);

struct StripR0Report {
    CheckReport checks;
    std::vector<std::string> skipped;
};
StripR0Report strip_equals_R0(const TwistedRootSystem& S, const IdealSplit& split);

}  // namespace twr
