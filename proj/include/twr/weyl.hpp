#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "twr/twistedroots.hpp"

namespace twr {

// finite group of automorphisms of X*(A), elements in BFS order (identity first)
struct AutGroup {
    AbelianGroup A;
    std::vector<DualAutomorphism> generators;
    std::vector<DualAutomorphism> elements;
    std::unordered_map<IntVec, size_t, KeyHash> index;

    size_t order() const { return elements.size(); }
    bool contains(const DualAutomorphism& g) const { return index.count(g.key()) > 0; }
    bool same_elements(const AutGroup& o) const;
};

// lambda -> lambda - lambda(cv) alpha
DualAutomorphism reflection_auto(const AbelianGroup& A, const Character& alpha, const Cocharacter& cv);
// mu -> mu - n<mu, xi> lambda, i.e. mu o s^{-1} for s(a) = a xi(lambda(a))
DualAutomorphism transvection_auto(const AbelianGroup& A, const Character& lambda, const TorsionElement& xi);

AutGroup generate(const AbelianGroup& A, const std::vector<DualAutomorphism>& gens, size_t bound = 1000000);
// subgroup of W cut out by a predicate, closed by construction since the predicates are homomorphic
AutGroup filter(const AutGroup& W, const std::function<bool(const DualAutomorphism&)>& keep);
bool is_normal(const AutGroup& H, const AutGroup& W);
// |HK| = |H||K| / |H n K|
size_t product_size(const AutGroup& H, const AutGroup& K);
AutGroup intersect(const AutGroup& H, const AutGroup& K);

struct SubgroupFilters {
    AutGroup W0, W1, Wprime;
    bool normal = true;
};
SubgroupFilters subgroup_filters(const AutGroup& W);

// simple system of R' lifted to roots, lex-smallest finite part per restriction
std::vector<Character> lifted_simple_system(const TwistedRootSystem& S);

// generalized finite roots that are not proper multiples of another one
std::vector<Character> proper_generalized_finite_roots(const TwistedRootSystem& S);

struct WeylGroups {
    AutGroup small, tiny, f, Rprime;
    SubgroupFilters filt;
    bool explicit_coroots = false;  // every finite root has an explicit coroot group
    std::optional<AutGroup> middle;
};
// I is needed only for W_middle (coroot groups of generalized finite roots)
WeylGroups weyl_groups(const TwistedRootSystem& S, const Instance* I = nullptr, size_t bound = 1000000);

struct WeylReport {
    CheckReport checks;
    std::vector<std::string> skipped;
    bool partial() const { return !skipped.empty(); }
};
WeylReport verify_weyl_theorems(const TwistedRootSystem& S, const WeylGroups& W);

// s_{a1} s_{a2} in W_f for infinite roots with equal or doubled restriction
CheckItem check_reflection_pairs(const TwistedRootSystem& S, const WeylGroups& W);

}  // namespace twr
