#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "twr/abgroup.hpp"

namespace twr {

using GramForm = QMat;

bool is_positive_definite(const GramForm& g);
Q inner(const GramForm& g, const IntVec& a, const IntVec& b);
Q inner_q(const GramForm& g, const QVec& a, const QVec& b);

struct LatticeRootSystem {
    GramForm gram;
    std::vector<IntVec> roots;  // sorted, distinct
    std::map<IntVec, int> mult;
    int dim() const { return static_cast<int>(gram.size()); }
    bool contains(const IntVec& v) const { return mult.count(v) > 0; }
};

LatticeRootSystem make_root_system(const GramForm& g, const std::map<IntVec, int>& mult);

Q cartan_integer(const IntVec& lambda, const IntVec& alpha, const GramForm& g);
IntVec reflect(const IntVec& lambda, const IntVec& alpha, const GramForm& g);

struct CheckItem {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool ok() const;
    void add(const std::string& name, bool pass, const std::string& witness = "");
    const CheckItem* find(const std::string& name) const;
    void merge(const CheckReport& o, const std::string& prefix = "");
};

CheckReport verify_root_system(const LatticeRootSystem& S, const std::vector<IntVec>& lattice_gens);

struct ComponentType {
    std::string family;  // A, B, C, D, BC
    int rank = 0;
    std::vector<IntVec> roots;
    // length class -> multiplicities seen ("short", "med", "long")
    std::map<std::string, std::set<int>> mult_by_class;
    std::map<IntVec, std::string> length_class;
    std::string label() const { return family + std::to_string(rank); }
};

// components sorted by (family, rank, smallest root); throws kErrCheck when unclassified
std::vector<ComponentType> classify_type(const LatticeRootSystem& S);
std::string type_label(const std::vector<ComponentType>& comps);

// positive roots lexicographically; simple roots are the indecomposable positive ones
std::vector<IntVec> positive_roots(const LatticeRootSystem& S);
std::vector<IntVec> simple_system(const LatticeRootSystem& S);

// orthogonal projection of roots outside span(sub) onto its complement, re-expressed
// in a Z-basis of the lattice spanned by the images
LatticeRootSystem restricted_projection(const LatticeRootSystem& Delta, const std::vector<IntVec>& simple,
                                        const std::vector<IntVec>& sub);

// standard systems in Euclidean coordinates
LatticeRootSystem standard_system(const std::string& family, int rank);

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_scale(Int k, const IntVec& a);
IntVec vec_neg(const IntVec& a);
bool vec_zero(const IntVec& a);
std::string vec_str(const IntVec& v);

// Z-basis of the lattice generated by rational vectors (columns of the result)
std::vector<QVec> lattice_basis(const std::vector<QVec>& vecs);
// coordinates of v in the basis, throws if not in the lattice span
IntVec lattice_coords(const std::vector<QVec>& basis, const QVec& v);

}  // namespace twr
