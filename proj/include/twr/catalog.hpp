#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twr/realization.hpp"
#include "twr/rootlattice.hpp"

namespace twr {

struct Instance {
    std::string family;  // pu, po, psp, autsu, sym, prod, gprime
    std::vector<std::pair<std::string, std::string>> params;
    GradedAlgebra alg;
    ActionData act;
    WeightTable table;
    GramForm gram;  // on X*(A^0), dual of the restricted Killing form
    bool maximal = true;
    bool star_required = true;
    // simple factors as algebra block indices, and how each generator permutes them
    std::vector<int> factor_of_block;
    std::vector<std::vector<int>> factor_perm;
    std::optional<MonomialOperator> theta;  // symmetric pairs only
    IntMat to_std;  // character coordinates to the standard e_i coordinates; empty when equal

    IntVec std_coords(const IntVec& v) const;
    std::string descriptor() const;
    const AbelianGroup& A() const { return act.A; }
    int num_factors() const;
};

struct Descriptor {
    std::string family;
    std::string variant;  // sym kind or prod name
    std::map<std::string, std::string> kv;
};
Descriptor parse_descriptor(const std::string& s);
Instance make_instance(const std::string& descriptor);

Instance pu_instance(int n, int m, const std::vector<int>& parts);
Instance po_instance(int k, int s0, int s1);
Instance psp_instance(int k, int s0, int s1);
Instance aut_su_outer_instance(int k, int s0, int s1);
Instance symmetric_instance(const std::string& kind, int p, int q = 0);
Instance product_instance(const std::string& name);
// block realization of g' = sum su(p^a) over the prime powers of n, with the Heisenberg (Z/n)^2 acting diagonally
Instance gprime_instance(int n);

// involution checks for symmetric pairs: involution, torus_in_p, maximal_in_p
CheckReport check_theta(const Instance& I);

// Killing-type gram on X*(A^0) from the weights of A^0: (sum mult * l l^T)^{-1}
GramForm killing_gram(const WeightTable& t);

// generators of C_{n_1} x ... x C_{n_s} in S_n, 0-based images
std::vector<std::vector<int>> transitive_sigma(int n, const std::vector<int>& parts);
bool perms_commute(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> cycle_lengths(const std::vector<int>& p);
bool generated_group_transitive(const std::vector<std::vector<int>>& gens, int n);

struct CyclotomicModule {
    Poly phi;
    IntMat companion;
};
CyclotomicModule cyclotomic_module(int n);

// expected R' data from the classical rows of the classification table
struct TableRow {
    std::string label;                // canonical type label of R'
    std::map<std::string, Int> mult;  // strip multiplicities keyed by root shape: "ij", "e", "2e", "e_b"
    std::set<std::string> group;      // shapes whose R_{0,a} is listed as a group ("Y")
};
std::optional<TableRow> table_row(const std::string& family, int a, int b, int c);
// shape of a restricted root in the torus coordinates of a catalog instance
std::string root_shape(const std::string& family, const IntVec& v);

// descriptors used by --suite and the Table 1 sweep
std::vector<std::string> suite_descriptors();
std::vector<std::string> table_descriptors(int max_n);

}  // namespace twr
