#pragma once

#include <map>
#include <string>
#include <vector>

#include "twr/weyl.hpp"

namespace twr {

// weight table of I with weight-space bases, recomputed when the stored one has none
WeightTable materialized_table(const Instance& I);

struct IdealSplit {
    int dim_g = 0;
    int dim_inf = 0;
    int dim_f = 0;
    std::map<Character, std::vector<CycSparse>> inf_basis;  // g_inf n g_lambda
    std::map<Character, std::vector<CycSparse>> f_basis;    // g_f n g_lambda
    bool direct = true;    // g_inf n g_f = 0 weight by weight
    bool ideal = true;     // [g, g_inf] in g_inf
    std::string witness;
    bool g_is_ginf() const { return dim_inf == dim_g; }
};
IdealSplit g_infinity_split(const TwistedRootSystem& S, const WeightTable& t, const GradedAlgebra& alg);

struct ASimplicity {
    bool r_irreducible = false;
    bool a_simple = false;
    int factors = 0;
    int orbits = 0;
    std::string witness;
    bool agree() const { return r_irreducible == a_simple; }
};
// throws when g != g_inf
ASimplicity a_simplicity(const TwistedRootSystem& S, const Instance& I, const IdealSplit& split);

struct PrimeData {
    Int n = 0;
    std::vector<Int> primes;
    std::map<Int, int> dim_gp;          // dim g_(p)
    std::map<Int, int> derived_dim_gp;  // dim [g_(p), g_(p)], -1 without bases
    int dim_gprime = 0;
    int dim_g = 0;
    std::map<std::vector<Int>, int> dim_MI;  // I as a list of primes
    // square-free m | n: dims of g^(m), g^(m'), M'_(m)
    std::map<Int, std::vector<int>> eq6;
    bool eq5 = true;
    bool eq6_ok = true;
    bool orth_checked = false;
    bool orth = true;
    std::string witness;
};
// A must be finite
PrimeData prime_components(const WeightTable& t, const Instance& I, const GradedAlgebra* alg = nullptr);

// character order of a finite character, split into its primes
std::vector<Int> prime_support(Int n);

// the table of A inside g' (roots of prime-power order)
WeightTable gprime_table(const WeightTable& t);

struct GPrimeWeyl {
    CheckReport checks;
    std::vector<std::string> skipped;
    size_t order_g = 0, order_gprime = 0;
};
// model: an explicit realization of (A, g') sharing A's coordinates, used for its coroot groups
GPrimeWeyl gprime_weyl_equal(const Instance& I, const Instance* model);

}  // namespace twr
