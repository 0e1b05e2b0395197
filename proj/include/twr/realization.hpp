#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "twr/abgroup.hpp"
#include "twr/cyclotomic.hpp"

namespace twr {

// P = sum_b zeta_M^{exps[b]} E_{perm[b], b}; with conj the adjoint action is X -> -P X^T P^{-1}
struct MonomialOperator {
    std::vector<int> perm;
    IntVec exps;
    Int modulus = 1;
    bool conj = false;

    int size() const { return static_cast<int>(perm.size()); }
    static MonomialOperator identity(int n, Int modulus = 1);
    static MonomialOperator diagonal(const IntVec& exps, Int modulus);
    static MonomialOperator permutation(const std::vector<int>& perm);
    MonomialOperator with_modulus(Int m) const;  // m must be a multiple of modulus
    MonomialOperator compose(const MonomialOperator& o) const;  // this after o (adjoint actions)
    MonomialOperator inverse() const;
    bool operator==(const MonomialOperator& o) const;
    std::string str() const;
};

// tensor product of operators (first factor is the slow index)
MonomialOperator kron(const MonomialOperator& a, const MonomialOperator& b);
// block diagonal sum; conj flags must agree
MonomialOperator direct_sum(const std::vector<MonomialOperator>& ops);

struct SparseEntry {
    int row, col;
    Int coeff;
};
using SparseMat = std::vector<SparseEntry>;

// sparse matrices with disjoint supports; coordinates are read off one entry each
struct MonomialBasis {
    int N = 0;
    std::vector<SparseMat> elems;
    std::unordered_map<long long, std::pair<int, Int>> pos;
    void add(const SparseMat& m);
    int size() const { return static_cast<int>(elems.size()); }
};

struct AlgebraBlock {
    std::string kind;  // su, so, sp
    int offset = 0;
    int size = 0;
};

// g realized inside a block-diagonal gl_N; the frame spans g plus the su-block identities
struct GradedAlgebra {
    std::string name;
    int N = 0;
    std::vector<AlgebraBlock> blocks;
    MonomialBasis frame;
    MonomialBasis center;  // identity matrix of each su block
    int dim() const { return frame.size() - center.size(); }

    // bracket of two frame elements in frame coordinates
    const std::vector<std::pair<int, Q>>& frame_bracket(int i, int j) const;
    std::vector<std::pair<int, Q>> frame_coords(const std::map<std::pair<int, int>, Q>& m) const;

    mutable std::unordered_map<long long, std::vector<std::pair<int, Q>>> bracket_cache;
};

struct BlockSpec {
    std::string kind;
    int n = 0;
    // so: symmetric involution beta with form B e_a = e_{beta(a)}
    // sp: Omega^{-1} e_a = sign[a] e_{pi(a)}
    std::vector<int> perm;
    std::vector<int> sign;
};

GradedAlgebra build_algebra(const std::string& kind, int n);
GradedAlgebra build_from_blocks(const std::vector<BlockSpec>& blocks, const std::string& name);

// structure constants on an explicit basis of g
struct StructureConstants {
    int dim = 0;
    std::vector<SparseMat> basis;
    std::vector<std::vector<std::vector<std::pair<int, Q>>>> c;  // c[i][j] = [b_i, b_j]
};
StructureConstants structure_constants(const GradedAlgebra& alg);
// checks antisymmetry and Jacobi on all triples (or a deterministic sample above max_triples)
bool check_jacobi(const StructureConstants& sc, long long max_triples, std::string* witness);

// action of an operator on a monomial basis: Ad(a) e_i = zeta_L^{phase[i]} e_{perm[i]}
struct BasisAction {
    std::vector<int> perm;
    IntVec phase;
};
BasisAction act_on_basis(const MonomialOperator& a, const MonomialBasis& B, Int L);

// adjoint action on a frame element as frame coordinates with cyclotomic coefficients
std::vector<std::pair<int, Cyc>> adjoint_action(const MonomialOperator& a, const GradedAlgebra& alg, int frame_index,
                                                const CycField* F);

// the acting group A = T^r x prod Z/d_j: torus weights on C^N plus monomial generators
struct ActionData {
    AbelianGroup A;
    IntMat torus;  // r rows of length N
    std::vector<MonomialOperator> gens;
    Int torus_den = 1;  // coordinate weights are torus/torus_den; only differences need be integral
};

using CycSparse = std::vector<std::pair<int, Cyc>>;

struct WeightTable {
    AbelianGroup A;
    Int L = 2;
    const CycField* field = nullptr;
    std::map<Character, int> mult;  // includes the zero character when present
    bool has_bases = false;
    std::map<Character, std::vector<CycSparse>> bases;  // frame coordinates of g_lambda
    bool star = false;                                   // mult(0) == rank
    bool counting_checked = false;

    int mult_of(const Character& c) const;
    int total() const;
};

struct WeightOptions {
    bool materialize = false;
    int materialize_limit = 64;
    Int counting_limit = 5000;  // |F| bound for the counting-formula cross-check
};

Int action_conductor(const ActionData& act);
WeightTable weight_table(const GradedAlgebra& alg, const ActionData& act, const WeightOptions& opt = {});

// span of [g_lambda, g_mu]
struct BracketSpan {
    bool is_zero = true;
    int dim = 0;
};
BracketSpan bracket_pairs(const Character& l, const Character& m, const WeightTable& t, const GradedAlgebra& alg);
CycSparse bracket_vectors(const CycSparse& u, const CycSparse& v, const GradedAlgebra& alg, const CycField* F);
int span_rank(const std::vector<CycSparse>& vs, const CycField* F);

}  // namespace twr
