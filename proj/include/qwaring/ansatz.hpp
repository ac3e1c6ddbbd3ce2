#ifndef QWARING_ANSATZ_HPP
#define QWARING_ANSATZ_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qwaring/matrix.hpp"
#include "qwaring/npoly.hpp"
#include "qwaring/partitions.hpp"
#include "qwaring/sympoly.hpp"

namespace qw {

// Point sets A_k for the decomposition ansatz. blocks[k-1] holds the points
// of arity k, normally p_k(s) of them.
struct AnsatzSpec {
    int s = 0;
    std::vector<std::vector<std::vector<Rational>>> blocks;

    const std::vector<std::vector<Rational>>& points(int k) const {
        return blocks[static_cast<std::size_t>(k - 1)];
    }
};

// The linear system on ansatz weights. Rows indexed by (k, m in P_k(s)),
// columns by (arity, point ordinal), both ordered k = s down to 1;
// block-lower-triangular because a form in lambda variables cannot produce
// a monomial class spread over more than lambda variables.
template <typename F>
struct ConditionSystemT {
    Matrix<F> matrix;
    std::vector<F> rhs;
    std::vector<std::pair<int, Partition>> row_index;
    std::vector<std::pair<int, int>> col_index;
    std::vector<int> block_sizes;   // per arity block, k = high to low
    std::vector<int> block_labels;  // the arity k of each block
};

using ConditionSystem = ConditionSystemT<Rational>;
using SymbolicConditionSystem = ConditionSystemT<NPoly>;

// A finished decomposition: q_n^s = sum of weight * (coeffs . x)^{2s}.
template <typename F>
struct DecompositionT {
    int n = 0;
    int s = 0;
    std::string provenance;
    long seed = 0;
    std::vector<std::pair<F, std::vector<F>>> terms;

    int size() const { return static_cast<int>(terms.size()); }
};

using Decomposition = DecompositionT<Rational>;
using GaussianDecomposition = DecompositionT<Gaussian>;

// Weights as polynomials in n, one per ansatz point; valid for n >= n_min.
struct SymbolicTerm {
    int k = 0;
    std::vector<Rational> point;
    NPoly weight;
};

struct SymbolicDecomposition {
    int s = 0;
    int n_min = 0;
    std::vector<SymbolicTerm> terms;
};

ConditionSystem assemble_system(const AnsatzSpec& spec, int n);
SymbolicConditionSystem assemble_system_symbolic(const AnsatzSpec& spec);

// Deterministic candidates a_{k,j} = (j,1,...,1); falls back to a seeded
// redraw when a diagonal block is singular. Budget exhaustion means a bug,
// since generic points always work.
AnsatzSpec select_points(int s, long seed, int retry_budget = 64);

// Expands weighted (k, point) families into explicit forms: all supports,
// all distinct coordinate arrangements, all 2^{k-1} sign patterns with
// first sign +. Zero weights are dropped; forms equal up to a 2s-th root of
// unity in the field are merged with weights added.
template <typename F>
DecompositionT<F> materialize(int n, int s,
                              const std::vector<std::tuple<F, int, std::vector<F>>>& families);

Decomposition generate(int n, int s, long seed);
SymbolicDecomposition generate_symbolic(int s, const AnsatzSpec& spec);

// Specializes a symbolic decomposition at an integer n and materializes it.
Decomposition materialize_symbolic(const SymbolicDecomposition& sym, int n,
                                   const std::string& provenance);

// Known names: s2 (alias s2-real), s3, s4 (alias s4-real), s4-gaussian, s5,
// q8s2. q8s2 requires n = 8.
std::variant<Decomposition, GaussianDecomposition> builtin(const std::string& name, int n);

std::vector<std::string> builtin_names();

// The frozen closed-formula weight lists (order: k = s down to 1, points in
// ansatz order), shared by the builtins and the symbolic generator's tests.
SymbolicDecomposition closed_form(int s);

}  // namespace qw

#endif
