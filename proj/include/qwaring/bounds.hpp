#ifndef QWARING_BOUNDS_HPP
#define QWARING_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qwaring/rational.hpp"

namespace qw {

struct BoundsReport {
    int n = 0;
    int s = 0;
    Int lower_catalecticant;
    Int upper_thm11;
    Int upper_thm42;
    Rational generic_rank_exact;  // (1/n) C(2s+n-1, 2s)
    Int generic_rank_ceil;
    std::optional<int> achieved_size;
    bool subgeneric = false;
};

// C(s+n-1, s), the middle catalecticant rank (assuming full rank).
Int lower_bound(int n, int s);

// Exact rank of the middle catalecticant matrix of q_n^s. Tries a mod-p
// certificate first (full rank mod p proves full rank over Q) and falls
// back to exact fraction-free elimination otherwise.
int catalecticant_rank(int n, int s, Int size_cap = 2000);

// 2^{s-1} C(n,s) + 2^{s-2} C(n,s-1) + sum_{k<=s-2} 2^{k-1} k! p_k(s) C(n,k).
Int upper_bound_thm11(int n, int s);
// sum_{k=1}^{s} 2^k k! p_k(s) C(n,k).
Int upper_bound_thm42(int n, int s);

// Exact quotient and its ceiling. Subgenericity compares strictly against
// the un-ceiled quotient.
std::pair<Rational, Int> generic_rank(int n, int s);

BoundsReport bounds_report(int n, int s, std::optional<int> achieved_size = std::nullopt);

enum class SizeFormula { Thm11, Thm42, PropSize };

// Size of the materialized closed-formula decomposition at generic n
// (no vanishing weights): the per-s polynomials such as
// 4C(n,3) + 2C(n,2) + n for s = 3 and n^2 for s = 2.
Int prop_size(int s, int n);

Int size_formula_value(SizeFormula which, int s, int n);

// Smallest N such that size(n) < generic rank quotient for every n > N,
// established by exact scanning plus the monotonicity propagation step.
int subgeneric_threshold(int s, SizeFormula which);

struct Thm14Report {
    int s = 0;
    int n_checked = 0;  // (2s-1)^2 + 1
    Int size_used;      // best size bound evaluated at n_checked
    bool inequality_ok = false;    // size_used < (1/n) C(2s+n-1, 2s) at n_checked
    bool monotonicity_ok = false;  // n(s-1) > 2s^2 - 2s + 1 at n_checked

    bool ok() const { return inequality_ok && monotonicity_ok; }
};

Thm14Report check_thm14(int s);

struct LogLimitRow {
    int n = 0;
    double log_lower = 0;
    double log_upper11 = 0;
};

std::vector<LogLimitRow> log_limit_table(int s, const std::vector<int>& n_list);

}  // namespace qw

#endif
