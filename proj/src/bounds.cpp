#include "qwaring/bounds.hpp"

#include <cmath>

#include "qwaring/errors.hpp"
#include "qwaring/matrix.hpp"
#include "qwaring/partitions.hpp"
#include "qwaring/sympoly.hpp"

namespace qw {

Int lower_bound(int n, int s) {
    if (n < 1 || s < 1) throw InvalidArgument("lower_bound: n, s >= 1 required");
    return binomial(Int(s + n - 1), s);
}

namespace {

std::vector<std::vector<int>> degree_multi_indices(int n, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> comp(static_cast<std::size_t>(n), 0);
    comp[0] = s;
    while (true) {
        out.push_back(comp);
        int i = 0;
        while (i < n - 1 && comp[static_cast<std::size_t>(i)] == 0) ++i;
        if (i == n - 1) break;
        int head = comp[static_cast<std::size_t>(i)];
        comp[static_cast<std::size_t>(i)] = 0;
        comp[0] = head - 1;
        ++comp[static_cast<std::size_t>(i) + 1];
    }
    return out;
}

}  // namespace

int catalecticant_rank(int n, int s, Int size_cap) {
    Int dim = lower_bound(n, s);
    if (dim > size_cap)
        throw SizeCapExceeded("catalecticant dimension " + dim.str() + " exceeds cap " +
                              size_cap.str());
    const auto idx = degree_multi_indices(n, s);
    const int d = static_cast<int>(idx.size());
    Matrix<Rational> cat(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            std::vector<int> half(static_cast<std::size_t>(n));
            bool even = true;
            for (int v = 0; v < n; ++v) {
                int total = idx[static_cast<std::size_t>(r)][static_cast<std::size_t>(v)] +
                            idx[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)];
                if (total % 2) { even = false; break; }
                half[static_cast<std::size_t>(v)] = total / 2;
            }
            if (!even) continue;
            Int entry = multinomial(s, half);
            for (int v = 0; v < n; ++v) {
                int a = idx[static_cast<std::size_t>(r)][static_cast<std::size_t>(v)];
                int b = idx[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)];
                entry *= factorial(a + b) / factorial(b);
            }
            cat.at(r, c) = Rational(entry);
        }
    const std::uint64_t prime = 2305843009213693951ull;  // 2^61 - 1
    int rank = matrix_rank_mod_p(cat, prime);
    if (rank == d) return rank;  // full rank mod p certifies full rank over Q
    return matrix_rank(cat);
}

Int upper_bound_thm11(int n, int s) {
    if (n < 1 || s < 1) throw InvalidArgument("upper_bound_thm11: n, s >= 1 required");
    Int total = (Int(1) << (s - 1)) * binomial(Int(n), s);
    if (s >= 2) total += (Int(1) << (s - 2)) * binomial(Int(n), s - 1);
    for (int k = 1; k <= s - 2; ++k)
        total += (Int(1) << (k - 1)) * factorial(k) * p_k(s, k) * binomial(Int(n), k);
    return total;
}

Int upper_bound_thm42(int n, int s) {
    if (n < 1 || s < 1) throw InvalidArgument("upper_bound_thm42: n, s >= 1 required");
    Int total = 0;
    for (int k = 1; k <= s; ++k)
        total += (Int(1) << k) * factorial(k) * p_k(s, k) * binomial(Int(n), k);
    return total;
}

std::pair<Rational, Int> generic_rank(int n, int s) {
    if (n < 1 || s < 1) throw InvalidArgument("generic_rank: n, s >= 1 required");
    Rational exact(binomial(Int(2 * s + n - 1), 2 * s), Int(n));
    Int num = numerator(exact), den = denominator(exact);
    Int ceil = (num + den - 1) / den;
    return {exact, ceil};
}

BoundsReport bounds_report(int n, int s, std::optional<int> achieved_size) {
    BoundsReport r;
    r.n = n;
    r.s = s;
    r.lower_catalecticant = lower_bound(n, s);
    r.upper_thm11 = upper_bound_thm11(n, s);
    r.upper_thm42 = upper_bound_thm42(n, s);
    auto [exact, ceil] = generic_rank(n, s);
    r.generic_rank_exact = exact;
    r.generic_rank_ceil = ceil;
    r.achieved_size = achieved_size;
    Int best = achieved_size ? Int(*achieved_size) : r.upper_thm11;
    r.subgeneric = Rational(best) < r.generic_rank_exact;
    return r;
}

Int prop_size(int s, int n) {
    Int nn(n);
    switch (s) {
        case 2:
            return 2 * binomial(nn, 2) + n;
        case 3:
            return 4 * binomial(nn, 3) + 2 * binomial(nn, 2) + n;
        case 4:
            return 8 * binomial(nn, 4) + 4 * binomial(nn, 3) + 6 * binomial(nn, 2) + n;
        case 5:
            return 16 * binomial(nn, 5) + 8 * binomial(nn, 4) + 16 * binomial(nn, 3) +
                   6 * binomial(nn, 2) + n;
        default:
            throw DomainError("prop_size: only s in 2..5 has a closed-formula size");
    }
}

Int size_formula_value(SizeFormula which, int s, int n) {
    switch (which) {
        case SizeFormula::Thm11:
            return upper_bound_thm11(n, s);
        case SizeFormula::Thm42:
            return upper_bound_thm42(n, s);
        case SizeFormula::PropSize:
            return prop_size(s, n);
    }
    throw InvalidArgument("size_formula_value: bad selector");
}

int subgeneric_threshold(int s, SizeFormula which) {
    if (s < 2) throw InvalidArgument("subgeneric_threshold: s >= 2 required");
    const Int step_rhs = Int(2) * s * s - 2 * s + 1;
    const int scan_cap = 10000;
    int last_fail = s - 1;
    for (int n = s; n <= scan_cap; ++n) {
        Rational size(size_formula_value(which, s, n));
        if (!(size < generic_rank(n, s).first)) {
            last_fail = n;
            continue;
        }
        // The inequality holds here; once n(s-1) > 2s^2 - 2s + 1 the
        // monotonicity step carries it to every larger n, so the scan can stop.
        if (Int(n) * (s - 1) > step_rhs) return last_fail;
    }
    throw DomainError("subgeneric_threshold: no threshold found below the scan cap");
}

Thm14Report check_thm14(int s) {
    if (s < 2) throw InvalidArgument("check_thm14: s >= 2 required");
    Thm14Report rep;
    rep.s = s;
    const int n = (2 * s - 1) * (2 * s - 1) + 1;
    rep.n_checked = n;
    // Best size bound available at this n: the general partition-sum bound for
    // s >= 6, the closed-formula decomposition sizes for 3 <= s <= 5, and the
    // minimal three-orbit decomposition (1 + n + C(n,2) forms) for s = 2.
    Int size;
    if (s >= 6)
        size = upper_bound_thm42(n, s);
    else if (s >= 3)
        size = prop_size(s, n);
    else
        size = 1 + Int(n) + binomial(Int(n), 2);
    rep.size_used = size;
    rep.inequality_ok = Rational(size) < generic_rank(n, s).first;
    rep.monotonicity_ok = Int(n) * (s - 1) > Int(2) * s * s - 2 * s + 1;
    return rep;
}

std::vector<LogLimitRow> log_limit_table(int s, const std::vector<int>& n_list) {
    std::vector<LogLimitRow> rows;
    for (int n : n_list) {
        if (n < 2) throw InvalidArgument("log_limit_table: n >= 2 required");
        LogLimitRow row;
        row.n = n;
        double logn = std::log(static_cast<double>(n));
        row.log_lower = std::log(lower_bound(n, s).convert_to<double>()) / logn;
        row.log_upper11 = std::log(upper_bound_thm11(n, s).convert_to<double>()) / logn;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qw
