#ifndef QWARING_SYMPOLY_HPP
#define QWARING_SYMPOLY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "qwaring/partitions.hpp"
#include "qwaring/rational.hpp"

namespace qw {

// Conversion/zero-test hooks so the expansion templates also serve the
// floating verifier's complex scalars (specialized there).
template <typename F>
struct ScalarTraits {
    static F from_int(const Int& v) { return F(Rational(v)); }
    static bool is_zero(const F& v) {
        using qw::is_zero;
        return is_zero(v);
    }
};

// Exponent vector of a monomial in n variables.
struct MultiIndex {
    std::vector<int> exponents;

    int n() const { return static_cast<int>(exponents.size()); }
    int degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

    std::string str() const;
};

// Graded reverse lexicographic order: compare total degree first, then the
// exponent difference from the last variable backwards. a < b means a comes
// before b, smallest monomial first.
struct GrevlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        for (int i = a.n() - 1; i >= 0; --i) {
            if (a.exponents[i] != b.exponents[i]) return a.exponents[i] > b.exponents[i];
        }
        return false;
    }
};

// Sparse multivariate polynomial: exponent vector -> coefficient, zero
// coefficients never stored. Deterministic grevlex iteration order.
template <typename F>
class SparsePoly {
   public:
    using Terms = std::map<MultiIndex, F, GrevlexLess>;

    explicit SparsePoly(int n = 0) : n_(n) {}

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add(const MultiIndex& idx, const F& c) {
        if (is_zero_coeff(c)) return;
        auto [it, inserted] = terms_.emplace(idx, c);
        if (!inserted) {
            it->second += c;
            if (is_zero_coeff(it->second)) terms_.erase(it);
        }
    }

    F coefficient(const MultiIndex& idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? F(0) : it->second;
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        for (const auto& [idx, c] : o.terms_) add(idx, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        for (const auto& [idx, c] : o.terms_) add(idx, -c);
        return *this;
    }
    SparsePoly& operator*=(const F& c) {
        if (is_zero_coeff(c)) { terms_.clear(); return *this; }
        for (auto& [idx, v] : terms_) v *= c;
        return *this;
    }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r(a.n_);
        for (const auto& [ia, ca] : a.terms_)
            for (const auto& [ib, cb] : b.terms_) {
                MultiIndex idx = ia;
                for (int v = 0; v < r.n_; ++v) idx.exponents[v] += ib.exponents[v];
                r.add(idx, ca * cb);
            }
        return r;
    }

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

   private:
    static bool is_zero_coeff(const F& c) { return ScalarTraits<F>::is_zero(c); }

    int n_;
    Terms terms_;
};

// Orbit sum of x^m under S_n, each distinct monomial once with coefficient 1.
// Zero polynomial when m has more parts than variables.
SparsePoly<Rational> monomial_symmetric(const Partition& m, int n);

// The exact expansion of (x_1^2+...+x_n^2)^s via the partition formula.
SparsePoly<Rational> expand_q_power(int n, int s);

// Expansion of (sum_i coeffs[i] x_i)^d by multinomial expansion over the
// support of coeffs.
template <typename F>
SparsePoly<F> expand_linear_power(const std::vector<F>& coeffs, int d) {
    const int n = static_cast<int>(coeffs.size());
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
        if (!ScalarTraits<F>::is_zero(coeffs[i])) support.push_back(i);
    SparsePoly<F> out(n);
    const int k = static_cast<int>(support.size());
    if (k == 0) {
        if (d == 0) out.add(MultiIndex{std::vector<int>(static_cast<std::size_t>(n), 0)}, F(1));
        return out;
    }
    // Enumerate compositions (e_1,...,e_k) of d over the support.
    std::vector<int> comp(static_cast<std::size_t>(k), 0);
    comp[0] = d;
    while (true) {
        F c = ScalarTraits<F>::from_int(multinomial(d, comp));
        MultiIndex idx{std::vector<int>(static_cast<std::size_t>(n), 0)};
        for (int i = 0; i < k; ++i) {
            const F& a = coeffs[static_cast<std::size_t>(support[static_cast<std::size_t>(i)])];
            for (int e = 0; e < comp[static_cast<std::size_t>(i)]; ++e) c *= a;
            idx.exponents[static_cast<std::size_t>(support[static_cast<std::size_t>(i)])] =
                comp[static_cast<std::size_t>(i)];
        }
        out.add(idx, c);
        // Next composition in colex-style order.
        int i = 0;
        while (i < k - 1 && comp[static_cast<std::size_t>(i)] == 0) ++i;
        if (i == k - 1) break;
        int head = comp[static_cast<std::size_t>(i)];
        comp[static_cast<std::size_t>(i)] = 0;
        comp[0] = head - 1;
        ++comp[static_cast<std::size_t>(i) + 1];
    }
    return out;
}

// Sum over the 2^{k-1} sign patterns (first sign +) of
// (s_1 a_1 x_{support[0]} + ... + s_k a_k x_{support[k-1]})^{2s}
// in n ambient variables. Only even exponents survive.
template <typename F>
SparsePoly<F> expand_signed_power(const std::vector<F>& point, const std::vector<int>& support,
                                  int n, int s) {
    const int k = static_cast<int>(point.size());
    SparsePoly<F> out(n);
    for (unsigned pattern = 0; pattern < (1u << (k - 1)); ++pattern) {
        std::vector<F> coeffs(static_cast<std::size_t>(n), F(0));
        for (int i = 0; i < k; ++i) {
            bool neg = i > 0 && ((pattern >> (i - 1)) & 1u);
            const F& a = point[static_cast<std::size_t>(i)];
            coeffs[static_cast<std::size_t>(support[static_cast<std::size_t>(i)])] = neg ? F(-a) : a;
        }
        out += expand_linear_power(coeffs, 2 * s);
    }
    return out;
}

// h_a(m): sum over distinct permutations of the point of prod a_i^{2 m_i},
// with m padded by zeros to the point's length. Computed as the full S_k sum
// divided by the stabilizer size of the point.
template <typename F>
F h_value(const std::vector<F>& point, const Partition& m) {
    const int k = static_cast<int>(point.size());
    if (m.count() > k) throw InvalidArgument("h_value: partition longer than point");
    std::vector<int> padded(m.parts);
    padded.resize(static_cast<std::size_t>(k), 0);
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    F total(0);
    do {
        F prod(1);
        for (int i = 0; i < k; ++i) {
            const F& a = point[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            F sq = a * a;
            for (int e = 0; e < padded[static_cast<std::size_t>(i)]; ++e) prod *= sq;
        }
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / ScalarTraits<F>::from_int(stabilizer_size(point));
}

}  // namespace qw

#endif
