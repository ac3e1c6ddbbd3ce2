#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qwaring/sympoly.hpp"

using namespace qw;

namespace {

std::mt19937_64 rng(424242);

// Independent expansion oracle: multiply (x_1^2+...+x_n^2) together s times.
SparsePoly<Rational> q_power_by_multiplication(int n, int s) {
    SparsePoly<Rational> q(n);
    for (int i = 0; i < n; ++i) {
        MultiIndex idx{std::vector<int>(static_cast<std::size_t>(n), 0)};
        idx.exponents[static_cast<std::size_t>(i)] = 2;
        q.add(idx, 1);
    }
    SparsePoly<Rational> acc = q;
    for (int i = 1; i < s; ++i) acc = acc * q;
    return acc;
}

}  // namespace

TEST_CASE("monomial symmetric polynomial term counts") {
    CHECK(monomial_symmetric(Partition{{2, 1, 1}}, 4).term_count() == 12);
    CHECK(monomial_symmetric(Partition{{3}}, 6).term_count() == 6);
    CHECK(monomial_symmetric(Partition{{2, 2, 1, 1}}, 5).term_count() == 30);
    CHECK(monomial_symmetric(Partition{{1, 1, 1}}, 2).is_zero());
    SparsePoly<Rational> m211 = monomial_symmetric(Partition{{2, 1, 1}}, 4);
    for (const auto& [idx, c] : m211.terms()) CHECK(c == 1);
}

TEST_CASE("q expansion basics") {
    SparsePoly<Rational> q22 = expand_q_power(2, 2);
    MultiIndex x4{{4, 0}}, mixed{{2, 2}}, y4{{0, 4}};
    CHECK(q22.term_count() == 3);
    CHECK(q22.coefficient(x4) == 1);
    CHECK(q22.coefficient(mixed) == 2);
    CHECK(q22.coefficient(y4) == 1);
    SparsePoly<Rational> q32 = expand_q_power(3, 2);
    for (const auto& [idx, c] : q32.terms()) {
        bool pure = *std::max_element(idx.exponents.begin(), idx.exponents.end()) == 4;
        CHECK(c == (pure ? 1 : 2));
    }
    for (int n = 1; n <= 5; ++n)
        for (int s = 1; s <= 4; ++s) {
            SparsePoly<Rational> q = expand_q_power(n, s);
            CHECK(Int(q.term_count()) == binomial(Int(s + n - 1), n - 1));
            MultiIndex lead{std::vector<int>(static_cast<std::size_t>(n), 0)};
            lead.exponents[0] = 2 * s;
            CHECK(q.coefficient(lead) == 1);
        }
}

TEST_CASE("q expansion agrees with the repeated-multiplication oracle") {
    for (int n = 1; n <= 4; ++n)
        for (int s = 1; s <= 3; ++s) CHECK(expand_q_power(n, s) == q_power_by_multiplication(n, s));
    CHECK(expand_q_power(5, 4) == q_power_by_multiplication(5, 4));
}

TEST_CASE("q expansion is symmetric under variable transpositions") {
    SparsePoly<Rational> q = expand_q_power(5, 3);
    std::uniform_int_distribution<int> pick(0, 4);
    for (int trial = 0; trial < 10; ++trial) {
        int a = pick(rng), b = pick(rng);
        SparsePoly<Rational> swapped(5);
        for (const auto& [idx, c] : q.terms()) {
            MultiIndex t = idx;
            std::swap(t.exponents[static_cast<std::size_t>(a)],
                      t.exponents[static_cast<std::size_t>(b)]);
            swapped.add(t, c);
        }
        CHECK(swapped == q);
    }
}

TEST_CASE("signed power expansion: the paper's s=2 example") {
    SparsePoly<Rational> p = expand_signed_power<Rational>({1, 1}, {0, 1}, 2, 2);
    CHECK(p.coefficient(MultiIndex{{4, 0}}) == 2);
    CHECK(p.coefficient(MultiIndex{{2, 2}}) == 12);
    CHECK(p.coefficient(MultiIndex{{0, 4}}) == 2);
    CHECK(p.term_count() == 3);
    SparsePoly<Rational> single = expand_signed_power<Rational>({1}, {2}, 3, 4);
    CHECK(single.term_count() == 1);
    CHECK(single.coefficient(MultiIndex{{0, 0, 8}}) == 1);
}

TEST_CASE("signed power expansion has only even exponents") {
    std::uniform_int_distribution<int> coord(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        int k = 1 + trial % 4;
        int s = 1 + trial % 5;
        std::vector<Rational> point;
        for (int i = 0; i < k; ++i) point.push_back(coord(rng));
        std::vector<int> support;
        for (int i = 0; i < k; ++i) support.push_back(i);
        SparsePoly<Rational> p = expand_signed_power(point, support, k, s);
        CHECK(!p.is_zero());
        for (const auto& [idx, c] : p.terms())
            for (int e : idx.exponents) CHECK(e % 2 == 0);
    }
}

TEST_CASE("h values from the paper's matrix entries") {
    CHECK(h_value<Rational>({2, 1}, Partition{{4}}) == 257);
    CHECK(h_value<Rational>({2, 1}, Partition{{5}}) == 1025);
    for (int k = 1; k <= 5; ++k) {
        // all k! arrangements coincide, so the stabilizer quotient collapses to 1
        std::vector<Rational> ones(static_cast<std::size_t>(k), 1);
        CHECK(h_value(ones, Partition{{3}}) == 1);
    }
    CHECK(h_value<Rational>({2, 1}, Partition{{1, 1}}) == 8);
    CHECK(h_value<Rational>({5}, Partition{{2}}) == 625);
    Gaussian h = h_value<Gaussian>({Gaussian(1), Gaussian::i()}, Partition{{1, 1}});
    CHECK(h == Gaussian(-2));
}

TEST_CASE("h value is invariant under permuting the point") {
    std::vector<Rational> point{3, 1, 2};
    std::vector<Rational> permuted{1, 2, 3};
    for (const Partition& m :
         {Partition{{3}}, Partition{{2, 1}}, Partition{{1, 1, 1}}, Partition{{2, 2, 1}}})
        CHECK(h_value(point, m) == h_value(permuted, m));
}

TEST_CASE("signed power matches the condition-system coefficient formula") {
    // Sum over all supports of f_{k,a}: the coefficient of each monomial in
    // class M_{2m} must equal 2^{k-1} C(n-j, k-j) multinomial(2s; 2m) h_a(m),
    // with j = number of parts of m.
    const int n = 4, k = 2, s = 3;
    std::vector<Rational> point{2, 1};
    SparsePoly<Rational> total(n);
    for (int t1 = 0; t1 < n; ++t1)
        for (int t2 = t1 + 1; t2 < n; ++t2) {
            // both distinct arrangements of the point on this support
            total += expand_signed_power(point, {t1, t2}, n, s);
            total += expand_signed_power<Rational>({1, 2}, {t1, t2}, n, s);
        }
    for (int j = 1; j <= k; ++j)
        for (const Partition& m : enumerate_partitions(s, j)) {
            std::vector<int> exps;
            for (int part : m.parts) exps.push_back(2 * part);
            exps.resize(static_cast<std::size_t>(n), 0);
            MultiIndex idx{exps};
            std::vector<int> doubled = exps;
            doubled.resize(m.parts.size());
            Rational expected = Rational(Int(1) << (k - 1)) *
                                Rational(binomial(Int(n - j), k - j)) *
                                Rational(multinomial(2 * s, doubled)) * h_value(point, m);
            CHECK(total.coefficient(idx) == expected);
        }
}
