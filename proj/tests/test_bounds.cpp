#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qwaring/bounds.hpp"
#include "qwaring/partitions.hpp"

using namespace qw;

TEST_CASE("catalecticant lower bound") {
    CHECK(lower_bound(1, 9) == 1);
    CHECK(lower_bound(4, 2) == 10);
    for (int s = 1; s <= 6; ++s) CHECK(lower_bound(3, s) == binomial(Int(s + 2), 2));
}

TEST_CASE("catalecticant rank is full on small cases") {
    CHECK(catalecticant_rank(2, 2) == 3);
    CHECK(catalecticant_rank(3, 1) == 3);
    CHECK(catalecticant_rank(3, 3) == 10);
    CHECK(catalecticant_rank(4, 3) == 20);
    CHECK_THROWS_AS(catalecticant_rank(16, 16), SizeCapExceeded);
}

TEST_CASE("upper bounds against an independent summation") {
    for (int s = 1; s <= 6; ++s)
        for (int n = 1; n <= 20; ++n) {
            Int t42 = 0, tail = 0;
            for (int k = 1; k <= s; ++k)
                t42 += (Int(1) << k) * factorial(k) * p_k(s, k) * binomial(Int(n), k);
            CHECK(upper_bound_thm42(n, s) == t42);
            for (int k = 1; k <= s - 2; ++k)
                tail += (Int(1) << (k - 1)) * factorial(k) * p_k(s, k) * binomial(Int(n), k);
            Int t11 = (Int(1) << (s - 1)) * binomial(Int(n), s) + tail;
            if (s >= 2) t11 += (Int(1) << (s - 2)) * binomial(Int(n), s - 1);
            CHECK(upper_bound_thm11(n, s) == t11);
            if (n >= s) CHECK(upper_bound_thm11(n, s) <= upper_bound_thm42(n, s));
        }
    CHECK(upper_bound_thm11(7, 1) == 7);
    CHECK(upper_bound_thm11(10, 3) == 4 * binomial(Int(10), 3) + 2 * binomial(Int(10), 2) + 10);
}

TEST_CASE("generic rank and the s=3, n=12 comparison") {
    auto [exact, ceil] = generic_rank(12, 3);
    CHECK(exact == Rational(binomial(Int(17), 6), 12));
    CHECK(Rational(prop_size(3, 12)) < exact);
    CHECK(prop_size(3, 12) == 1024);
    CHECK(generic_rank(1, 4).second == 1);
    auto [e2, c2] = generic_rank(3, 1);
    CHECK(e2 == 2);
    CHECK(c2 == 2);
}

TEST_CASE("prop sizes match the displayed polynomials") {
    for (int n = 2; n <= 15; ++n) CHECK(prop_size(2, n) == Int(n) * n);
    CHECK(prop_size(3, 5) == 65);
    CHECK(prop_size(4, 6) == 296);
    CHECK(prop_size(5, 7) == 1309);
}

TEST_CASE("subgeneric thresholds") {
    CHECK(subgeneric_threshold(2, SizeFormula::PropSize) == 17);
    CHECK(subgeneric_threshold(3, SizeFormula::PropSize) == 11);
    CHECK(subgeneric_threshold(4, SizeFormula::PropSize) == 10);
    CHECK(subgeneric_threshold(5, SizeFormula::PropSize) == 8);
    for (int s = 3; s <= 5; ++s)
        CHECK(subgeneric_threshold(s, SizeFormula::Thm11) <= (2 * s - 1) * (2 * s - 1));
    // the s=2 bound formulas all reduce to n^2, whose threshold sits above (2s-1)^2
    CHECK(subgeneric_threshold(2, SizeFormula::Thm11) == 17);
}

TEST_CASE("theorem 1.4 check") {
    for (int s : {2, 3, 6, 10, 20}) {
        Thm14Report rep = check_thm14(s);
        CHECK(rep.n_checked == (2 * s - 1) * (2 * s - 1) + 1);
        CHECK(rep.ok());
    }
}

TEST_CASE("bounds report consistency") {
    BoundsReport r = bounds_report(12, 3);
    CHECK(r.subgeneric);
    CHECK(r.lower_catalecticant <= r.upper_thm11);
    CHECK(r.upper_thm11 <= r.upper_thm42);
    BoundsReport r2 = bounds_report(5, 3);
    CHECK(!r2.subgeneric);
}

TEST_CASE("log limit table brackets s") {
    auto rows = log_limit_table(2, {10000});
    CHECK(rows[0].log_lower < 2);
    CHECK(rows[0].log_lower > 1.5);
    CHECK(rows[0].log_upper11 == doctest::Approx(2.0));  // the s=2 upper bound is exactly n^2
    auto s1 = log_limit_table(1, {2, 10, 100});
    for (const auto& row : s1) {
        CHECK(row.log_lower == doctest::Approx(1.0));
        CHECK(row.log_upper11 == doctest::Approx(1.0));
    }
}
