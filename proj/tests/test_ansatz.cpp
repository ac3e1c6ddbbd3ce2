#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qwaring/ansatz.hpp"
#include "qwaring/certify.hpp"

using namespace qw;

namespace {

std::vector<Rational> rat_point(std::initializer_list<int> vals) {
    std::vector<Rational> p;
    for (int v : vals) p.emplace_back(v);
    return p;
}

}  // namespace

TEST_CASE("deterministic points match the paper's lists") {
    AnsatzSpec s4 = select_points(4, 0);
    CHECK(s4.points(4) == std::vector<std::vector<Rational>>{rat_point({1, 1, 1, 1})});
    CHECK(s4.points(3) == std::vector<std::vector<Rational>>{rat_point({1, 1, 1})});
    CHECK(s4.points(2) ==
          std::vector<std::vector<Rational>>{rat_point({1, 1}), rat_point({2, 1})});
    CHECK(s4.points(1) == std::vector<std::vector<Rational>>{rat_point({1})});
    AnsatzSpec s5 = select_points(5, 0);
    CHECK(s5.points(3) ==
          std::vector<std::vector<Rational>>{rat_point({1, 1, 1}), rat_point({2, 1, 1})});
    CHECK(s5.points(2) ==
          std::vector<std::vector<Rational>>{rat_point({1, 1}), rat_point({2, 1})});
    AnsatzSpec s1 = select_points(1, 0);
    CHECK(s1.points(1) == std::vector<std::vector<Rational>>{rat_point({1})});
}

TEST_CASE("assembled s=2 system matches the paper's matrix") {
    AnsatzSpec spec = select_points(2, 0);
    const int n = 6;
    ConditionSystem sys = assemble_system(spec, n);
    REQUIRE(sys.matrix.rows == 2);
    REQUIRE(sys.matrix.cols == 2);
    CHECK(sys.matrix.at(0, 0) == 12);
    CHECK(sys.matrix.at(0, 1) == 0);
    CHECK(sys.matrix.at(1, 0) == 2 * (n - 1));
    CHECK(sys.matrix.at(1, 1) == 1);
    CHECK(sys.rhs == std::vector<Rational>{2, 1});
    SymbolicConditionSystem sym = assemble_system_symbolic(spec);
    CHECK(sym.matrix.at(1, 0) == NPoly(std::vector<Rational>{-2, 2}));
    CHECK(sym.matrix.at(0, 1) == NPoly());
}

TEST_CASE("structural block-triangularity") {
    for (int s = 2; s <= 5; ++s) {
        AnsatzSpec spec = select_points(s, 7);
        ConditionSystem sys = assemble_system(spec, s + 3);
        for (int r = 0; r < sys.matrix.rows; ++r)
            for (int c = 0; c < sys.matrix.cols; ++c)
                if (sys.col_index[static_cast<std::size_t>(c)].first <
                    sys.row_index[static_cast<std::size_t>(r)].first)
                    CHECK(sys.matrix.at(r, c) == 0);
    }
}

TEST_CASE("symbolic generator reproduces every closed formula") {
    for (int s = 2; s <= 5; ++s) {
        SymbolicDecomposition got = generate_symbolic(s, select_points(s, 0));
        SymbolicDecomposition want = closed_form(s);
        REQUIRE(got.terms.size() == want.terms.size());
        for (std::size_t i = 0; i < got.terms.size(); ++i) {
            CHECK(got.terms[i].k == want.terms[i].k);
            CHECK(got.terms[i].point == want.terms[i].point);
            CHECK(got.terms[i].weight == want.terms[i].weight);
        }
    }
}

TEST_CASE("symbolic specialization equals direct generation") {
    for (int s = 1; s <= 4; ++s) {
        AnsatzSpec spec = select_points(s, 0);
        SymbolicDecomposition sym = generate_symbolic(s, spec);
        for (int n : {s, s + 1, s + 5}) {
            Decomposition direct = generate(n, s, 0);
            Decomposition specialized = materialize_symbolic(sym, n, "generated");
            CHECK(direct.terms == specialized.terms);
        }
    }
}

TEST_CASE("generated sizes at the special values") {
    CHECK(generate(4, 2, 1).size() == 12);
    CHECK(generate(5, 3, 1).size() == 45);
    CHECK(generate(7, 5, 1).size() == 1029);
}

TEST_CASE("builtin sizes and validity ranges") {
    CHECK(std::get<Decomposition>(builtin("s3", 5)).size() == 45);
    CHECK(std::get<Decomposition>(builtin("s4", 6)).size() == 216);
    CHECK(std::get<Decomposition>(builtin("s5", 7)).size() == 1029);
    CHECK(std::get<Decomposition>(builtin("q8s2", 8)).size() == 45);
    CHECK(std::get<Decomposition>(builtin("s2-real", 5)).size() == 25);
    CHECK(std::get<GaussianDecomposition>(builtin("s4-gaussian", 5)).size() ==
          8 * 5 + 4 * 10 + 4 * 10 + 5);
    CHECK_THROWS_AS(builtin("nope", 5), UnknownBuiltin);
    CHECK_THROWS_AS(builtin("q8s2", 7), DomainError);
    CHECK_THROWS_AS(builtin("s5", 4), DomainError);
}

TEST_CASE("every builtin verifies exactly") {
    CHECK(verify_exact(builtin("s2", 4)).ok);
    CHECK(verify_exact(builtin("s3", 6)).ok);
    CHECK(verify_exact(builtin("s4", 5)).ok);
    CHECK(verify_exact(builtin("s4-gaussian", 5)).ok);
    CHECK(verify_exact(builtin("s5", 6)).ok);
    CHECK(verify_exact(builtin("q8s2", 8)).ok);
}

TEST_CASE("gaussian merging folds the four i-multiples into two forms") {
    GaussianDecomposition d = std::get<GaussianDecomposition>(builtin("s4-gaussian", 4));
    // mixed-sign forms supported on {x1, x2} with an imaginary entry
    int imaginary_pairs = 0;
    for (const auto& [w, coeffs] : d.terms) {
        bool has_imag = false;
        int support = 0;
        for (const Gaussian& c : coeffs) {
            if (!c.is_zero()) ++support;
            if (c.im != 0) has_imag = true;
        }
        if (support == 2 && has_imag) ++imaginary_pairs;
    }
    CHECK(imaginary_pairs == 2 * 6);  // 2 merged forms per 2-subset of 4 variables
}
