#include "qwaring/checks.hpp"

#include <cmath>
#include <sstream>

#include "qwaring/ansatz.hpp"
#include "qwaring/bounds.hpp"
#include "qwaring/certify.hpp"

namespace qw {

namespace {

std::string fmt_ns(int n, int s) { return "(n=" + std::to_string(n) + ", s=" + std::to_string(s) + ")"; }

int decomposition_size(const std::variant<Decomposition, GaussianDecomposition>& d) {
    return std::visit([](const auto& inner) { return inner.size(); }, d);
}

CriterionResult check_closed_forms() {
    CriterionResult r{1, "symbolic closed formulas s=2..5", true, ""};
    for (int s = 2; s <= 5; ++s) {
        AnsatzSpec spec = select_points(s, 0);
        SymbolicDecomposition got = generate_symbolic(s, spec);
        SymbolicDecomposition want = closed_form(s);
        bool same = got.terms.size() == want.terms.size();
        for (std::size_t i = 0; same && i < got.terms.size(); ++i)
            same = got.terms[i].k == want.terms[i].k && got.terms[i].point == want.terms[i].point &&
                   got.terms[i].weight == want.terms[i].weight;
        if (!same) {
            r.pass = false;
            r.detail += "mismatch at s=" + std::to_string(s) + "; ";
        }
    }
    if (r.pass) r.detail = "solved weights equal the closed-formula weights exactly";
    return r;
}

CriterionResult check_exact_verification() {
    CriterionResult r{2, "exact verification of all builtins", true, ""};
    auto run = [&r](const std::string& name, int n) {
        VerificationOutcome out = verify_exact(builtin(name, n));
        if (!out.ok) {
            r.pass = false;
            r.detail += name + " fails at n=" + std::to_string(n);
            if (out.first_mismatch)
                r.detail += " (monomial " + out.first_mismatch->monomial.str() + ")";
            r.detail += "; ";
        }
    };
    for (int n = 3; n <= 9; ++n) run("s2", n);
    for (int n = 3; n <= 8; ++n) run("s3", n);
    for (int n = 4; n <= 7; ++n) { run("s4", n); run("s4-gaussian", n); }
    for (int n = 5; n <= 7; ++n) run("s5", n);
    run("q8s2", 8);
    if (r.pass) r.detail = "all builtin decompositions expand back to q_n^s exactly";
    return r;
}

CriterionResult check_special_sizes() {
    CriterionResult r{3, "special sizes 45 / 216 / 1029", true, ""};
    struct Case { const char* name; int n; int size; };
    for (const Case& c : {Case{"s3", 5, 45}, Case{"s4", 6, 216}, Case{"s5", 7, 1029}}) {
        int got = decomposition_size(builtin(c.name, c.n));
        if (got != c.size) {
            r.pass = false;
            r.detail += std::string(c.name) + " at n=" + std::to_string(c.n) + " has size " +
                        std::to_string(got) + ", want " + std::to_string(c.size) + "; ";
        }
    }
    if (r.pass) r.detail = "builtin sizes at the vanishing-weight values of n are exact";
    return r;
}

CriterionResult check_size_polynomials() {
    CriterionResult r{4, "generic size polynomials on n <= 12", true, ""};
    auto complain = [&r](const std::string& name, int n, const Int& got, const Int& want) {
        r.pass = false;
        r.detail += name + " at n=" + std::to_string(n) + ": size " + got.str() + " != " +
                    want.str() + "; ";
    };
    for (int s : {2, 3, 4, 5}) {
        SymbolicDecomposition sym = closed_form(s);
        std::string name = "s" + std::to_string(s);
        for (int n = s; n <= 12; ++n) {
            bool vanishing = false;
            for (const auto& term : sym.terms)
                if (term.weight.eval(n) == 0) vanishing = true;
            if (vanishing) continue;
            Int got(decomposition_size(builtin(name, n)));
            if (got != prop_size(s, n)) complain(name, n, got, prop_size(s, n));
        }
    }
    // s=3 display (2/3)n^3 - n^2 + (4/3)n, cross-checked against the text.
    NPoly s3_display({0, Rational(4, 3), Rational(-1), Rational(2, 3)});
    for (int n = 3; n <= 12; ++n) {
        if (n == 5) continue;
        if (Rational(prop_size(3, n)) != s3_display.eval(n))
            complain("s3-display", n, prop_size(3, n), numerator(s3_display.eval(n)));
    }
    // s4-gaussian display (1/3)n^4 - (4/3)n^3 + (11/3)n^2 - (5/3)n.
    NPoly g_display({0, Rational(-5, 3), Rational(11, 3), Rational(-4, 3), Rational(1, 3)});
    for (int n = 4; n <= 12; ++n) {
        if (n == 6) continue;
        Int got(decomposition_size(builtin("s4-gaussian", n)));
        if (Rational(got) != g_display.eval(n))
            complain("s4-gaussian", n, got, numerator(g_display.eval(n)));
    }
    if (r.pass) r.detail = "builtin sizes match the displayed polynomials at every generic n";
    return r;
}

CriterionResult check_naive_s4_infeasible() {
    CriterionResult r{5, "naive s=4 ansatz is infeasible", true, ""};
    AnsatzSpec spec;
    spec.s = 4;
    spec.blocks.resize(4);
    for (int k = 1; k <= 4; ++k)
        spec.blocks[static_cast<std::size_t>(k - 1)] = {
            std::vector<Rational>(static_cast<std::size_t>(k), 1)};
    for (int n : {4, 5, 6}) {
        ConditionSystem sys = assemble_system(spec, n);
        Matrix<Rational> aug(sys.matrix.rows, sys.matrix.cols + 1);
        for (int i = 0; i < sys.matrix.rows; ++i) {
            for (int j = 0; j < sys.matrix.cols; ++j) aug.at(i, j) = sys.matrix.at(i, j);
            aug.at(i, sys.matrix.cols) = sys.rhs[static_cast<std::size_t>(i)];
        }
        if (!(matrix_rank(sys.matrix) < matrix_rank(aug))) {
            r.pass = false;
            r.detail += "system unexpectedly consistent at n=" + std::to_string(n) + "; ";
        }
    }
    if (r.pass) r.detail = "augmented rank exceeds matrix rank at n = 4, 5, 6";
    return r;
}

CriterionResult check_generator_contract() {
    CriterionResult r{6, "generate verifies with bounded size", true, ""};
    for (int s = 1; s <= 5; ++s)
        for (int n = s; n <= 8; ++n)
            for (long seed : {1L, 2L, 3L}) {
                Decomposition d = generate(n, s, seed);
                if (!verify_exact(d).ok) {
                    r.pass = false;
                    r.detail += "verification fails " + fmt_ns(n, s) + " seed " +
                                std::to_string(seed) + "; ";
                    continue;
                }
                Int size(d.size());
                if (size < lower_bound(n, s) || size > upper_bound_thm42(n, s)) {
                    r.pass = false;
                    r.detail += "size out of bounds " + fmt_ns(n, s) + "; ";
                }
            }
    if (r.pass) r.detail = "all (s <= 5, s <= n <= 8, 3 seeds) verify exactly within bounds";
    return r;
}

CriterionResult check_catalecticant() {
    CriterionResult r{7, "catalecticant full rank up to dimension 500", true, ""};
    int checked = 0;
    for (int n = 1; n <= 16; ++n)
        for (int s = 1; s <= 16; ++s) {
            Int dim = lower_bound(n, s);
            if (dim > 500) continue;
            ++checked;
            int rank = catalecticant_rank(n, s);
            if (Int(rank) != dim) {
                r.pass = false;
                r.detail += "rank " + std::to_string(rank) + " != " + dim.str() + " at " +
                            fmt_ns(n, s) + "; ";
            }
        }
    if (r.pass)
        r.detail = "all " + std::to_string(checked) + " matrices on the [1,16]^2 grid are full rank";
    return r;
}

CriterionResult check_thresholds() {
    CriterionResult r{8, "subgeneric thresholds 17 / 11 / 10 / 8", true, ""};
    struct Case { int s; int want; };
    for (const Case& c : {Case{3, 11}, Case{4, 10}, Case{5, 8}}) {
        int got = subgeneric_threshold(c.s, SizeFormula::PropSize);
        if (got != c.want) {
            r.pass = false;
            r.detail += "s=" + std::to_string(c.s) + " threshold " + std::to_string(got) +
                        " != " + std::to_string(c.want) + "; ";
        }
    }
    int s2 = subgeneric_threshold(2, SizeFormula::PropSize);
    if (s2 > 17) {
        r.pass = false;
        r.detail += "s=2 threshold " + std::to_string(s2) + " exceeds 17; ";
    } else {
        r.detail += "s=2 threshold from the n^2 size formula: " + std::to_string(s2) + "; ";
    }
    if (r.pass) r.detail += "thresholds for s=3,4,5 match";
    return r;
}

CriterionResult check_thm14_range() {
    CriterionResult r{9, "theorem 1.4 desk check s=2..20", true, ""};
    for (int s = 2; s <= 20; ++s) {
        Thm14Report rep = check_thm14(s);
        if (!rep.ok()) {
            r.pass = false;
            r.detail += "fails at s=" + std::to_string(s) + " (n=" + std::to_string(rep.n_checked) +
                        "); ";
        }
    }
    if (r.pass) r.detail = "strict inequality and monotonicity step hold at n=(2s-1)^2+1";
    return r;
}

CriterionResult check_log_limit() {
    CriterionResult r{10, "log-limit gaps shrink toward s", true, ""};
    for (int s : {2, 3}) {
        auto rows = log_limit_table(s, {100, 1000, 10000});
        for (bool upper : {false, true}) {
            double prev_gap = -1;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                double gap = std::fabs((upper ? rows[i].log_upper11 : rows[i].log_lower) - s);
                if (i > 0) {
                    bool ok = prev_gap > 1e-12 ? gap < prev_gap : gap <= prev_gap + 1e-12;
                    if (!ok) {
                        r.pass = false;
                        r.detail += std::string(upper ? "upper" : "lower") + " gap not decreasing at s=" +
                                    std::to_string(s) + ", n=" + std::to_string(rows[i].n) + "; ";
                    }
                }
                prev_gap = gap;
            }
            if (!(prev_gap < 0.35)) {
                r.pass = false;
                r.detail += std::string(upper ? "upper" : "lower") + " final gap " +
                            std::to_string(prev_gap) + " >= 0.35 at s=" + std::to_string(s) + "; ";
            }
        }
    }
    if (r.pass) r.detail = "both bracketing columns tighten, final gap < 0.35 at n=10^4";
    return r;
}

std::vector<std::pair<Complex, std::vector<Complex>>> stroud_terms(int n, bool upper_signs) {
    const Complex two(2);
    const Complex sqrt2 = sqrt(two);
    const Complex pm = upper_signs ? two * sqrt2 : -two * sqrt2;  // the +-2*sqrt(2) choice
    const Complex g = pow(Complex(8 - n), Complex(1) / Complex(4));
    const Complex g2 = g * g, g3 = g2 * g, g4 = g2 * g2;
    const Complex a1 = Complex(8) * (g4 - Complex(1)) * pow(g2 + pm, 4);
    const Complex a2 = two * g2 + pm;
    const Complex a3 = -pm * g4 - Complex(8) * g2;
    const Complex a4 = two * g;
    const Complex a5 = -pm * g3 - Complex(8) * g;
    const Complex scale = Complex(1) / (Complex(3) * pow(a5, 4));
    std::vector<std::pair<Complex, std::vector<Complex>>> terms;
    terms.emplace_back(a1 * scale, std::vector<Complex>(static_cast<std::size_t>(n), Complex(1)));
    for (int k = 0; k < n; ++k) {
        std::vector<Complex> v(static_cast<std::size_t>(n), a2);
        v[static_cast<std::size_t>(k)] += a3;
        terms.emplace_back(scale, std::move(v));
    }
    for (int j1 = 0; j1 < n; ++j1)
        for (int j2 = j1 + 1; j2 < n; ++j2) {
            std::vector<Complex> v(static_cast<std::size_t>(n), a4);
            v[static_cast<std::size_t>(j1)] += a5;
            v[static_cast<std::size_t>(j2)] += a5;
            terms.emplace_back(scale, std::move(v));
        }
    return terms;
}

CriterionResult check_stroud_numeric() {
    CriterionResult r{11, "numeric check of the Stroud family and q_8^2", true, ""};
    const double tol = 1e-25;
    for (int n : {3, 5, 9})
        for (bool upper : {true, false}) {
            VerificationOutcome out = verify_numeric(stroud_terms(n, upper), n, 2, tol);
            if (!out.ok) {
                r.pass = false;
                r.detail += "Stroud family fails at n=" + std::to_string(n) +
                            (upper ? " (upper signs); " : " (lower signs); ");
            }
        }
    Decomposition q8 = std::get<Decomposition>(builtin("q8s2", 8));
    std::vector<std::pair<Complex, std::vector<Complex>>> terms;
    for (const auto& [w, coeffs] : q8.terms) {
        std::vector<Complex> v;
        for (const Rational& c : coeffs) v.push_back(to_complex(c));
        terms.emplace_back(to_complex(w), std::move(v));
    }
    if (!verify_numeric(terms, 8, 2, tol).ok) {
        r.pass = false;
        r.detail += "q_8^2 cast to floats fails; ";
    }
    if (r.pass) r.detail = "residuals below 1e-25 at n in {3,5,9} (both sign branches) and for q_8^2";
    return r;
}

CriterionResult check_partition_oracles() {
    CriterionResult r{12, "partition recurrence vs enumeration, bound checks", true, ""};
    for (int s = 1; s <= 25; ++s)
        for (int k = 1; k <= s; ++k)
            if (Int(enumerate_partitions(s, k).size()) != p_k(s, k)) {
                r.pass = false;
                r.detail += "count mismatch at s=" + std::to_string(s) + ", k=" + std::to_string(k) + "; ";
            }
    for (int s = 1; s <= 94; ++s) {
        PartitionBoundsReport rep = check_partition_bounds(s);
        if (!rep.ok()) {
            r.pass = false;
            r.detail += "bound fails at s=" + std::to_string(s) + "; ";
        }
    }
    if (r.pass) r.detail = "counts agree for s <= 25; Merca and Kane/Oruc bounds hold for s <= 94";
    return r;
}

}  // namespace

std::vector<CriterionResult> run_all_checks() {
    return {check_closed_forms(),     check_exact_verification(), check_special_sizes(),
            check_size_polynomials(), check_naive_s4_infeasible(), check_generator_contract(),
            check_catalecticant(),    check_thresholds(),          check_thm14_range(),
            check_log_limit(),        check_stroud_numeric(),      check_partition_oracles()};
}

}  // namespace qw
