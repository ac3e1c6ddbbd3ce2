#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qwaring/ansatz.hpp"
#include "qwaring/bounds.hpp"
#include "qwaring/certify.hpp"
#include "qwaring/checks.hpp"

namespace {

// Relative output paths resolve against QWARING_OUT_DIR when it is set.
std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    const char* base = std::getenv("QWARING_OUT_DIR");
    if (base && *base && p.is_relative()) return std::filesystem::path(base) / p;
    return p;
}

void emit(const std::string& output, const std::string& bytes) {
    if (output.empty()) {
        std::cout << bytes;
        return;
    }
    auto path = resolve_output(output);
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    f << bytes;
}

void print_bounds(const qw::BoundsReport& b, const std::string& format, std::ostream& out) {
    if (format == "csv") {
        out << "n,s,lower,upper11,upper42,generic_exact_num,generic_exact_den,subgeneric\n"
            << b.n << "," << b.s << "," << b.lower_catalecticant << "," << b.upper_thm11 << ","
            << b.upper_thm42 << "," << qw::numerator(b.generic_rank_exact) << ","
            << qw::denominator(b.generic_rank_exact) << "," << (b.subgeneric ? 1 : 0) << "\n";
        return;
    }
    out << "n = " << b.n << ", s = " << b.s << "\n"
        << "  lower bound (catalecticant)  " << b.lower_catalecticant << "\n"
        << "  upper bound (theorem 1.1)    " << b.upper_thm11 << "\n"
        << "  upper bound (theorem 4.2)    " << b.upper_thm42 << "\n"
        << "  generic rank (exact)         " << qw::to_string(b.generic_rank_exact)
        << "  (ceil " << b.generic_rank_ceil << ")\n";
    if (b.achieved_size) out << "  achieved size                " << *b.achieved_size << "\n";
    out << "  subgeneric                   " << (b.subgeneric ? "yes" : "no") << "\n";
}

int size_of(const std::variant<qw::Decomposition, qw::GaussianDecomposition>& d) {
    return std::visit([](const auto& inner) { return inner.size(); }, d);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Waring decompositions of powers of the quadric q_n = x_1^2+...+x_n^2"};
    app.require_subcommand(1);

    int n = 0, s = 0;
    long seed = 0;
    std::string output, input, name, format = "text";
    double tolerance = 0;
    std::vector<int> n_range;

    auto* cmd_generate = app.add_subcommand("generate", "solve the ansatz and emit a certificate");
    cmd_generate->add_option("--n", n, "number of variables")->required();
    cmd_generate->add_option("--s", s, "power of the quadric")->required();
    cmd_generate->add_option("--seed", seed, "seed for point redraws");
    cmd_generate->add_option("--output,-o", output, "certificate path (default stdout)");

    auto* cmd_verify = app.add_subcommand("verify", "re-expand a certificate and compare");
    cmd_verify->add_option("--input,-i", input, "certificate path")->required();
    cmd_verify->add_option("--tolerance", tolerance,
                           "verify in floating point at this tolerance instead of exactly");

    auto* cmd_bounds = app.add_subcommand("bounds", "rank bounds and subgenericity for one (n, s)");
    cmd_bounds->add_option("--n", n, "number of variables")->required();
    cmd_bounds->add_option("--s", s, "power of the quadric")->required();
    cmd_bounds->add_option("--format", format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));

    auto* cmd_table = app.add_subcommand("table", "bounds table over a range of n");
    cmd_table->add_option("--s", s, "power of the quadric")->required();
    cmd_table->add_option("--n", n_range, "n values (repeatable)")->required();
    cmd_table->add_option("--format", format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));
    cmd_table->add_option("--output,-o", output, "write the table to a file");

    auto* cmd_closed = app.add_subcommand("closed-form", "print the symbolic weights for one s");
    cmd_closed->add_option("--s", s, "power of the quadric, 1..5")->required();

    auto* cmd_builtin = app.add_subcommand("builtin", "materialize one of the named formulas");
    cmd_builtin->add_option("--name", name, "one of: s2 s3 s4 s4-gaussian s5 q8s2")->required();
    cmd_builtin->add_option("--n", n, "number of variables")->required();
    cmd_builtin->add_option("--output,-o", output, "certificate path (default stdout)");

    auto* cmd_check = app.add_subcommand("check-paper", "run the full reproduction scorecard");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_generate->parsed()) {
            qw::Decomposition d = qw::generate(n, s, seed);
            emit(output, qw::serialize(d));
            qw::BoundsReport b = qw::bounds_report(n, s, d.size());
            std::cerr << "size " << d.size() << "\n";
            print_bounds(b, "text", std::cerr);
            return 0;
        }
        if (cmd_verify->parsed()) {
            std::ifstream f(input);
            if (!f) throw std::runtime_error("cannot read " + input);
            std::string bytes((std::istreambuf_iterator<char>(f)),
                              std::istreambuf_iterator<char>());
            auto d = qw::deserialize(bytes);
            qw::VerificationOutcome out;
            if (cmd_verify->count("--tolerance") > 0) {
                std::vector<std::pair<qw::Complex, std::vector<qw::Complex>>> terms;
                int dn = 0, ds = 0;
                std::visit(
                    [&](const auto& inner) {
                        dn = inner.n;
                        ds = inner.s;
                        for (const auto& [w, coeffs] : inner.terms) {
                            std::vector<qw::Complex> v;
                            for (const auto& c : coeffs) v.push_back(qw::to_complex(c));
                            terms.emplace_back(qw::to_complex(w), std::move(v));
                        }
                    },
                    d);
                out = qw::verify_numeric(terms, dn, ds, tolerance);
            } else {
                out = qw::verify_exact(d);
            }
            if (out.ok) {
                std::cout << "ok (" << out.terms_expanded << " terms expanded)\n";
                return 0;
            }
            std::cout << "MISMATCH";
            if (out.first_mismatch)
                std::cout << " at " << out.first_mismatch->monomial.str() << ": expected "
                          << out.first_mismatch->expected << ", got " << out.first_mismatch->got;
            std::cout << "\n";
            return 1;
        }
        if (cmd_bounds->parsed()) {
            print_bounds(qw::bounds_report(n, s), format, std::cout);
            return 0;
        }
        if (cmd_table->parsed()) {
            std::ostringstream buf;
            if (format == "csv")
                buf << "n,s,lower,upper11,upper42,generic_exact_num,generic_exact_den,subgeneric\n";
            for (int nv : n_range) {
                qw::BoundsReport b = qw::bounds_report(nv, s);
                if (format == "csv")
                    buf << b.n << "," << b.s << "," << b.lower_catalecticant << ","
                        << b.upper_thm11 << "," << b.upper_thm42 << ","
                        << qw::numerator(b.generic_rank_exact) << ","
                        << qw::denominator(b.generic_rank_exact) << ","
                        << (b.subgeneric ? 1 : 0) << "\n";
                else
                    buf << "n=" << b.n << "  lower=" << b.lower_catalecticant
                        << "  upper11=" << b.upper_thm11 << "  upper42=" << b.upper_thm42
                        << "  generic=" << qw::to_string(b.generic_rank_exact)
                        << "  subgeneric=" << (b.subgeneric ? "yes" : "no") << "\n";
            }
            emit(output, buf.str());
            return 0;
        }
        if (cmd_closed->parsed()) {
            qw::SymbolicDecomposition sym = qw::closed_form(s);
            std::cout << "q_n^" << s << " weights (valid for n >= " << sym.n_min << "):\n";
            for (const auto& term : sym.terms) {
                std::cout << "  k=" << term.k << "  point (";
                for (std::size_t i = 0; i < term.point.size(); ++i)
                    std::cout << (i ? "," : "") << qw::to_string(term.point[i]);
                std::cout << ")  weight " << term.weight.str() << "\n";
            }
            return 0;
        }
        if (cmd_builtin->parsed()) {
            auto d = qw::builtin(name, n);
            emit(output, qw::serialize(d));
            std::cerr << "size " << size_of(d) << "\n";
            return 0;
        }
        if (cmd_check->parsed()) {
            bool all_ok = true;
            for (const qw::CriterionResult& r : qw::run_all_checks()) {
                std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name << ": "
                          << r.detail << "\n";
                all_ok = all_ok && r.pass;
            }
            return all_ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
