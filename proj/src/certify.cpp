#include "qwaring/certify.hpp"

#include <json.hpp>

#include "qwaring/bounds.hpp"

namespace qw {

namespace {

template <typename F>
VerificationOutcome verify_exact_impl(const DecompositionT<F>& d) {
    VerificationOutcome out;
    SparsePoly<F> acc(d.n);
    for (const auto& [weight, coeffs] : d.terms) {
        SparsePoly<F> power = expand_linear_power(coeffs, 2 * d.s);
        power *= weight;
        acc += power;
        ++out.terms_expanded;
    }
    SparsePoly<F> diff = acc;
    const SparsePoly<Rational> target = expand_q_power(d.n, d.s);
    for (const auto& [idx, c] : target.terms()) diff.add(idx, F(-c));
    if (diff.is_zero()) {
        out.ok = true;
        return out;
    }
    const MultiIndex& at = diff.terms().begin()->first;
    out.first_mismatch = {at, to_string(F(target.coefficient(at))), to_string(acc.coefficient(at))};
    return out;
}

}  // namespace

VerificationOutcome verify_exact(const Decomposition& d) { return verify_exact_impl(d); }
VerificationOutcome verify_exact(const GaussianDecomposition& d) { return verify_exact_impl(d); }
VerificationOutcome verify_exact(const std::variant<Decomposition, GaussianDecomposition>& d) {
    return std::visit([](const auto& inner) { return verify_exact_impl(inner); }, d);
}

VerificationOutcome verify_numeric(
    const std::vector<std::pair<Complex, std::vector<Complex>>>& terms, int n, int s, double tol) {
    if (!(tol > 0)) throw InvalidTolerance();
    VerificationOutcome out;
    SparsePoly<Complex> acc(n);
    for (const auto& [weight, coeffs] : terms) {
        SparsePoly<Complex> power = expand_linear_power(coeffs, 2 * s);
        power *= weight;
        acc += power;
        ++out.terms_expanded;
    }
    SparsePoly<Complex> diff = acc;
    const SparsePoly<Rational> target = expand_q_power(n, s);
    for (const auto& [idx, c] : target.terms()) diff.add(idx, -to_complex(c));
    const Real bound(tol);
    for (const auto& [idx, c] : diff.terms()) {
        if (abs(c) < bound) continue;
        Rational expected = target.coefficient(idx);
        out.first_mismatch = {idx, to_string(expected), c.str()};
        return out;
    }
    out.ok = true;
    return out;
}

namespace {

Int denominator_lcm_step(Int acc, const Int& den) {
    return acc / boost::multiprecision::gcd(acc, den) * den;
}

Int weight_scale(const Decomposition& d) {
    Int l = 1;
    for (const auto& [w, coeffs] : d.terms) l = denominator_lcm_step(l, denominator(w));
    return l;
}

Int weight_scale(const GaussianDecomposition& d) {
    Int l = 1;
    for (const auto& [w, coeffs] : d.terms) {
        l = denominator_lcm_step(l, denominator(w.re));
        l = denominator_lcm_step(l, denominator(w.im));
    }
    return l;
}

nlohmann::json scalar_json(const Rational& v) { return to_string(v); }
nlohmann::json scalar_json(const Gaussian& v) {
    return {{"im", to_string(v.im)}, {"re", to_string(v.re)}};
}

Rational scaled_weight(const Rational& w, const Int& scale) { return w * Rational(scale); }
Gaussian scaled_weight(const Gaussian& w, const Int& scale) {
    return w * Gaussian(Rational(scale));
}

template <typename F>
std::string serialize_impl(const DecompositionT<F>& d, const char* field) {
    nlohmann::json j;
    j["version"] = 1;
    j["field"] = field;
    j["n"] = d.n;
    j["s"] = d.s;
    Int scale = weight_scale(d);
    j["scale"] = scale == 1 ? std::string("1") : "1/" + scale.str();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, coeffs] : d.terms) {
        nlohmann::json coeff_list = nlohmann::json::array();
        for (const F& c : coeffs) coeff_list.push_back(scalar_json(c));
        terms.push_back({{"coeffs", coeff_list}, {"weight", scalar_json(scaled_weight(w, scale))}});
    }
    j["terms"] = terms;
    BoundsReport b = bounds_report(d.n, d.s, d.size());
    j["meta"] = {{"bounds",
                  {{"generic_rank", to_string(b.generic_rank_exact)},
                   {"lower", b.lower_catalecticant.str()},
                   {"upper_thm11", b.upper_thm11.str()},
                   {"upper_thm42", b.upper_thm42.str()}}},
                 {"provenance", d.provenance},
                 {"seed", d.seed},
                 {"size", d.size()}};
    return j.dump(2) + "\n";
}

Rational parse_scalar(const nlohmann::json& v, Rational*) {
    if (!v.is_string()) throw ParseError("expected a rational string");
    return parse_rational(v.get<std::string>());
}

Gaussian parse_scalar(const nlohmann::json& v, Gaussian*) {
    if (!v.is_object() || !v.contains("re") || !v.contains("im"))
        throw ParseError("expected {re, im} for a gaussian scalar");
    return Gaussian(parse_rational(v.at("re").get<std::string>()),
                    parse_rational(v.at("im").get<std::string>()));
}

template <typename F>
DecompositionT<F> deserialize_impl(const nlohmann::json& j) {
    DecompositionT<F> d;
    d.n = j.at("n").get<int>();
    d.s = j.at("s").get<int>();
    if (d.n < 1 || d.s < 1) throw ParseError("certificate requires n >= 1 and s >= 1");
    Rational scale = parse_rational(j.at("scale").get<std::string>());
    for (const auto& t : j.at("terms")) {
        F weight = parse_scalar(t.at("weight"), static_cast<F*>(nullptr));
        weight *= F(scale);
        std::vector<F> coeffs;
        for (const auto& c : t.at("coeffs"))
            coeffs.push_back(parse_scalar(c, static_cast<F*>(nullptr)));
        if (static_cast<int>(coeffs.size()) != d.n)
            throw ParseError("coefficient vector length does not match n");
        d.terms.emplace_back(std::move(weight), std::move(coeffs));
    }
    if (j.contains("meta")) {
        const auto& meta = j.at("meta");
        if (meta.contains("provenance")) d.provenance = meta.at("provenance").get<std::string>();
        if (meta.contains("seed")) d.seed = meta.at("seed").get<long>();
    }
    return d;
}

}  // namespace

std::string serialize(const Decomposition& d) { return serialize_impl(d, "rational"); }
std::string serialize(const GaussianDecomposition& d) { return serialize_impl(d, "gaussian"); }
std::string serialize(const std::variant<Decomposition, GaussianDecomposition>& d) {
    return std::visit([](const auto& inner) { return serialize(inner); }, d);
}

std::variant<Decomposition, GaussianDecomposition> deserialize(const std::string& bytes) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    try {
        int version = j.at("version").get<int>();
        if (version != 1) throw VersionUnsupported(version);
        std::string field = j.at("field").get<std::string>();
        if (field == "rational") return deserialize_impl<Rational>(j);
        if (field == "gaussian") return deserialize_impl<Gaussian>(j);
        throw ParseError("unknown field tag: " + field);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

}  // namespace qw
