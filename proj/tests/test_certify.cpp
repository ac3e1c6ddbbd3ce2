#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qwaring/certify.hpp"

using namespace qw;

TEST_CASE("exact verification accepts builtins and rejects perturbations") {
    Decomposition d = std::get<Decomposition>(builtin("s3", 4));
    CHECK(verify_exact(d).ok);
    d.terms[0].first += 1;
    VerificationOutcome out = verify_exact(d);
    CHECK(!out.ok);
    REQUIRE(out.first_mismatch.has_value());
    CHECK(out.first_mismatch->monomial.degree() == 6);
    CHECK(out.first_mismatch->expected != out.first_mismatch->got);
}

TEST_CASE("verification agrees with a fully naive power oracle") {
    // q_2^1 = x^2 + y^2 with unit weights, written out by hand.
    Decomposition d;
    d.n = 2;
    d.s = 1;
    d.terms = {{1, {1, 0}}, {1, {0, 1}}};
    CHECK(verify_exact(d).ok);
    d.terms.pop_back();
    CHECK(!verify_exact(d).ok);
}

TEST_CASE("serialization round trip is byte identical") {
    for (const char* name : {"s3", "q8s2"}) {
        auto d = builtin(name, name == std::string("q8s2") ? 8 : 5);
        std::string bytes = serialize(d);
        auto back = deserialize(bytes);
        CHECK(serialize(back) == bytes);
        CHECK(verify_exact(back).ok);
    }
    auto g = builtin("s4-gaussian", 4);
    std::string bytes = serialize(g);
    auto back = deserialize(bytes);
    CHECK(serialize(back) == bytes);
    CHECK(verify_exact(back).ok);
}

TEST_CASE("certificate weights are stored over a global scale") {
    std::string bytes = serialize(builtin("s3", 4));
    CHECK(bytes.find("\"scale\": \"1/60\"") != std::string::npos);
    CHECK(bytes.find("\"provenance\": \"builtin:s3\"") != std::string::npos);
}

TEST_CASE("deserialization rejects malformed certificates") {
    CHECK_THROWS_AS(deserialize("not json"), ParseError);
    CHECK_THROWS_AS(deserialize("{}"), ParseError);
    CHECK_THROWS_AS(
        deserialize(R"({"version": 2, "field": "rational", "n": 1, "s": 1, "scale": "1",
                        "terms": []})"),
        VersionUnsupported);
    CHECK_THROWS_AS(
        deserialize(R"({"version": 1, "field": "rational", "n": 1, "s": 1, "scale": "1",
                        "terms": [{"weight": "1/0", "coeffs": ["1"]}]})"),
        ParseError);
    CHECK_THROWS_AS(
        deserialize(R"({"version": 1, "field": "unknown", "n": 1, "s": 1, "scale": "1",
                        "terms": []})"),
        ParseError);
    CHECK_THROWS_AS(
        deserialize(R"({"version": 1, "field": "rational", "n": 2, "s": 1, "scale": "1",
                        "terms": [{"weight": "1", "coeffs": ["1"]}]})"),
        ParseError);
}

TEST_CASE("hand-written certificate for q_2^1 verifies") {
    std::string cert = R"({
      "field": "rational",
      "n": 2,
      "s": 1,
      "scale": "1",
      "terms": [
        {"coeffs": ["1", "0"], "weight": "1"},
        {"coeffs": ["0", "1"], "weight": "1"}
      ],
      "version": 1
    })";
    CHECK(verify_exact(deserialize(cert)).ok);
}

TEST_CASE("numeric verification of an exact builtin cast to floats") {
    Decomposition d = std::get<Decomposition>(builtin("s4", 5));
    std::vector<std::pair<Complex, std::vector<Complex>>> terms;
    for (const auto& [w, coeffs] : d.terms) {
        std::vector<Complex> v;
        for (const Rational& c : coeffs) v.push_back(to_complex(c));
        terms.emplace_back(to_complex(w), std::move(v));
    }
    CHECK(verify_numeric(terms, 5, 4, 1e-30).ok);
    terms[0].first += Complex(Real("1e-20"));
    CHECK(!verify_numeric(terms, 5, 4, 1e-30).ok);
    CHECK_THROWS_AS(verify_numeric(terms, 5, 4, 0.0), InvalidTolerance);
    CHECK_THROWS_AS(verify_numeric(terms, 5, 4, -1.0), InvalidTolerance);
}

TEST_CASE("round trip preserves the verification outcome") {
    Decomposition d = generate(5, 2, 3);
    auto back = deserialize(serialize(d));
    CHECK(verify_exact(back).ok);
    CHECK(std::get<Decomposition>(back).size() == d.size());
    CHECK(std::get<Decomposition>(back).seed == 3);
}
