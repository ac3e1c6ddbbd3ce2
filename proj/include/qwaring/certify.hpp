#ifndef QWARING_CERTIFY_HPP
#define QWARING_CERTIFY_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qwaring/ansatz.hpp"
#include "qwaring/sympoly.hpp"

namespace qw {

// 100 decimal digits (~332 bits), comfortably past the 128-bit floor the
// numeric verifier promises.
using Complex = boost::multiprecision::cpp_complex_100;
using Real = boost::multiprecision::cpp_bin_float_100;

template <>
struct ScalarTraits<Complex> {
    static Complex from_int(const Int& v) { return Complex(Real(v)); }
    static bool is_zero(const Complex& v) { return v.real() == 0 && v.imag() == 0; }
};

inline Complex to_complex(const Rational& v) {
    return Complex(Real(numerator(v))) / Complex(Real(denominator(v)));
}

inline Complex to_complex(const Gaussian& v) {
    Complex r = to_complex(v.re);
    Complex i = to_complex(v.im);
    return Complex(r.real(), i.real());
}

struct VerificationOutcome {
    bool ok = false;
    struct Mismatch {
        MultiIndex monomial;
        std::string expected;
        std::string got;
    };
    std::optional<Mismatch> first_mismatch;  // grevlex-first
    int terms_expanded = 0;
};

// Expands the decomposition term by term and compares against the exact
// expansion of q_n^s. Zero tolerance.
VerificationOutcome verify_exact(const Decomposition& d);
VerificationOutcome verify_exact(const GaussianDecomposition& d);
VerificationOutcome verify_exact(const std::variant<Decomposition, GaussianDecomposition>& d);

// Same comparison in high-precision complex floating point; ok iff every
// residual coefficient has magnitude < tol.
VerificationOutcome verify_numeric(
    const std::vector<std::pair<Complex, std::vector<Complex>>>& terms, int n, int s, double tol);

// Canonical JSON certificate: UTF-8, sorted keys, exact decimal fraction
// strings, weights stored over a global scale (1/lcm of denominators) so
// they serialize as integers. Byte-identical after a round trip.
std::string serialize(const Decomposition& d);
std::string serialize(const GaussianDecomposition& d);
std::string serialize(const std::variant<Decomposition, GaussianDecomposition>& d);

std::variant<Decomposition, GaussianDecomposition> deserialize(const std::string& bytes);

}  // namespace qw

#endif
