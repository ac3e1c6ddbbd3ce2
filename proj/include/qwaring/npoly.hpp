#ifndef QWARING_NPOLY_HPP
#define QWARING_NPOLY_HPP

#include <string>
#include <vector>

#include "qwaring/rational.hpp"

namespace qw {

// Univariate polynomial in the formal symbol n with rational coefficients.
// coefficients[d] is the coefficient of n^d; trailing zeros are stripped, so
// the leading coefficient is nonzero unless the polynomial is zero.
class NPoly {
   public:
    NPoly() = default;
    NPoly(Rational c) { coeffs_.push_back(std::move(c)); normalize(); }  // NOLINT
    NPoly(int c) : NPoly(Rational(c)) {}                                 // NOLINT
    explicit NPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    // The monomial c * n^d.
    static NPoly monomial(Rational c, int d);
    // The formal symbol n itself.
    static NPoly n() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& operator[](int d) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational constant_value() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }

    Rational eval(const Int& n) const;  // Horner, exact

    NPoly& operator+=(const NPoly& o);
    NPoly& operator-=(const NPoly& o);
    friend NPoly operator+(NPoly a, const NPoly& b) { return a += b; }
    friend NPoly operator-(NPoly a, const NPoly& b) { return a -= b; }
    friend NPoly operator-(const NPoly& a);
    friend NPoly operator*(const NPoly& a, const NPoly& b);
    NPoly& operator*=(const NPoly& o) { return *this = *this * o; }

    // Division by a rational scalar only; symbolic solving never divides
    // by anything that depends on n (see solve_block_triangular).
    NPoly& operator/=(const Rational& c);
    friend NPoly operator/(NPoly a, const Rational& c) { return a /= c; }

    friend bool operator==(const NPoly&, const NPoly&) = default;

    // Human-readable, e.g. "n^2 - 9*n + 38".
    std::string str() const;

   private:
    void normalize();
    std::vector<Rational> coeffs_;
};

inline bool is_zero(const NPoly& p) { return p.is_zero(); }

// The polynomial C(n - shift, r) = (n-shift)(n-shift-1)...(n-shift-r+1) / r!.
// Matches the paper's convention that formulas hold for every natural n,
// with terms vanishing when n is small.
NPoly binomial_npoly(int shift, int r);

}  // namespace qw

#endif
