#ifndef QWARING_RATIONAL_HPP
#define QWARING_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "qwaring/errors.hpp"

namespace qw {

// Exact scalar fields. cpp_rational keeps values canonical
// (denominator > 0, gcd-reduced, zero as 0/1).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Int& v) { return v.str(); }

// "p" or "p/q" with q > 0.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "p" or "p/q"; rejects q <= 0 and malformed input.
Rational parse_rational(const std::string& text);

// Gaussian rationals Q(i). Componentwise canonical; equality only, no order.
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() = default;
    Gaussian(Rational r) : re(std::move(r)) {}          // NOLINT(google-explicit-constructor)
    Gaussian(int v) : re(v) {}                          // NOLINT(google-explicit-constructor)
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }

    friend bool operator==(const Gaussian&, const Gaussian&) = default;

    Gaussian& operator+=(const Gaussian& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator-(const Gaussian& a) { return Gaussian(-a.re, -a.im); }

    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }

    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
        if (b.is_zero()) throw DivisionByZero();
        Rational nrm = b.re * b.re + b.im * b.im;
        return Gaussian((a.re * b.re + a.im * b.im) / nrm, (a.im * b.re - a.re * b.im) / nrm);
    }
    Gaussian& operator/=(const Gaussian& o) { return *this = *this / o; }
};

inline bool is_zero(const Rational& v) { return v == 0; }
inline bool is_zero(const Gaussian& v) { return v.is_zero(); }

inline std::string to_string(const Gaussian& g) {
    if (g.im == 0) return to_string(g.re);
    return to_string(g.re) + (g.im > 0 ? "+" : "") + to_string(g.im) + "i";
}

// Total order usable as a map key; not an algebraic order for Gaussian.
inline bool key_less(const Rational& a, const Rational& b) { return a < b; }
inline bool key_less(const Gaussian& a, const Gaussian& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

Int binomial(const Int& n, long k);
Int factorial(long n);

}  // namespace qw

#endif
