#include "qwaring/npoly.hpp"

#include <sstream>

namespace qw {

void NPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

NPoly NPoly::monomial(Rational c, int d) {
    NPoly p;
    p.coeffs_.assign(static_cast<std::size_t>(d) + 1, Rational(0));
    p.coeffs_[static_cast<std::size_t>(d)] = std::move(c);
    p.normalize();
    return p;
}

const Rational& NPoly::operator[](int d) const {
    static const Rational zero(0);
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<std::size_t>(d)];
}

Rational NPoly::eval(const Int& n) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * Rational(n) + *it;
    return acc;
}

NPoly& NPoly::operator+=(const NPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

NPoly& NPoly::operator-=(const NPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

NPoly operator-(const NPoly& a) {
    NPoly r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

NPoly operator*(const NPoly& a, const NPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    NPoly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.normalize();
    return r;
}

NPoly& NPoly::operator/=(const Rational& c) {
    if (c == 0) throw DivisionByZero();
    for (auto& x : coeffs_) x /= c;
    return *this;
}

std::string NPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = (*this)[d];
        if (c == 0) continue;
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1) && d > 0;
        if (!unit) out << to_string(a);
        if (d > 0) {
            if (!unit) out << "*";
            out << "n";
            if (d > 1) out << "^" << d;
        }
    }
    return out.str();
}

NPoly binomial_npoly(int shift, int r) {
    if (r < 0) return {};
    NPoly p(Rational(1));
    for (int i = 0; i < r; ++i) p *= NPoly::n() - NPoly(Rational(shift + i));
    return p / Rational(factorial(r));
}

}  // namespace qw
