#include "qwaring/rational.hpp"

#include <cctype>

namespace qw {

static bool valid_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer(text)) throw ParseError("bad rational: '" + text + "'");
        return Rational(Int(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den))
        throw ParseError("bad rational: '" + text + "'");
    Int d(den);
    if (d <= 0) throw ParseError("bad rational (denominator <= 0): '" + text + "'");
    return Rational(Int(num), d);
}

Int binomial(const Int& n, long k) {
    if (k < 0) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact: C(n,i)*(n-i) is divisible by i+1
    }
    return r;
}

Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace qw
