#include "qwaring/sympoly.hpp"

#include <sstream>

namespace qw {

std::string MultiIndex::str() const {
    std::ostringstream out;
    bool any = false;
    for (int i = 0; i < n(); ++i) {
        if (exponents[static_cast<std::size_t>(i)] == 0) continue;
        if (any) out << "*";
        any = true;
        out << "x" << (i + 1);
        if (exponents[static_cast<std::size_t>(i)] > 1)
            out << "^" << exponents[static_cast<std::size_t>(i)];
    }
    return any ? out.str() : "1";
}

SparsePoly<Rational> monomial_symmetric(const Partition& m, int n) {
    SparsePoly<Rational> out(n);
    if (m.count() > n) return out;
    std::vector<int> exps(m.parts);
    exps.resize(static_cast<std::size_t>(n), 0);
    // exps starts weakly decreasing; prev_permutation walks every distinct
    // arrangement exactly once.
    do {
        out.add(MultiIndex{exps}, Rational(1));
    } while (std::prev_permutation(exps.begin(), exps.end()));
    return out;
}

SparsePoly<Rational> expand_q_power(int n, int s) {
    if (n < 1 || s < 1) throw InvalidArgument("expand_q_power: n, s >= 1 required");
    SparsePoly<Rational> out(n);
    for (int k = 1; k <= std::min(s, n); ++k) {
        for (const Partition& m : enumerate_partitions(s, k)) {
            Partition doubled = m;
            for (int& part : doubled.parts) part *= 2;
            SparsePoly<Rational> orbit = monomial_symmetric(doubled, n);
            orbit *= Rational(multinomial(s, m));
            out += orbit;
        }
    }
    return out;
}

}  // namespace qw
