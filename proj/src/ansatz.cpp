#include "qwaring/ansatz.hpp"

#include <random>
#include <set>
#include <tuple>

namespace qw {

namespace {

template <typename F>
struct VecKeyLess {
    bool operator()(const std::vector<F>& a, const std::vector<F>& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!(a[i] == b[i])) return key_less(a[i], b[i]);
        }
        return false;
    }
};

// Shared row/column layout; binom(k, r) supplies C(n-k, r) numerically or
// as a polynomial.
template <typename F, typename BinomFn>
ConditionSystemT<F> assemble_impl(const AnsatzSpec& spec, int k_max, BinomFn binom) {
    const int s = spec.s;
    ConditionSystemT<F> sys;
    for (int k = k_max; k >= 1; --k) {
        const auto& pts = spec.points(k);
        sys.block_sizes.push_back(static_cast<int>(pts.size()));
        sys.block_labels.push_back(k);
        for (std::size_t j = 0; j < pts.size(); ++j)
            sys.col_index.emplace_back(k, static_cast<int>(j));
        for (const Partition& m : enumerate_partitions(s, k)) sys.row_index.emplace_back(k, m);
    }
    const int rows = static_cast<int>(sys.row_index.size());
    const int cols = static_cast<int>(sys.col_index.size());
    sys.matrix = Matrix<F>(rows, cols);
    sys.rhs.resize(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) {
        const auto& [k, m] = sys.row_index[static_cast<std::size_t>(r)];
        std::vector<int> doubled = m.parts;
        for (int& part : doubled) part *= 2;
        const Rational mult(multinomial(2 * s, doubled));
        sys.rhs[static_cast<std::size_t>(r)] = F(Rational(multinomial(s, m)));
        for (int c = 0; c < cols; ++c) {
            const auto& [lambda, ordinal] = sys.col_index[static_cast<std::size_t>(c)];
            if (lambda < k) continue;
            const auto& point = spec.points(lambda)[static_cast<std::size_t>(ordinal)];
            Rational scalar = Rational(Int(1) << (lambda - 1)) * mult * h_value(point, m);
            sys.matrix.at(r, c) = binom(k, lambda - k) * F(scalar);
        }
    }
    return sys;
}

}  // namespace

ConditionSystem assemble_system(const AnsatzSpec& spec, int n) {
    int k_max = std::min(spec.s, n);
    return assemble_impl<Rational>(spec, k_max, [n](int k, int r) {
        return Rational(binomial(Int(n - k), r));
    });
}

SymbolicConditionSystem assemble_system_symbolic(const AnsatzSpec& spec) {
    return assemble_impl<NPoly>(spec, spec.s,
                                [](int k, int r) { return binomial_npoly(k, r); });
}

namespace {

bool diagonal_block_ok(const std::vector<std::vector<Rational>>& pts,
                       const std::vector<Partition>& parts) {
    const int d = static_cast<int>(pts.size());
    Matrix<Rational> h(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            h.at(i, j) = h_value(pts[static_cast<std::size_t>(j)], parts[static_cast<std::size_t>(i)]);
    return matrix_rank(h) == d;
}

}  // namespace

AnsatzSpec select_points(int s, long seed, int retry_budget) {
    if (s < 1) throw InvalidArgument("select_points: s >= 1 required");
    AnsatzSpec spec;
    spec.s = s;
    spec.blocks.resize(static_cast<std::size_t>(s));
    for (int k = 1; k <= s; ++k) {
        const auto parts = enumerate_partitions(s, k);
        const int pk = static_cast<int>(parts.size());
        std::vector<std::vector<Rational>> pts;
        for (int j = 1; j <= pk; ++j) {
            std::vector<Rational> point(static_cast<std::size_t>(k), Rational(1));
            point[0] = j;
            pts.push_back(std::move(point));
        }
        if (!diagonal_block_ok(pts, parts)) {
            std::mt19937_64 rng(static_cast<unsigned long long>(seed) * 1000003ull +
                                static_cast<unsigned long long>(k));
            long bound = 16;
            int attempt = 0;
            for (;; ++attempt) {
                if (attempt >= retry_budget)
                    throw RetryExhausted("select_points: no nonsingular block for k=" +
                                         std::to_string(k) + " after " +
                                         std::to_string(retry_budget) + " attempts");
                if (attempt > 0 && attempt % 8 == 0) bound *= 2;
                std::uniform_int_distribution<long> dist(1, bound);
                std::set<std::vector<Rational>, VecKeyLess<Rational>> seen;
                pts.clear();
                for (int j = 0; j < pk; ++j) {
                    std::vector<Rational> point(static_cast<std::size_t>(k));
                    for (auto& coord : point) coord = dist(rng);
                    std::sort(point.begin(), point.end());
                    pts.push_back(std::move(point));
                    seen.insert(pts.back());
                }
                if (static_cast<int>(seen.size()) == pk && diagonal_block_ok(pts, parts)) break;
            }
        }
        spec.blocks[static_cast<std::size_t>(k - 1)] = std::move(pts);
    }
    return spec;
}

template <typename F>
DecompositionT<F> materialize(int n, int s,
                              const std::vector<std::tuple<F, int, std::vector<F>>>& families) {
    std::map<std::vector<F>, F, VecKeyLess<F>> merged;
    std::vector<F> units{F(1), F(-1)};
    if constexpr (std::is_same_v<F, Gaussian>) {
        if (s % 2 == 0) {
            units.push_back(Gaussian::i());
            units.push_back(-Gaussian::i());
        }
    }
    for (const auto& [weight, k, point] : families) {
        if (is_zero(weight) || k > n) continue;
        // Distinct coordinate arrangements of the point.
        std::set<std::vector<F>, VecKeyLess<F>> arrangements;
        std::vector<int> perm(static_cast<std::size_t>(k));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<F> arr(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                arr[static_cast<std::size_t>(i)] =
                    point[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            arrangements.insert(std::move(arr));
        } while (std::next_permutation(perm.begin(), perm.end()));
        // Supports: k-subsets of {0..n-1}.
        std::vector<int> support(static_cast<std::size_t>(k));
        std::iota(support.begin(), support.end(), 0);
        while (true) {
            for (const auto& arr : arrangements) {
                for (unsigned pattern = 0; pattern < (1u << (k - 1)); ++pattern) {
                    std::vector<F> coeffs(static_cast<std::size_t>(n), F(0));
                    for (int i = 0; i < k; ++i) {
                        bool neg = i > 0 && ((pattern >> (i - 1)) & 1u);
                        const F& a = arr[static_cast<std::size_t>(i)];
                        coeffs[static_cast<std::size_t>(support[static_cast<std::size_t>(i)])] =
                            neg ? F(-a) : a;
                    }
                    // Canonical representative of {u * coeffs : u^{2s} = 1}.
                    VecKeyLess<F> less;
                    std::vector<F> canon = coeffs;
                    for (std::size_t u = 1; u < units.size(); ++u) {
                        std::vector<F> alt = coeffs;
                        for (auto& x : alt) x *= units[u];
                        if (less(alt, canon)) canon = std::move(alt);
                    }
                    auto [it, inserted] = merged.emplace(std::move(canon), weight);
                    if (!inserted) it->second += weight;
                }
            }
            // Next k-subset.
            int i = k - 1;
            while (i >= 0 && support[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++support[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                support[static_cast<std::size_t>(j)] = support[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    DecompositionT<F> d;
    d.n = n;
    d.s = s;
    for (auto& [coeffs, w] : merged) {
        if (is_zero(w)) continue;
        d.terms.emplace_back(w, coeffs);
    }
    return d;
}

template DecompositionT<Rational> materialize(
    int, int, const std::vector<std::tuple<Rational, int, std::vector<Rational>>>&);
template DecompositionT<Gaussian> materialize(
    int, int, const std::vector<std::tuple<Gaussian, int, std::vector<Gaussian>>>&);

Decomposition generate(int n, int s, long seed) {
    if (n < 1 || s < 1) throw InvalidArgument("generate: n, s >= 1 required");
    AnsatzSpec spec = select_points(s, seed);
    ConditionSystem sys = assemble_system(spec, n);
    std::vector<Rational> weights =
        solve_block_triangular(sys.matrix, sys.rhs, sys.block_sizes, sys.block_labels);
    std::vector<std::tuple<Rational, int, std::vector<Rational>>> families;
    for (std::size_t c = 0; c < sys.col_index.size(); ++c) {
        const auto& [k, ordinal] = sys.col_index[c];
        families.emplace_back(weights[c], k, spec.points(k)[static_cast<std::size_t>(ordinal)]);
    }
    Decomposition d = materialize(n, s, families);
    d.provenance = "generated";
    d.seed = seed;
    return d;
}

SymbolicDecomposition generate_symbolic(int s, const AnsatzSpec& spec) {
    SymbolicConditionSystem sys = assemble_system_symbolic(spec);
    std::vector<NPoly> weights =
        solve_block_triangular_symbolic(sys.matrix, sys.rhs, sys.block_sizes, sys.block_labels);
    SymbolicDecomposition sym;
    sym.s = s;
    sym.n_min = s;
    for (std::size_t c = 0; c < sys.col_index.size(); ++c) {
        const auto& [k, ordinal] = sys.col_index[c];
        sym.terms.push_back(
            {k, spec.points(k)[static_cast<std::size_t>(ordinal)], weights[c]});
    }
    return sym;
}

Decomposition materialize_symbolic(const SymbolicDecomposition& sym, int n,
                                   const std::string& provenance) {
    std::vector<std::tuple<Rational, int, std::vector<Rational>>> families;
    for (const auto& term : sym.terms)
        families.emplace_back(term.weight.eval(n), term.k, term.point);
    Decomposition d = materialize(n, sym.s, families);
    d.provenance = provenance;
    return d;
}

namespace {

std::vector<Rational> ones(int k) { return std::vector<Rational>(static_cast<std::size_t>(k), 1); }

NPoly poly(std::vector<Rational> ascending) { return NPoly(std::move(ascending)); }

}  // namespace

SymbolicDecomposition closed_form(int s) {
    SymbolicDecomposition d;
    d.s = s;
    d.n_min = s;
    switch (s) {
        case 1:
            d.terms = {{1, ones(1), poly({1})}};
            break;
        case 2:
            d.terms = {{2, ones(2), poly({Rational(1, 6)})},
                       {1, ones(1), poly({Rational(4, 3), Rational(-1, 3)})}};
            break;
        case 3:
            d.terms = {{3, ones(3), poly({Rational(1, 60)})},
                       {2, ones(2), poly({Rational(5, 30), Rational(-1, 30)})},
                       {1, ones(1), poly({Rational(38, 30), Rational(-9, 30), Rational(1, 30)})}};
            break;
        case 4:
            d.terms = {
                {4, ones(4), poly({Rational(1, 840)})},
                {3, ones(3), poly({Rational(6, 420), Rational(-1, 420)})},
                {2, ones(2),
                 poly({Rational(76, 1260), Rational(-33, 1260), Rational(3, 1260)})},
                {2, {2, 1}, poly({Rational(1, 1260)})},
                {1, ones(1),
                 poly({Rational(933, 630), Rational(-317, 630), Rational(15, 630),
                       Rational(-1, 630)})}};
            break;
        case 5:
            d.terms = {
                {5, ones(5), poly({Rational(1, 15120)})},
                {4, ones(4), poly({Rational(7, 7560), Rational(-1, 7560)})},
                {3, ones(3),
                 poly({Rational(36, 7560), Rational(-13, 7560), Rational(1, 7560)})},
                {3, {2, 1, 1}, poly({Rational(1, 22680)})},
                {2, ones(2),
                 poly({Rational(226, 11340), Rational(-90, 11340), Rational(18, 11340),
                       Rational(-1, 11340)})},
                {2, {2, 1}, poly({Rational(4, 11340), Rational(-1, 11340)})},
                {1, ones(1),
                 poly({Rational(35592, 22680), Rational(-15086, 22680), Rational(2195, 22680),
                       Rational(-22, 22680), Rational(1, 22680)})}};
            break;
        default:
            throw DomainError("closed_form: only s in 1..5 is available");
    }
    return d;
}

namespace {

GaussianDecomposition builtin_s4_gaussian(int n) {
    auto w = [n](NPoly p) { return Gaussian(p.eval(n)); };
    std::vector<std::tuple<Gaussian, int, std::vector<Gaussian>>> families = {
        {w(poly({Rational(1, 840)})), 4, {1, 1, 1, 1}},
        {w(poly({Rational(6, 420), Rational(-1, 420)})), 3, {1, 1, 1}},
        {w(poly({Rational(42, 420), Rational(-11, 420), Rational(1, 420)})), 2, {1, 1}},
        {w(poly({Rational(-1, 140)})), 2, {Gaussian(1), Gaussian::i()}},
        {w(poly({Rational(708, 630), Rational(-92, 630), Rational(15, 630), Rational(-1, 630)})),
         1,
         {1}}};
    GaussianDecomposition d = materialize(n, 4, families);
    d.provenance = "builtin:s4-gaussian";
    return d;
}

Decomposition builtin_q8s2() {
    Decomposition d;
    d.n = 8;
    d.s = 2;
    d.provenance = "builtin:q8s2";
    std::vector<Rational> all(8, Rational(1));
    d.terms.emplace_back(Rational(3, 256), all);
    for (int j = 0; j < 8; ++j) {
        std::vector<Rational> e(8, Rational(0));
        e[static_cast<std::size_t>(j)] = 1;
        d.terms.emplace_back(Rational(8, 9), e);
    }
    for (int k = 0; k < 8; ++k) {
        std::vector<Rational> v(8, Rational(3, 16));
        v[static_cast<std::size_t>(k)] = Rational(3, 16) - 1;
        d.terms.emplace_back(Rational(-8, 9), v);
    }
    for (int j1 = 0; j1 < 8; ++j1)
        for (int j2 = j1 + 1; j2 < 8; ++j2) {
            std::vector<Rational> v(8, Rational(-3, 8));
            v[static_cast<std::size_t>(j1)] += 1;
            v[static_cast<std::size_t>(j2)] += 1;
            d.terms.emplace_back(Rational(1, 3), v);
        }
    return d;
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"s2", "s3", "s4", "s4-gaussian", "s5", "q8s2"};
}

std::variant<Decomposition, GaussianDecomposition> builtin(const std::string& name, int n) {
    std::string key = name;
    if (key == "s2-real") key = "s2";
    if (key == "s4-real") key = "s4";
    if (key == "s4-gaussian") {
        if (n < 4) throw DomainError("s4-gaussian requires n >= 4");
        return builtin_s4_gaussian(n);
    }
    if (key == "q8s2") {
        if (n != 8) throw DomainError("q8s2 is only valid at n = 8");
        return builtin_q8s2();
    }
    int s = 0;
    if (key == "s2") s = 2;
    else if (key == "s3") s = 3;
    else if (key == "s5") s = 5;
    else if (key == "s4") s = 4;
    else throw UnknownBuiltin(name);
    if (n < s) throw DomainError(key + " requires n >= " + std::to_string(s));
    return materialize_symbolic(closed_form(s), n, "builtin:" + key);
}

}  // namespace qw
