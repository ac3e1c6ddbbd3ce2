#include "qwaring/matrix.hpp"

namespace qw {

std::vector<NPoly> solve_block_triangular_symbolic(const Matrix<NPoly>& m,
                                                   const std::vector<NPoly>& rhs,
                                                   const std::vector<int>& block_sizes,
                                                   const std::vector<int>& block_labels) {
    std::vector<NPoly> x(static_cast<std::size_t>(m.rows));
    int offset = 0;
    for (std::size_t b = 0; b < block_sizes.size(); ++b) {
        const int sz = block_sizes[b];
        Matrix<Rational> diag(sz, sz);
        std::vector<NPoly> local(static_cast<std::size_t>(sz));
        for (int i = 0; i < sz; ++i) {
            NPoly acc = rhs[static_cast<std::size_t>(offset + i)];
            for (int j = 0; j < offset; ++j)
                acc -= m.at(offset + i, j) * x[static_cast<std::size_t>(j)];
            local[static_cast<std::size_t>(i)] = std::move(acc);
            for (int j = 0; j < sz; ++j) {
                const NPoly& e = m.at(offset + i, offset + j);
                if (!e.is_constant())
                    throw ContractViolation("diagonal block k=" + std::to_string(block_labels[b]) +
                                            " has an n-dependent entry: " + e.str());
                diag.at(i, j) = e.constant_value();
            }
        }
        // Gaussian elimination with rational pivots; the NPoly side only ever
        // gets scaled by rationals, so no division by n-dependent quantities.
        for (int col = 0; col < sz; ++col) {
            int pivot_row = -1;
            for (int i = col; i < sz; ++i)
                if (diag.at(i, col) != 0) { pivot_row = i; break; }
            if (pivot_row < 0) throw SingularBlock(block_labels[b]);
            if (pivot_row != col) {
                for (int j = 0; j < sz; ++j) std::swap(diag.at(pivot_row, j), diag.at(col, j));
                std::swap(local[static_cast<std::size_t>(pivot_row)], local[static_cast<std::size_t>(col)]);
            }
            const Rational pivot = diag.at(col, col);
            for (int i = col + 1; i < sz; ++i) {
                if (diag.at(i, col) == 0) continue;
                const Rational factor = diag.at(i, col) / pivot;
                for (int j = col; j < sz; ++j) diag.at(i, j) -= factor * diag.at(col, j);
                local[static_cast<std::size_t>(i)] -= NPoly(factor) * local[static_cast<std::size_t>(col)];
            }
        }
        for (int i = sz - 1; i >= 0; --i) {
            NPoly acc = local[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < sz; ++j)
                acc -= NPoly(diag.at(i, j)) * x[static_cast<std::size_t>(offset + j)];
            x[static_cast<std::size_t>(offset + i)] = acc / diag.at(i, i);
        }
        offset += sz;
    }
    return x;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t int_mod(const Int& v, std::uint64_t p) {
    Int m = v % Int(p);
    if (m < 0) m += p;
    return m.convert_to<std::uint64_t>();
}

}  // namespace

int matrix_rank_mod_p(const Matrix<Rational>& m, std::uint64_t p) {
    std::vector<std::uint64_t> a(static_cast<std::size_t>(m.rows) * m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            const Rational& e = m.at(i, j);
            std::uint64_t den = int_mod(denominator(e), p);
            if (den == 0) return -1;
            a[static_cast<std::size_t>(i) * m.cols + j] =
                mulmod(int_mod(numerator(e), p), powmod(den, p - 2, p), p);
        }
    auto at = [&](int i, int j) -> std::uint64_t& {
        return a[static_cast<std::size_t>(i) * m.cols + j];
    };
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot_row = -1;
        for (int i = rank; i < m.rows; ++i)
            if (at(i, col) != 0) { pivot_row = i; break; }
        if (pivot_row < 0) continue;
        if (pivot_row != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(at(pivot_row, j), at(rank, j));
        std::uint64_t inv = powmod(at(rank, col), p - 2, p);
        for (int i = rank + 1; i < m.rows; ++i) {
            if (at(i, col) == 0) continue;
            std::uint64_t factor = mulmod(at(i, col), inv, p);
            for (int j = col; j < m.cols; ++j) {
                std::uint64_t sub = mulmod(factor, at(rank, j), p);
                at(i, j) = (at(i, j) + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace qw
