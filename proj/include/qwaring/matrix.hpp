#ifndef QWARING_MATRIX_HPP
#define QWARING_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "qwaring/errors.hpp"
#include "qwaring/npoly.hpp"
#include "qwaring/rational.hpp"

namespace qw {

// Dense rectangular matrix over an exact field (or over NPoly for the
// symbolic condition system).
template <typename F>
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<F> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, F(0)) {}

    F& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const F& at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

    Matrix transposed() const {
        Matrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }
};

// Exact rank by fraction-free (Bareiss) elimination.
template <typename F>
int matrix_rank(Matrix<F> m) {
    int rank = 0;
    F prev_pivot(1);
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot_row = -1;
        for (int i = rank; i < m.rows; ++i)
            if (!is_zero(m.at(i, col))) { pivot_row = i; break; }
        if (pivot_row < 0) continue;
        if (pivot_row != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot_row, j), m.at(rank, j));
        const F pivot = m.at(rank, col);
        for (int i = rank + 1; i < m.rows; ++i) {
            for (int j = col + 1; j < m.cols; ++j)
                m.at(i, j) = (pivot * m.at(i, j) - m.at(i, col) * m.at(rank, j)) / prev_pivot;
            m.at(i, col) = F(0);
        }
        prev_pivot = pivot;
        ++rank;
    }
    return rank;
}

// Solves a square dense system by Gaussian elimination over an exact field.
// Returns false (leaving `out` unspecified) when the matrix is singular.
template <typename F>
bool solve_dense(Matrix<F> m, std::vector<F> rhs, std::vector<F>& out) {
    const int d = m.rows;
    for (int col = 0; col < d; ++col) {
        int pivot_row = -1;
        for (int i = col; i < d; ++i)
            if (!is_zero(m.at(i, col))) { pivot_row = i; break; }
        if (pivot_row < 0) return false;
        if (pivot_row != col) {
            for (int j = 0; j < d; ++j) std::swap(m.at(pivot_row, j), m.at(col, j));
            std::swap(rhs[pivot_row], rhs[col]);
        }
        const F pivot = m.at(col, col);
        for (int i = col + 1; i < d; ++i) {
            if (is_zero(m.at(i, col))) continue;
            const F factor = m.at(i, col) / pivot;
            for (int j = col; j < d; ++j) m.at(i, j) -= factor * m.at(col, j);
            rhs[i] -= factor * rhs[col];
        }
    }
    out.assign(d, F(0));
    for (int i = d - 1; i >= 0; --i) {
        F acc = rhs[i];
        for (int j = i + 1; j < d; ++j) acc -= m.at(i, j) * out[j];
        out[i] = acc / m.at(i, i);
    }
    return true;
}

// Forward substitution over the block-lower-triangular condition system.
// block_labels[b] is the arity k of diagonal block b, reported on failure.
template <typename F>
std::vector<F> solve_block_triangular(const Matrix<F>& m, const std::vector<F>& rhs,
                                      const std::vector<int>& block_sizes,
                                      const std::vector<int>& block_labels) {
    std::vector<F> x(static_cast<std::size_t>(m.rows), F(0));
    int offset = 0;
    for (std::size_t b = 0; b < block_sizes.size(); ++b) {
        const int sz = block_sizes[b];
        Matrix<F> diag(sz, sz);
        std::vector<F> local(static_cast<std::size_t>(sz));
        for (int i = 0; i < sz; ++i) {
            F acc = rhs[static_cast<std::size_t>(offset + i)];
            for (int j = 0; j < offset; ++j)
                acc -= m.at(offset + i, j) * x[static_cast<std::size_t>(j)];
            local[static_cast<std::size_t>(i)] = acc;
            for (int j = 0; j < sz; ++j) diag.at(i, j) = m.at(offset + i, offset + j);
        }
        std::vector<F> sol;
        if (!solve_dense(std::move(diag), std::move(local), sol)) throw SingularBlock(block_labels[b]);
        for (int i = 0; i < sz; ++i) x[static_cast<std::size_t>(offset + i)] = sol[static_cast<std::size_t>(i)];
        offset += sz;
    }
    return x;
}

// Symbolic variant: the matrix and rhs carry polynomials in n, but every
// diagonal-block entry must be a constant (this is what makes the closed
// formulas polynomial in n). Division happens only by rational pivots.
std::vector<NPoly> solve_block_triangular_symbolic(const Matrix<NPoly>& m,
                                                   const std::vector<NPoly>& rhs,
                                                   const std::vector<int>& block_sizes,
                                                   const std::vector<int>& block_labels);

// Rank modulo a word-sized prime. A full-rank result certifies full rank
// over Q; a deficient result is only a lower bound. Returns -1 when some
// denominator vanishes mod p (caller should pick another prime or go exact).
int matrix_rank_mod_p(const Matrix<Rational>& m, std::uint64_t p);

}  // namespace qw

#endif
