// Test-side oracles, deliberately independent of the library's normal-form
// code paths: naive HNF without transforms, fraction-free determinants,
// breadth-first coset enumeration, and brute-force lattice-point searches.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "knroot/intmatrix.hpp"

namespace oracles {

using knroot::Int;
using knroot::IntMatrix;
using knroot::IntVec;

// Row echelon Hermite form by plain Euclid steps; no transform tracking.
inline IntMatrix naive_hnf(IntMatrix m) {
    const std::size_t r = m.rows(), c = m.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        while (true) {
            std::size_t best = r;
            for (std::size_t i = row; i < r; ++i)
                if (m.at(i, col) != 0 && (best == r || abs(m.at(i, col)) < abs(m.at(best, col))))
                    best = i;
            if (best == r) break;
            m.swap_rows(row, best);
            bool done = true;
            for (std::size_t i = row + 1; i < r; ++i)
                if (m.at(i, col) != 0) {
                    m.add_row(i, row, -(m.at(i, col) / m.at(row, col)));
                    if (m.at(i, col) != 0) done = false;
                }
            if (done) break;
        }
        if (m.at(row, col) == 0) continue;
        if (m.at(row, col) < 0) m.negate_row(row);
        for (std::size_t i = 0; i < row; ++i)
            m.add_row(i, row, -knroot::floor_div(m.at(i, col), m.at(row, col)));
        ++row;
    }
    return m;
}

// Fraction-free (Bareiss) determinant of a square matrix.
inline Int bareiss_det(IntMatrix m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t piv = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv == n) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

// Rational solvability of m x = b with an integrality check, by fraction-free
// elimination on the augmented matrix. Returns true iff an integral solution
// exists. Independent of the library's SNF-based solver.
inline bool has_integral_solution(const IntMatrix& m, const IntVec& b) {
    using knroot::Rat;
    const std::size_t r = m.rows(), c = m.cols();
    std::vector<std::vector<Rat>> a(r, std::vector<Rat>(c + 1));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) a[i][j] = Rat(m.at(i, j));
        a[i][c] = Rat(b[i]);
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        std::size_t piv = row;
        while (piv < r && a[piv][col] == 0) ++piv;
        if (piv == r) continue;
        std::swap(a[piv], a[row]);
        for (std::size_t i = 0; i < r; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[row][col];
            for (std::size_t j = col; j <= c; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < r; ++i)
        if (a[i][c] != 0) return false;  // inconsistent
    // The lattice membership question needs integrality of SOME solution;
    // with free columns this brute oracle only certifies the pivot-basic
    // solution, so callers must use it on full-column-rank systems.
    for (std::size_t i = 0; i < row; ++i) {
        Rat x = a[i][c] / a[i][pivot_col[i]];
        if (boost::multiprecision::denominator(x) != 1) return false;
    }
    return true;
}

// All vectors with entries in [-bound, bound].
inline std::vector<IntVec> small_vectors(std::size_t dim, long long bound) {
    std::vector<IntVec> out;
    IntVec v(dim, Int(-bound));
    while (true) {
        out.push_back(v);
        std::size_t pos = 0;
        while (pos < dim) {
            v[pos] += 1;
            if (v[pos] <= bound) break;
            v[pos] = -bound;
            ++pos;
        }
        if (pos == dim) break;
        if (dim == 0) break;
    }
    return out;
}

// Brute-force coset count of Z^r / (column span of m): breadth-first walk of
// the unit steps, identifying vectors whose difference lies in the column
// span. Only valid when m is square and nonsingular (the membership test
// checks integrality of the unique rational solution). Caps at `limit`.
inline std::size_t coset_count_bfs(const IntMatrix& m, std::size_t limit) {
    std::vector<IntVec> reps;
    std::vector<IntVec> queue;
    IntVec zero(m.rows(), Int(0));
    reps.push_back(zero);
    queue.push_back(zero);
    while (!queue.empty()) {
        IntVec cur = queue.back();
        queue.pop_back();
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (int s : {1, -1}) {
                IntVec nxt = cur;
                nxt[i] += s;
                bool known = false;
                for (const IntVec& rep : reps) {
                    IntVec diff = knroot::vec_sub(nxt, rep);
                    if (has_integral_solution(m, diff)) {
                        known = true;
                        break;
                    }
                }
                if (!known) {
                    reps.push_back(nxt);
                    if (reps.size() > limit) return reps.size();
                    queue.push_back(nxt);
                }
            }
    }
    return reps.size();
}

// Coset count via the diagonal box of the naive HNF of the image lattice
// (square full-rank image only): the box volume equals the index.
inline Int coset_count_box(const IntMatrix& image_columns) {
    IntMatrix h = naive_hnf(image_columns.transpose());
    Int prod = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < h.cols(); ++col) {
        if (row < h.rows() && h.at(row, col) != 0) {
            prod *= h.at(row, col);
            ++row;
        }
    }
    if (row != h.cols()) return 0;  // image not full rank: infinite quotient
    return prod;
}

}  // namespace oracles
