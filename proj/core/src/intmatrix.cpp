#include "knroot/intmatrix.hpp"

#include <algorithm>
#include <cassert>

#include "knroot/errors.hpp"

namespace knroot {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<IntVec>& rows) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error("from_rows: ragged row");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_cols(std::size_t rows, const std::vector<IntVec>& cols) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw Error("from_cols: ragged column");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

IntVec IntMatrix::row(std::size_t i) const {
    IntVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

IntVec IntMatrix::col(std::size_t j) const {
    IntVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error("matrix product: shape mismatch");
    IntMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) p.at(i, j) += x * rhs.at(k, j);
        }
    return p;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
    if (cols_ != v.size()) throw Error("matrix-vector product: shape mismatch");
    IntVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Int& f) {
    if (f == 0) return;
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) += f * at(j, k);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Int& f) {
    if (f == 0) return;
    for (std::size_t k = 0; k < rows_; ++k) at(k, i) += f * at(k, j);
}

Int floor_div(const Int& a, const Int& b) {
    assert(b != 0);
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

HnfResult hnf(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    HnfResult res{m, IntMatrix::identity(r)};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;

    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        // Clear the column below `row` by repeated Euclidean row steps.
        while (true) {
            std::size_t best = r;
            for (std::size_t i = row; i < r; ++i) {
                if (h.at(i, col) == 0) continue;
                if (best == r || abs(h.at(i, col)) < abs(h.at(best, col))) best = i;
            }
            if (best == r) break;  // column is zero below `row`
            h.swap_rows(row, best);
            u.swap_rows(row, best);
            bool cleared = true;
            for (std::size_t i = row + 1; i < r; ++i) {
                if (h.at(i, col) == 0) continue;
                Int q = h.at(i, col) / h.at(row, col);  // truncated is fine here
                h.add_row(i, row, -q);
                u.add_row(i, row, -q);
                if (h.at(i, col) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (h.at(row, col) == 0) continue;  // no pivot in this column
        if (h.at(row, col) < 0) {
            h.negate_row(row);
            u.negate_row(row);
        }
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < row; ++i) {
            Int q = floor_div(h.at(i, col), h.at(row, col));
            h.add_row(i, row, -q);
            u.add_row(i, row, -q);
        }
        ++row;
    }
    return res;
}

namespace {

// Smallest nonzero |entry| in the trailing submatrix of d starting at (t, t);
// returns false if the submatrix is zero.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            Int a = abs(d.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    SnfResult res{m, IntMatrix::identity(r), IntMatrix::identity(c)};
    IntMatrix& d = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    const std::size_t nmin = std::min(r, c);
    for (std::size_t t = 0; t < nmin; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(d, t, pi, pj)) break;
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        while (true) {
            // Clear column t below the pivot.
            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                d.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (d.at(i, t) != 0) dirty = true;
            }
            // Clear row t right of the pivot.
            for (std::size_t j = t + 1; j < c; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                d.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (d.at(t, j) != 0) dirty = true;
            }
            if (dirty) {
                // A remainder survived; move the smallest entry back to (t,t).
                if (!find_pivot(d, t, pi, pj)) break;
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            // Pivot divides the rest of the submatrix?
            bool divides = true;
            std::size_t bi = 0, bj = 0;
            for (std::size_t i = t + 1; i < r && divides; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        divides = false;
                        bi = i;
                        bj = j;
                        break;
                    }
            if (divides) break;
            (void)bj;
            d.add_row(t, bi, 1);
            u.add_row(t, bi, 1);
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    return res;
}

std::size_t rank(const IntMatrix& m) {
    IntMatrix h = hnf(m).h;
    std::size_t rk = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h.at(i, j) != 0) {
                nonzero = true;
                break;
            }
        if (nonzero) ++rk;
    }
    return rk;
}

std::optional<IntVec> solve_integral(const IntMatrix& m, const IntVec& b) {
    if (b.size() != m.rows()) throw Error("solve_integral: shape mismatch");
    SnfResult s = snf(m);
    const std::size_t r = m.rows(), c = m.cols();
    const std::size_t nmin = std::min(r, c);
    IntVec ub = s.u * b;
    IntVec w(c);
    for (std::size_t i = 0; i < r; ++i) {
        if (i < nmin && s.d.at(i, i) != 0) {
            if (ub[i] % s.d.at(i, i) != 0) return std::nullopt;
            w[i] = ub[i] / s.d.at(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v * w;
}

IntVec primitive(IntVec v) {
    Int g = gcd_vec(v);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

Int gcd_vec(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
    assert(a.size() == b.size());
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
    assert(a.size() == b.size());
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool vec_is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Int dot(const IntVec& a, const IntVec& b) {
    assert(a.size() == b.size());
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace knroot
