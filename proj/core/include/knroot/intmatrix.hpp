#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace knroot {

/// Exact arbitrary-precision integer. Normal-form pivoting can blow up
/// intermediate entries well past 64 bits even for small inputs, so there is
/// no fixed-width fast path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

/// Dense row-major matrix over Int.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix from_rows(std::size_t cols, const std::vector<IntVec>& rows);
    static IntMatrix from_cols(std::size_t rows, const std::vector<IntVec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntVec row(std::size_t i) const;
    IntVec col(std::size_t j) const;
    IntMatrix transpose() const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVec operator*(const IntVec& v) const;
    bool operator==(const IntMatrix& rhs) const = default;

    bool is_zero() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    /// row(i) += f * row(j)
    void add_row(std::size_t i, std::size_t j, const Int& f);
    /// col(i) += f * col(j)
    void add_col(std::size_t i, std::size_t j, const Int& f);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> a_;
};

struct HnfResult {
    IntMatrix h;  ///< row-style Hermite normal form
    IntMatrix u;  ///< unimodular, u * m == h
};

/// Row-style Hermite normal form. Pivots are positive, entries above each
/// pivot are reduced into [0, pivot), rows below the staircase are zero.
/// The form is canonical: equal inputs give byte-equal outputs.
HnfResult hnf(const IntMatrix& m);

struct SnfResult {
    IntMatrix d;  ///< diagonal, non-negative, d_i | d_{i+1}
    IntMatrix u;  ///< unimodular, u * m * v == d
    IntMatrix v;  ///< unimodular
};

/// Smith normal form with both transforms.
SnfResult snf(const IntMatrix& m);

/// Rank over the rationals (via HNF).
std::size_t rank(const IntMatrix& m);

/// One integral solution x of m * x = b, if any exists (free coordinates are
/// set to zero, so the answer is deterministic).
std::optional<IntVec> solve_integral(const IntMatrix& m, const IntVec& b);

/// Divide a nonzero vector by the gcd of its entries (direction preserved).
IntVec primitive(IntVec v);

/// Floor division (quotient rounded toward minus infinity).
Int floor_div(const Int& a, const Int& b);

Int gcd_vec(const IntVec& v);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_add(const IntVec& a, const IntVec& b);
bool vec_is_zero(const IntVec& v);
/// Lexicographic comparison, used for all canonical orderings.
bool lex_less(const IntVec& a, const IntVec& b);
Int dot(const IntVec& a, const IntVec& b);

}  // namespace knroot
