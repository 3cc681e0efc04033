#include "knroot/lattice.hpp"

#include <algorithm>

#include "knroot/errors.hpp"

namespace knroot {

Sublattice Sublattice::from_generators(std::size_t ambient_dim, const std::vector<IntVec>& gens) {
    for (const auto& g : gens)
        if (g.size() != ambient_dim) throw Error("sublattice generator has wrong dimension");
    return from_basis_rows(IntMatrix::from_rows(ambient_dim, gens));
}

Sublattice Sublattice::from_basis_rows(const IntMatrix& rows) {
    IntMatrix h = hnf(rows).h;
    std::size_t rk = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h.at(i, j) != 0) nonzero = true;
        if (nonzero) ++rk;
    }
    IntMatrix basis(rk, h.cols());
    // HNF puts zero rows last.
    for (std::size_t i = 0; i < rk; ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) basis.at(i, j) = h.at(i, j);
    Sublattice s;
    s.ambient_ = h.cols();
    s.basis_ = std::move(basis);
    return s;
}

Sublattice Sublattice::zero(std::size_t ambient_dim) {
    Sublattice s;
    s.ambient_ = ambient_dim;
    s.basis_ = IntMatrix(0, ambient_dim);
    return s;
}

Sublattice Sublattice::full(std::size_t ambient_dim) {
    Sublattice s;
    s.ambient_ = ambient_dim;
    s.basis_ = IntMatrix::identity(ambient_dim);
    return s;
}

bool Sublattice::contains(const IntVec& v) const { return coordinates(v).has_value(); }

std::optional<IntVec> Sublattice::coordinates(const IntVec& v) const {
    if (v.size() != ambient_) throw Error("coordinates: wrong dimension");
    return solve_integral(basis_.transpose(), v);
}

IntVec Sublattice::from_coordinates(const IntVec& c) const {
    return basis_.transpose() * c;
}

Sublattice Sublattice::saturation() const {
    // Span over Q = common kernel of the integral forms vanishing on it.
    Sublattice perp = kernel_basis(basis_);        // {w : B w = 0}
    return kernel_basis(perp.basis());             // {v : W v = 0}
}

Sublattice Sublattice::join(const Sublattice& other) const {
    if (other.ambient_ != ambient_) throw Error("join: ambient mismatch");
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < basis_.rows(); ++i) rows.push_back(basis_.row(i));
    for (std::size_t i = 0; i < other.basis_.rows(); ++i) rows.push_back(other.basis_.row(i));
    return from_generators(ambient_, rows);
}

std::optional<Int> FinAbGroup::order() const {
    if (free_rank > 0) return std::nullopt;
    Int o = 1;
    for (const Int& d : invariant_factors) o *= d;
    return o;
}

IntVec FinAbGroup::project(const IntVec& v) const {
    IntVec raw = projection * v;
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
        raw[i] %= invariant_factors[i];
        if (raw[i] < 0) raw[i] += invariant_factors[i];
    }
    return raw;
}

IntVec FinAbGroup::project_free(const IntVec& v) const {
    IntVec raw = projection * v;
    return IntVec(raw.begin() + static_cast<std::ptrdiff_t>(invariant_factors.size()), raw.end());
}

Sublattice kernel_basis(const IntMatrix& m) {
    SnfResult s = snf(m);
    const std::size_t nmin = std::min(m.rows(), m.cols());
    std::vector<IntVec> gens;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (j >= nmin || s.d.at(j, j) == 0) gens.push_back(s.v.col(j));
    return Sublattice::from_generators(m.cols(), gens);
}

FinAbGroup cokernel(const IntMatrix& m) {
    SnfResult s = snf(m);
    const std::size_t r = m.rows();
    const std::size_t nmin = std::min(r, m.cols());

    FinAbGroup g;
    std::vector<std::size_t> torsion_rows, free_rows;
    for (std::size_t i = 0; i < r; ++i) {
        Int d = (i < nmin) ? s.d.at(i, i) : Int(0);
        if (d == 0)
            free_rows.push_back(i);
        else if (d >= 2) {
            torsion_rows.push_back(i);
            g.invariant_factors.push_back(d);
        }
        // d == 1: coordinate dies in the quotient
    }
    g.free_rank = free_rows.size();
    g.projection = IntMatrix(torsion_rows.size() + free_rows.size(), r);
    std::size_t out = 0;
    for (std::size_t i : torsion_rows) {
        for (std::size_t j = 0; j < r; ++j) g.projection.at(out, j) = s.u.at(i, j);
        ++out;
    }
    for (std::size_t i : free_rows) {
        for (std::size_t j = 0; j < r; ++j) g.projection.at(out, j) = s.u.at(i, j);
        ++out;
    }
    return g;
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
    const std::size_t n = u.rows();
    if (u.cols() != n) throw Error("inverse_unimodular: not square");
    IntMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        IntVec e(n);
        e[j] = 1;
        auto x = solve_integral(u, e);
        if (!x) throw Error("inverse_unimodular: matrix is not unimodular");
        for (std::size_t i = 0; i < n; ++i) inv.at(i, j) = (*x)[i];
    }
    return inv;
}

}  // namespace knroot
