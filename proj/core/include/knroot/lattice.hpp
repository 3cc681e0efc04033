#pragma once

#include <optional>

#include "knroot/intmatrix.hpp"

namespace knroot {

/// A sublattice of Z^d, stored by its canonical basis: the rows of an
/// integer matrix in row-style Hermite normal form with zero rows dropped.
/// Two sublattices are equal iff their stored bases are equal.
class Sublattice {
public:
    Sublattice() = default;

    static Sublattice from_generators(std::size_t ambient_dim, const std::vector<IntVec>& gens);
    static Sublattice from_basis_rows(const IntMatrix& rows);  // canonicalizes
    static Sublattice zero(std::size_t ambient_dim);
    static Sublattice full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    /// rank x ambient_dim; rows are the HNF basis.
    const IntMatrix& basis() const { return basis_; }
    IntVec basis_vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const IntVec& v) const;
    /// Coordinates of v in the HNF basis, if v lies in the lattice.
    std::optional<IntVec> coordinates(const IntVec& v) const;
    /// basis()^T * c — the ambient vector with the given basis coordinates.
    IntVec from_coordinates(const IntVec& c) const;

    /// Smallest saturated sublattice containing this one
    /// (span over Q intersected with Z^d).
    Sublattice saturation() const;

    /// Sublattice generated by this one together with `other`.
    Sublattice join(const Sublattice& other) const;

    bool operator==(const Sublattice& rhs) const = default;

private:
    std::size_t ambient_ = 0;
    IntMatrix basis_;  // rank x ambient, HNF rows
};

/// Finitely generated abelian group presented as
/// Z^free_rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... | d_k, d_i >= 2.
/// `projection` maps ambient coordinates to the group: its first k rows give
/// the torsion coordinates (to be read mod d_i), the remaining free_rank rows
/// give the free coordinates.
struct FinAbGroup {
    std::size_t free_rank = 0;
    std::vector<Int> invariant_factors;
    IntMatrix projection;  // (k + free_rank) x ambient

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    bool is_free() const { return invariant_factors.empty(); }
    /// Group order; nullopt when infinite (free_rank > 0).
    std::optional<Int> order() const;
    /// Image of an ambient vector: torsion coordinates reduced into [0, d_i),
    /// then free coordinates.
    IntVec project(const IntVec& v) const;
    /// The free part of project(v) only.
    IntVec project_free(const IntVec& v) const;
};

/// Basis of {v : m v = 0} as a sublattice of Z^cols. The result is saturated
/// (the kernel of an integer matrix always is).
Sublattice kernel_basis(const IntMatrix& m);

/// Structure of Z^rows / (column span of m).
FinAbGroup cokernel(const IntMatrix& m);

/// Inverse of a unimodular matrix (exact).
IntMatrix inverse_unimodular(const IntMatrix& u);

}  // namespace knroot
