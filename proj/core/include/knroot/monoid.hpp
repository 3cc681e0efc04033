#pragma once

#include <memory>

#include "knroot/cone.hpp"

namespace knroot {

/// A face of an affine monoid: the submonoid of elements lying on a face of
/// its cone.
struct MonoidFace {
    FaceDescriptor descriptor;                  // face of the monoid's cone
    std::vector<std::size_t> generator_indices; // monoid generators on the face
    Sublattice gp;                              // group generated by the face
};

struct CharStalk;

/// Finitely generated submonoid of Z^d, given by its generator matrix
/// (columns are generators). Canonical form: generators nonzero, distinct,
/// sorted lexicographically. Fine and torsion-free by construction.
/// Cheap to copy; the cone/face caches are shared between copies.
class AffineMonoid {
public:
    AffineMonoid() = default;

    static AffineMonoid from_generators(std::size_t ambient_dim, std::vector<IntVec> gens);

    std::size_t ambient_dim() const;
    std::size_t generator_count() const;
    /// ambient_dim x generator_count, columns are the generators.
    const IntMatrix& generators() const;
    IntVec generator(std::size_t i) const;

    /// P^gp: the sublattice of Z^d spanned by the generators.
    const Sublattice& groupification() const;
    const RationalCone& cone() const;

    bool is_sharp() const;
    /// Structural: finitely generated submonoids of Z^d are always fine.
    bool is_fine() const { return true; }
    /// Exact test P == P^gp ∩ cone(P) (works for non-sharp monoids too).
    bool is_saturated() const;
    /// Saturation P^gp ∩ cone(P); requires P sharp.
    AffineMonoid saturate() const;

    /// All faces, aligned with cone().faces() (requires P sharp).
    const std::vector<MonoidFace>& faces() const;
    const MonoidFace& face(std::size_t i) const { return faces()[i]; }
    std::size_t face_count() const { return faces().size(); }
    /// Index of the trivial face {0} and of P itself.
    std::size_t trivial_face_index() const;
    std::size_t full_face_index() const;
    /// Face with exactly the given generator set, if any.
    std::optional<std::size_t> find_face(const std::vector<std::size_t>& generator_indices) const;

    /// Kernel of the generator map Z^r -> Z^d. A homomorphism from the
    /// generators into any commutative group descends to P^gp iff it kills
    /// this lattice.
    Sublattice relation_lattice() const;

    /// Membership precondition used by point evaluation: v ∈ cone(P) ∩ P^gp.
    bool lattice_cone_member(const IntVec& v) const;
    /// Exact monoid membership (v is a sum of generators).
    bool is_member(const IntVec& v) const;
    /// v lies on the given face: v is tight on the face's facets and belongs
    /// to the face's group.
    bool face_contains(std::size_t face_index, const IntVec& v) const;

    /// The sharp quotient P/F in the lattice P^gp/F^gp. Throws TorsionError
    /// if the lattice quotient has torsion (non-saturated input).
    CharStalk char_stalk(std::size_t face_index) const;

    bool operator==(const AffineMonoid& rhs) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// Sharp quotient P/F with the quotient lattice data.
struct CharStalk {
    AffineMonoid quotient;   // affine monoid in Z^{rank P^gp - rank F^gp}
    FinAbGroup quotient_gp;  // P^gp / F^gp with its projection (free here)
};

/// (1/n)P together with the inclusion P -> (1/n)P. In the root's own
/// coordinates the monoid is P again and the inclusion multiplies by n.
struct KummerRootResult {
    AffineMonoid root;
    IntMatrix inclusion;  // ambient_dim x ambient_dim, equals n * I
    long long level = 1;
};

KummerRootResult kummer_root(const AffineMonoid& p, long long n);

/// Generators of P expressed in the HNF basis of P^gp (one column each).
IntMatrix generators_in_gp_coordinates(const AffineMonoid& p);

}  // namespace knroot
