#pragma once

#include <memory>

#include "knroot/lattice.hpp"

namespace knroot {

/// A face of a cone, recorded combinatorially.
struct FaceDescriptor {
    /// Indices (into the cone's ray list) of exactly the rays on the face.
    std::vector<std::size_t> ray_indices;
    std::size_t dim = 0;
    /// Indices of the facets that are tight on the whole face; the face is
    /// cone ∩ {⟨h_j, ·⟩ = 0 : j in tight_facets}.
    std::vector<std::size_t> tight_facets;

    bool operator==(const FaceDescriptor& rhs) const {
        return ray_indices == rhs.ray_indices && dim == rhs.dim;
    }
};

/// Rational polyhedral cone with both descriptions. Rays are primitive,
/// deduplicated and lexicographically sorted; facet normals are primitive
/// inward normals in lexicographic order (linear-span equations appear as
/// +/- pairs of normals). Immutable after construction.
class RationalCone {
public:
    RationalCone() = default;

    /// Builds the cone and its dual description. Throws ResourceLimitError
    /// when ambient_dim > 6.
    static RationalCone from_rays(std::size_t ambient_dim, std::vector<IntVec> rays);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t ray_count() const { return rays_.rows(); }
    const IntMatrix& rays() const { return rays_; }
    IntVec ray(std::size_t i) const { return rays_.row(i); }
    const IntMatrix& facets() const { return facets_; }

    bool contains(const IntVec& v) const;
    /// Dimension of the linear span of the cone.
    std::size_t dim() const { return dim_; }
    bool is_pointed() const { return pointed_; }

    /// All faces ({0} included iff pointed, the cone itself always), sorted
    /// by (dim, ray set).
    const std::vector<FaceDescriptor>& faces() const { return *faces_; }

    /// A grading that is positive on every nonzero lattice point of the cone
    /// when the cone is pointed (sum of all facet normals).
    IntVec positive_grading() const;

    bool operator==(const RationalCone& rhs) const {
        return ambient_ == rhs.ambient_ && rays_ == rhs.rays_;
    }

private:
    std::size_t ambient_ = 0;
    IntMatrix rays_;    // rows
    IntMatrix facets_;  // rows
    std::size_t dim_ = 0;
    bool pointed_ = true;
    std::shared_ptr<const std::vector<FaceDescriptor>> faces_;
};

/// Facet normals of cone(rays): primitive vectors H with
/// cone = {v : ⟨h, v⟩ >= 0 for all h in H}, lexicographically sorted.
/// Incremental double description on the dual side.
IntMatrix dual_description(std::size_t ambient_dim, const IntMatrix& rays);

/// Unique minimal generating set of cone ∩ Z^d for a pointed cone, sorted
/// lexicographically. Throws NotPointedError / ResourceLimitError.
std::vector<IntVec> hilbert_basis(const RationalCone& cone);

}  // namespace knroot
