#pragma once

#include "knroot/points.hpp"
#include "knroot/rng.hpp"

namespace knroot {

/// Random Cbar-point: uniform support face, u in [-2, 2), v in [-8, 8).
CBarPoint sample_cbar(const AffineMonoid& p, Rng& rng);
CBarPoint sample_cbar_on_face(const AffineMonoid& p, std::size_t face, Rng& rng);

/// Random KN point: uniform support face, log-moduli in [-2, 2), angles
/// in [0, 2*pi).
KNPoint sample_kn(const AffineMonoid& p, Rng& rng);
KNPoint sample_kn_on_face(const AffineMonoid& p, std::size_t face, Rng& rng);

/// Random C(P)-point on a given face.
CPoint sample_cpoint_on_face(const AffineMonoid& p, std::size_t face, Rng& rng);

/// Random element of Hom(P^gp, Z) with entries in [-bound, bound].
IntVec sample_integral_hom(const AffineMonoid& p, Rng& rng, long long bound = 3);

}  // namespace knroot
