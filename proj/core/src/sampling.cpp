#include "knroot/sampling.hpp"

#include <numbers>

namespace knroot {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

CBarPoint sample_cbar_on_face(const AffineMonoid& p, std::size_t face, Rng& rng) {
    const std::size_t rf = p.face(face).gp.rank();
    const std::size_t r = p.groupification().rank();
    std::vector<double> u(rf), v(r);
    for (double& x : u) x = rng.uniform(-2.0, 2.0);
    for (double& x : v) x = rng.uniform(-8.0, 8.0);
    return make_cbar_point(p, face, std::move(u), std::move(v));
}

CBarPoint sample_cbar(const AffineMonoid& p, Rng& rng) {
    return sample_cbar_on_face(p, rng.index(p.face_count()), rng);
}

KNPoint sample_kn_on_face(const AffineMonoid& p, std::size_t face, Rng& rng) {
    const std::size_t rf = p.face(face).gp.rank();
    const std::size_t r = p.groupification().rank();
    std::vector<double> lm(rf), ang(r);
    for (double& x : lm) x = rng.uniform(-2.0, 2.0);
    for (double& x : ang) x = rng.uniform(0.0, two_pi);
    return make_kn_point(p, face, std::move(lm), std::move(ang));
}

KNPoint sample_kn(const AffineMonoid& p, Rng& rng) {
    return sample_kn_on_face(p, rng.index(p.face_count()), rng);
}

CPoint sample_cpoint_on_face(const AffineMonoid& p, std::size_t face, Rng& rng) {
    const std::size_t rf = p.face(face).gp.rank();
    std::vector<double> lm(rf), ang(rf);
    for (double& x : lm) x = rng.uniform(-2.0, 2.0);
    for (double& x : ang) x = rng.uniform(0.0, two_pi);
    return make_cpoint(p, face, std::move(lm), std::move(ang));
}

IntVec sample_integral_hom(const AffineMonoid& p, Rng& rng, long long bound) {
    IntVec z(p.groupification().rank());
    for (Int& x : z) x = rng.integer(-bound, bound);
    return z;
}

}  // namespace knroot
