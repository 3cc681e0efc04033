#pragma once

#include "knroot/points.hpp"
#include "knroot/report.hpp"

namespace knroot {

/// Fiber of tau over a point of C(P): a torus of dimension
/// rank P^gp - rank F^gp, represented by the quotient-lattice data plus
/// finitely many sampled points that all project to the base.
struct TorusFiber {
    CPoint base;
    std::size_t rank = 0;
    FinAbGroup lattice;  // P^gp / F^gp with its projection
    std::vector<KNPoint> samples;
};

/// Sample the tau-fiber over x. Every sample satisfies tau(sample) = x
/// structurally: the support face and moduli are copied, and the character
/// twists vanish on F^gp exactly. The torus identification is not canonical:
/// extending x's character to P^gp picks the complement singled out by the
/// Smith decomposition of F^gp ⊆ P^gp, and a different complement would
/// relabel sample coordinates without changing rank or fiber membership.
TorusFiber kn_fiber(const AffineMonoid& p, const CPoint& x, std::size_t samples,
                    std::uint64_t seed);

/// Pointwise check of the chart description of the KN local model as the
/// quotient of Cbar(P) by 2*pi*i*Z(P):
///   (a) the quotient map is Z(P)-invariant, and two Cbar-points with the
///       same image differ by an element of 2*pi*i*Z(P);
///   (b) every sampled KN point lifts to Cbar(P);
///   (c) tau after the quotient map equals exp.
/// `perturb`, when nonzero, injects an angle error into each lift; the
/// report must then flag it (negative control).
VerificationReport verify_chart_cartesian(const AffineMonoid& p, std::size_t samples,
                                          std::uint64_t seed, double tol,
                                          double perturb = 0.0);

}  // namespace knroot
