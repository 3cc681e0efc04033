#pragma once

#include "knroot/points.hpp"
#include "knroot/report.hpp"

namespace knroot {

/// Element of mu_n(P): a character of (1/n)P^gp trivial on the image of
/// P^gp, recorded exactly by residues t mod n on the HNF basis (the value on
/// a lattice element with coordinates c is e^{2 pi i <t, c> / n}).
struct MuElement {
    IntVec residues;  // each in [0, n)
};

/// Subgroup of mu_n(P) (stabilizers), with its abelian-group structure.
struct MuSubgroup {
    Int order = 1;
    std::vector<Int> invariant_factors;  // d_1 | d_2 | ..., each >= 2
    std::vector<MuElement> elements;     // present iff enumerated
    bool enumerated = false;
};

/// mu_n(P): the character group of coker(P^gp -> (1/n)P^gp). Full element
/// enumeration only when n^rank <= 10^4; otherwise generators only.
struct MuN {
    AffineMonoid monoid;
    long long level = 1;
    FinAbGroup group;
    std::vector<MuElement> elements;  // all elements, or generators when not enumerated
    bool enumerated = false;
    Int order = 1;
};

MuN mu_n(const AffineMonoid& p, long long n);
MuElement mu_mul(const MuN& mu, const MuElement& a, const MuElement& b);
/// <t, coords> mod n — the exact numerator of the character angle over 2pi/n.
Int mu_pairing(long long n, const MuElement& g, const IntVec& coords);

/// A lift of a C(P)-point to C((1/n)P), kept in the root's own coordinates
/// (where (1/n)P is P again).
struct RootFiberPoint {
    CPoint point;  // on (1/n)P
    CPoint base;   // on P
    long long level = 1;
};

struct RootFiber {
    std::vector<RootFiberPoint> transversal;  // the full mu_n-orbit of lifts
    MuSubgroup stabilizer;
};

/// All lifts of x to C((1/n)P) with support the corresponding face, plus the
/// stabilizer of any of them. |transversal| = n^rank(F^gp) and
/// |stabilizer| = n^(rank P^gp - rank F^gp).
RootFiber root_fiber(const AffineMonoid& p, long long n, const CPoint& x);

/// Twist a lift by a character; the base point is unchanged.
RootFiberPoint mu_act(const MuN& mu, const MuElement& g, const RootFiberPoint& pt);

/// Stabilizer of any lift supported on the given face.
MuSubgroup mu_stabilizer(const AffineMonoid& p, long long n, std::size_t face);

/// Records the mu_n-ambiguity of phi_n: the output is well defined as an
/// orbit of size orbit_size with the given stabilizer; changing the Cbar
/// lift by k in Z(P) twists the representative by the character k mod n.
struct MuOrbitCertificate {
    long long level = 1;
    Int orbit_size = 1;
    MuSubgroup stabilizer;
};

struct PhiResult {
    RootFiberPoint point;  // canonical representative (principal lift)
    MuOrbitCertificate ambiguity;
};

/// The comparison map at level n: lift k to Cbar(P) (principal lift), scale
/// by 1/n, read the exponential as a point of C((1/n)P).
PhiResult phi_n(const KNPoint& k, long long n);

/// Restriction along (1/n)P ⊆ (1/m)P for n | m: multiplies hom data by m/n.
RootFiberPoint tower_project(const RootFiberPoint& pt, long long n);

/// The character g with g . a = b (same mu_n-orbit), if one exists within
/// tolerance; exact congruence solve on the rounded angle differences.
std::optional<MuElement> connecting_character(const RootFiberPoint& a, const RootFiberPoint& b,
                                              double tol);

/// Whether the lift restricts along i_n to its base (within tolerance).
bool root_fiber_point_consistent(const RootFiberPoint& pt, double tol);

/// exp = (n-th power) after f_n, checked on generator values of random
/// Cbar-points.
VerificationReport verify_factorization(const AffineMonoid& p, long long n, std::size_t samples,
                                        std::uint64_t seed, double tol);

/// tower_project(phi_m(k)) lands in the mu_n-orbit of phi_n(k) for n | m.
VerificationReport verify_tower(const AffineMonoid& p,
                                const std::vector<std::pair<long long, long long>>& pairs,
                                std::size_t samples, std::uint64_t seed, double tol);

/// Pointwise commuting-cube check: the route lift -> translate by Z(P) ->
/// scale by 1/n -> exp agrees, as a mu_n-orbit, with phi_n, and both project
/// to the base point at level 1. `wrong_scale` scales by 1/(n+1) instead
/// (negative control).
VerificationReport verify_cube(const AffineMonoid& p, long long n, std::size_t samples,
                               std::uint64_t seed, double tol, bool wrong_scale = false);

}  // namespace knroot
