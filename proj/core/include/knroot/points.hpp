#pragma once

#include <complex>

#include "knroot/monoid.hpp"

namespace knroot {

/// Reduce an angle into [0, 2*pi).
double normalize_angle(double a);
/// Angle equality mod 2*pi within tol.
bool angle_close(double a, double b, double tol);

/// Homomorphism from a sublattice to S^1, stored as angles (radians,
/// normalized into [0, 2*pi)) on the HNF basis of the lattice.
struct Character {
    Sublattice lattice;
    std::vector<double> angles;

    /// Angle at a lattice element (throws MembershipError if v is outside).
    double angle_at(const IntVec& v) const;
    std::complex<double> value_at(const IntVec& v) const;
};

Character make_character(Sublattice lattice, std::vector<double> angles);

/// Point of C(P) = Hom(P, C): support face F plus a hom on F^gp, split into
/// log-moduli and angles on the HNF basis of F^gp. The value is 0 off the
/// face; -infinity never appears numerically, the support face encodes it.
struct CPoint {
    AffineMonoid monoid;
    std::size_t face = 0;
    std::vector<double> modulus;  // log|x| on the F^gp basis
    Character character;          // on F^gp
};

CPoint make_cpoint(AffineMonoid monoid, std::size_t face, std::vector<double> modulus,
                   std::vector<double> angles);

/// Point of Cbar(P) = Hom(P, ({-inf} ∪ R) x R). The first coordinate is
/// -infinity exactly off the support face, so u lives on F^gp; the second
/// coordinate v is an honest real hom on all of P^gp.
struct CBarPoint {
    AffineMonoid monoid;
    std::size_t face = 0;
    std::vector<double> u;  // on the F^gp basis
    std::vector<double> v;  // on the P^gp basis
};

CBarPoint make_cbar_point(AffineMonoid monoid, std::size_t face, std::vector<double> u,
                          std::vector<double> v);

/// Point of the Kato-Nakayama local model Hom(P, R_{>=0} x S^1): a
/// non-negative real hom with support F (stored as logs on F^gp) and a
/// circle-valued character on all of P^gp.
struct KNPoint {
    AffineMonoid monoid;
    std::size_t face = 0;
    std::vector<double> log_modulus;  // on the F^gp basis
    Character sigma;                  // on P^gp
};

KNPoint make_kn_point(AffineMonoid monoid, std::size_t face, std::vector<double> log_modulus,
                      std::vector<double> sigma_angles);

/// Element of C^+(P) = Hom(P, C^+), the translation group.
struct CPlusElement {
    AffineMonoid monoid;
    std::vector<double> re;  // on the P^gp basis
    std::vector<double> im;
};

CPlusElement make_cplus(AffineMonoid monoid, std::vector<double> re, std::vector<double> im);

/// Value of a Cbar-point at a monoid element: log_part is empty for
/// -infinity (element off the support face).
struct CBarValue {
    std::optional<double> log_part;
    double arg = 0.0;
    bool neg_infinity() const { return !log_part.has_value(); }
};

/// Evaluate a C(P)-point at p (requires p in cone(P) ∩ P^gp).
std::complex<double> eval_c(const CPoint& x, const IntVec& p);
/// Evaluate a Cbar(P)-point at p.
CBarValue eval_cbar(const CBarPoint& x, const IntVec& p);

/// exp: Cbar(P) -> C(P), (u, v) -> e^{u + iv}, with e^{-inf + iy} = 0
/// encoded by the support face.
CPoint exp_point(const CBarPoint& x);

/// Translation action of C^+(P): u += Re(g)|_F, v += Im(g).
CBarPoint cplus_act(const CPlusElement& g, const CBarPoint& x);

/// Quotient map Cbar(P) -> Hom(P, R_{>=0} x S^1): keep u, reduce v mod 2*pi.
KNPoint cbar_to_kn(const CBarPoint& x);

/// Real scaling (u, v) -> (r*u, r*v); an isomorphism for every r > 0.
CBarPoint scale(const CBarPoint& x, double r);

/// The canonical g with g·x = y when x and y share a support face
/// (real part extended by zero off the face), nullopt otherwise.
std::optional<CPlusElement> same_orbit_cplus(const CBarPoint& x, const CBarPoint& y);

/// Projection (rho, sigma) -> rho * sigma|_F from the KN model to C(P).
CPoint tau(const KNPoint& k);

/// Principal lift of a KN point to Cbar(P): v-components are the stored
/// sigma angles in [0, 2*pi).
CBarPoint lift_kn(const KNPoint& k);

/// Value of a real functional stored on the HNF basis of `lattice` at v.
double functional_at(const Sublattice& lattice, const std::vector<double>& values,
                     const IntVec& v);

/// Restrict a functional on the P^gp basis to the F^gp basis.
std::vector<double> restrict_to_face(const AffineMonoid& p, std::size_t face,
                                     const std::vector<double>& on_gp);

/// Canonical extension of a functional on the F^gp basis to the P^gp basis:
/// zero on the complement singled out by the Smith decomposition of
/// F^gp ⊆ P^gp. Linear in the input.
std::vector<double> extend_face_functional(const AffineMonoid& p, std::size_t face,
                                           const std::vector<double>& on_face);

bool cpoint_close(const CPoint& a, const CPoint& b, double tol);
bool kn_close(const KNPoint& a, const KNPoint& b, double tol);
bool cbar_close(const CBarPoint& a, const CBarPoint& b, double tol);

}  // namespace knroot
