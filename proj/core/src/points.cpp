#include "knroot/points.hpp"

#include <cmath>
#include <numbers>

#include "knroot/errors.hpp"

namespace knroot {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

double to_double(const Int& x) { return x.convert_to<double>(); }

void check_face(const AffineMonoid& m, std::size_t face) {
    if (face >= m.face_count()) throw Error("face index out of range");
}
}  // namespace

double normalize_angle(double a) {
    double b = std::fmod(a, two_pi);
    if (b < 0) b += two_pi;
    if (b >= two_pi) b = 0.0;
    return b;
}

bool angle_close(double a, double b, double tol) {
    double d = std::fabs(normalize_angle(a) - normalize_angle(b));
    return d <= tol || std::fabs(d - two_pi) <= tol;
}

double Character::angle_at(const IntVec& v) const {
    auto c = lattice.coordinates(v);
    if (!c) throw MembershipError("character: element outside the lattice");
    double a = 0;
    for (std::size_t i = 0; i < angles.size(); ++i) a += to_double((*c)[i]) * angles[i];
    return normalize_angle(a);
}

std::complex<double> Character::value_at(const IntVec& v) const {
    return std::polar(1.0, angle_at(v));
}

Character make_character(Sublattice lattice, std::vector<double> angles) {
    if (angles.size() != lattice.rank()) throw Error("character: angle count != lattice rank");
    for (double& a : angles) a = normalize_angle(a);
    return Character{std::move(lattice), std::move(angles)};
}

CPoint make_cpoint(AffineMonoid monoid, std::size_t face, std::vector<double> modulus,
                   std::vector<double> angles) {
    check_face(monoid, face);
    const MonoidFace& f = monoid.face(face);
    if (modulus.size() != f.gp.rank()) throw Error("cpoint: modulus size != rank F^gp");
    Character ch = make_character(f.gp, std::move(angles));
    return CPoint{std::move(monoid), face, std::move(modulus), std::move(ch)};
}

CBarPoint make_cbar_point(AffineMonoid monoid, std::size_t face, std::vector<double> u,
                          std::vector<double> v) {
    check_face(monoid, face);
    if (u.size() != monoid.face(face).gp.rank()) throw Error("cbar: u size != rank F^gp");
    if (v.size() != monoid.groupification().rank()) throw Error("cbar: v size != rank P^gp");
    return CBarPoint{std::move(monoid), face, std::move(u), std::move(v)};
}

KNPoint make_kn_point(AffineMonoid monoid, std::size_t face, std::vector<double> log_modulus,
                      std::vector<double> sigma_angles) {
    check_face(monoid, face);
    if (log_modulus.size() != monoid.face(face).gp.rank())
        throw Error("kn: log_modulus size != rank F^gp");
    Character sigma = make_character(monoid.groupification(), std::move(sigma_angles));
    return KNPoint{std::move(monoid), face, std::move(log_modulus), std::move(sigma)};
}

CPlusElement make_cplus(AffineMonoid monoid, std::vector<double> re, std::vector<double> im) {
    const std::size_t r = monoid.groupification().rank();
    if (re.size() != r || im.size() != r) throw Error("cplus: size != rank P^gp");
    return CPlusElement{std::move(monoid), std::move(re), std::move(im)};
}

double functional_at(const Sublattice& lattice, const std::vector<double>& values,
                     const IntVec& v) {
    auto c = lattice.coordinates(v);
    if (!c) throw MembershipError("functional: element outside the lattice");
    double s = 0;
    for (std::size_t i = 0; i < values.size(); ++i) s += to_double((*c)[i]) * values[i];
    return s;
}

std::complex<double> eval_c(const CPoint& x, const IntVec& p) {
    if (!x.monoid.lattice_cone_member(p))
        throw MembershipError("eval_c: element fails the cone/lattice membership check");
    if (!x.monoid.face_contains(x.face, p)) return {0.0, 0.0};
    const MonoidFace& f = x.monoid.face(x.face);
    double logmod = functional_at(f.gp, x.modulus, p);
    double arg = x.character.angle_at(p);
    return std::polar(std::exp(logmod), arg);
}

CBarValue eval_cbar(const CBarPoint& x, const IntVec& p) {
    if (!x.monoid.lattice_cone_member(p))
        throw MembershipError("eval_cbar: element fails the cone/lattice membership check");
    CBarValue out;
    out.arg = functional_at(x.monoid.groupification(), x.v, p);
    if (x.monoid.face_contains(x.face, p))
        out.log_part = functional_at(x.monoid.face(x.face).gp, x.u, p);
    return out;
}

std::vector<double> restrict_to_face(const AffineMonoid& p, std::size_t face,
                                     const std::vector<double>& on_gp) {
    const MonoidFace& f = p.face(face);
    std::vector<double> out(f.gp.rank());
    for (std::size_t i = 0; i < f.gp.rank(); ++i) {
        auto c = p.groupification().coordinates(f.gp.basis_vector(i));
        if (!c) throw Error("face group not contained in P^gp");
        double s = 0;
        for (std::size_t j = 0; j < on_gp.size(); ++j) s += to_double((*c)[j]) * on_gp[j];
        out[i] = s;
    }
    return out;
}

std::vector<double> extend_face_functional(const AffineMonoid& p, std::size_t face,
                                           const std::vector<double>& on_face) {
    const MonoidFace& f = p.face(face);
    const std::size_t r = p.groupification().rank();
    const std::size_t rf = f.gp.rank();
    if (on_face.size() != rf) throw Error("extend: size != rank F^gp");
    if (rf == 0) return std::vector<double>(r, 0.0);

    IntMatrix c(r, rf);
    for (std::size_t j = 0; j < rf; ++j) {
        auto coord = p.groupification().coordinates(f.gp.basis_vector(j));
        if (!coord) throw Error("face group not contained in P^gp");
        for (std::size_t i = 0; i < r; ++i) c.at(i, j) = (*coord)[i];
    }
    SnfResult s = snf(c);
    // In the transformed coordinates w = U * coords, F^gp is spanned by
    // d_i * e_i; extend by zero on the remaining coordinates.
    std::vector<double> theta(rf, 0.0);  // on-face values on the V-transformed basis
    for (std::size_t j = 0; j < rf; ++j)
        for (std::size_t i = 0; i < rf; ++i)
            theta[j] += to_double(s.v.at(i, j)) * on_face[i];
    std::vector<double> tilde(r, 0.0);
    for (std::size_t i = 0; i < rf; ++i) tilde[i] = theta[i] / to_double(s.d.at(i, i));
    std::vector<double> out(r, 0.0);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t i = 0; i < r; ++i) out[k] += tilde[i] * to_double(s.u.at(i, k));
    return out;
}

CPoint exp_point(const CBarPoint& x) {
    return make_cpoint(x.monoid, x.face, x.u, restrict_to_face(x.monoid, x.face, x.v));
}

CBarPoint cplus_act(const CPlusElement& g, const CBarPoint& x) {
    if (!(g.monoid == x.monoid)) throw MismatchError("cplus_act: different monoids");
    std::vector<double> re_f = restrict_to_face(x.monoid, x.face, g.re);
    CBarPoint out = x;
    for (std::size_t i = 0; i < out.u.size(); ++i) out.u[i] += re_f[i];
    for (std::size_t j = 0; j < out.v.size(); ++j) out.v[j] += g.im[j];
    return out;
}

KNPoint cbar_to_kn(const CBarPoint& x) { return make_kn_point(x.monoid, x.face, x.u, x.v); }

CBarPoint scale(const CBarPoint& x, double r) {
    if (!(r > 0)) throw Error("scale: factor must be positive");
    CBarPoint out = x;
    for (double& a : out.u) a *= r;
    for (double& a : out.v) a *= r;
    return out;
}

std::optional<CPlusElement> same_orbit_cplus(const CBarPoint& x, const CBarPoint& y) {
    if (!(x.monoid == y.monoid)) throw MismatchError("same_orbit_cplus: different monoids");
    if (x.face != y.face) return std::nullopt;
    std::vector<double> du(x.u.size());
    for (std::size_t i = 0; i < du.size(); ++i) du[i] = y.u[i] - x.u[i];
    std::vector<double> im(x.v.size());
    for (std::size_t j = 0; j < im.size(); ++j) im[j] = y.v[j] - x.v[j];
    return make_cplus(x.monoid, extend_face_functional(x.monoid, x.face, du), std::move(im));
}

CPoint tau(const KNPoint& k) {
    return make_cpoint(k.monoid, k.face, k.log_modulus,
                       restrict_to_face(k.monoid, k.face, k.sigma.angles));
}

CBarPoint lift_kn(const KNPoint& k) {
    return make_cbar_point(k.monoid, k.face, k.log_modulus, k.sigma.angles);
}

bool cpoint_close(const CPoint& a, const CPoint& b, double tol) {
    if (!(a.monoid == b.monoid) || a.face != b.face) return false;
    for (std::size_t i = 0; i < a.modulus.size(); ++i)
        if (std::fabs(a.modulus[i] - b.modulus[i]) > tol) return false;
    for (std::size_t i = 0; i < a.character.angles.size(); ++i)
        if (!angle_close(a.character.angles[i], b.character.angles[i], tol)) return false;
    return true;
}

bool kn_close(const KNPoint& a, const KNPoint& b, double tol) {
    if (!(a.monoid == b.monoid) || a.face != b.face) return false;
    for (std::size_t i = 0; i < a.log_modulus.size(); ++i)
        if (std::fabs(a.log_modulus[i] - b.log_modulus[i]) > tol) return false;
    for (std::size_t i = 0; i < a.sigma.angles.size(); ++i)
        if (!angle_close(a.sigma.angles[i], b.sigma.angles[i], tol)) return false;
    return true;
}

bool cbar_close(const CBarPoint& a, const CBarPoint& b, double tol) {
    if (!(a.monoid == b.monoid) || a.face != b.face) return false;
    for (std::size_t i = 0; i < a.u.size(); ++i)
        if (std::fabs(a.u[i] - b.u[i]) > tol) return false;
    for (std::size_t i = 0; i < a.v.size(); ++i)
        if (std::fabs(a.v[i] - b.v[i]) > tol) return false;
    return true;
}

}  // namespace knroot
