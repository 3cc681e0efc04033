#include "knroot/rootstack.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "knroot/io.hpp"
#include "knroot/sampling.hpp"

namespace knroot {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
const Int kEnumerationLimit = 10000;

Int int_pow(long long base, std::size_t exp) {
    Int r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

// Residue vectors in [0, n)^len, lexicographic.
std::vector<IntVec> enumerate_residues(std::size_t len, long long n) {
    std::vector<IntVec> out;
    IntVec t(len);
    while (true) {
        out.push_back(t);
        std::size_t pos = len;
        while (pos > 0) {
            --pos;
            ++t[pos];
            if (t[pos] < n) break;
            t[pos] = 0;
            if (pos == 0) return out;
        }
        if (len == 0) return out;
    }
}

// F^gp basis expressed in P^gp coordinates, one column per basis vector.
IntMatrix face_in_gp_coordinates(const AffineMonoid& p, std::size_t face) {
    const Sublattice& gp = p.groupification();
    const Sublattice& fgp = p.face(face).gp;
    IntMatrix c(gp.rank(), fgp.rank());
    for (std::size_t j = 0; j < fgp.rank(); ++j) {
        auto coord = gp.coordinates(fgp.basis_vector(j));
        if (!coord) throw Error("face group not contained in P^gp");
        for (std::size_t i = 0; i < gp.rank(); ++i) c.at(i, j) = (*coord)[i];
    }
    return c;
}

}  // namespace

MuN mu_n(const AffineMonoid& p, long long n) {
    if (n < 1) throw Error("mu_n: n must be >= 1");
    const std::size_t r = p.groupification().rank();
    IntMatrix incl(r, r);
    for (std::size_t i = 0; i < r; ++i) incl.at(i, i) = n;

    MuN mu;
    mu.monoid = p;
    mu.level = n;
    mu.group = cokernel(incl);
    mu.order = int_pow(n, r);
    if (mu.order <= kEnumerationLimit) {
        mu.enumerated = true;
        for (IntVec& t : enumerate_residues(r, n)) mu.elements.push_back(MuElement{std::move(t)});
    } else {
        mu.enumerated = false;
        for (std::size_t i = 0; i < r; ++i) {
            IntVec t(r);
            t[i] = 1;
            mu.elements.push_back(MuElement{std::move(t)});
        }
    }
    return mu;
}

MuElement mu_mul(const MuN& mu, const MuElement& a, const MuElement& b) {
    IntVec t = vec_add(a.residues, b.residues);
    for (Int& x : t) x %= mu.level;
    return MuElement{std::move(t)};
}

Int mu_pairing(long long n, const MuElement& g, const IntVec& coords) {
    Int s = dot(g.residues, coords) % n;
    if (s < 0) s += n;
    return s;
}

MuSubgroup mu_stabilizer(const AffineMonoid& p, long long n, std::size_t face) {
    const std::size_t r = p.groupification().rank();
    const IntMatrix c = face_in_gp_coordinates(p, face);
    const std::size_t rf = c.cols();

    // Lattice {t : c^T t = 0 mod n}, as the projection of the kernel of
    // [c^T | n I] onto the t-part.
    IntMatrix aug(rf, r + rf);
    for (std::size_t i = 0; i < rf; ++i) {
        for (std::size_t j = 0; j < r; ++j) aug.at(i, j) = c.at(j, i);
        aug.at(i, r + i) = n;
    }
    Sublattice ker = kernel_basis(aug);
    std::vector<IntVec> tpart;
    for (std::size_t i = 0; i < ker.rank(); ++i) {
        IntVec full = ker.basis_vector(i);
        tpart.push_back(IntVec(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(r)));
    }
    Sublattice h = Sublattice::from_generators(r, tpart);

    // Structure of h / nZ^r: present nZ^r in the basis of h.
    IntMatrix pres(h.rank(), r);
    for (std::size_t k = 0; k < r; ++k) {
        IntVec ne(r);
        ne[k] = n;
        auto coord = h.coordinates(ne);
        if (!coord) throw Error("mu_stabilizer: nZ^r not inside the stabilizer lattice");
        for (std::size_t i = 0; i < h.rank(); ++i) pres.at(i, k) = (*coord)[i];
    }
    FinAbGroup structure = cokernel(pres);
    if (structure.free_rank != 0) throw Error("mu_stabilizer: quotient unexpectedly infinite");

    MuSubgroup sub;
    sub.invariant_factors = structure.invariant_factors;
    sub.order = *structure.order();
    if (int_pow(n, r) <= kEnumerationLimit) {
        sub.enumerated = true;
        for (IntVec& t : enumerate_residues(r, n)) {
            bool fixes = true;
            for (std::size_t j = 0; j < rf && fixes; ++j)
                if (mu_pairing(n, MuElement{t}, c.col(j)) != 0) fixes = false;
            if (fixes) sub.elements.push_back(MuElement{std::move(t)});
        }
        if (Int(sub.elements.size()) != sub.order)
            throw Error("mu_stabilizer: enumeration disagrees with structure");
    }
    return sub;
}

RootFiber root_fiber(const AffineMonoid& p, long long n, const CPoint& x) {
    if (n < 1) throw Error("root_fiber: n must be >= 1");
    const MonoidFace& f = p.face(x.face);
    const std::size_t rf = f.gp.rank();
    Int orbit = int_pow(n, rf);
    if (orbit > kEnumerationLimit) throw ResourceLimitError("root_fiber: orbit too large");

    RootFiber out;
    for (const IntVec& s : enumerate_residues(rf, n)) {
        std::vector<double> mod(rf), ang(rf);
        for (std::size_t i = 0; i < rf; ++i) {
            mod[i] = x.modulus[i] / static_cast<double>(n);
            ang[i] = (x.character.angles[i] +
                      two_pi * s[i].convert_to<double>()) / static_cast<double>(n);
        }
        RootFiberPoint pt;
        pt.point = make_cpoint(p, x.face, std::move(mod), std::move(ang));
        pt.base = x;
        pt.level = n;
        out.transversal.push_back(std::move(pt));
    }
    out.stabilizer = mu_stabilizer(p, n, x.face);
    return out;
}

RootFiberPoint mu_act(const MuN& mu, const MuElement& g, const RootFiberPoint& pt) {
    if (mu.level != pt.level) throw MismatchError("mu_act: level mismatch");
    if (!(mu.monoid == pt.point.monoid)) throw MismatchError("mu_act: monoid mismatch");
    const IntMatrix c = face_in_gp_coordinates(pt.point.monoid, pt.point.face);
    std::vector<double> ang = pt.point.character.angles;
    for (std::size_t j = 0; j < ang.size(); ++j) {
        Int num = mu_pairing(mu.level, g, c.col(j));
        ang[j] = ang[j] + two_pi * num.convert_to<double>() / static_cast<double>(mu.level);
    }
    RootFiberPoint out = pt;
    out.point = make_cpoint(pt.point.monoid, pt.point.face, pt.point.modulus, std::move(ang));
    return out;
}

PhiResult phi_n(const KNPoint& k, long long n) {
    if (n < 1) throw Error("phi_n: n must be >= 1");
    CBarPoint lift = lift_kn(k);
    CBarPoint scaled = scale(lift, 1.0 / static_cast<double>(n));

    PhiResult out;
    out.point.point = exp_point(scaled);
    out.point.base = tau(k);
    out.point.level = n;
    out.ambiguity.level = n;
    out.ambiguity.orbit_size = int_pow(n, k.monoid.face(k.face).gp.rank());
    out.ambiguity.stabilizer = mu_stabilizer(k.monoid, n, k.face);
    return out;
}

RootFiberPoint tower_project(const RootFiberPoint& pt, long long n) {
    if (n < 1 || pt.level % n != 0)
        throw MismatchError("tower_project: target level must divide the source level");
    const long long f = pt.level / n;
    std::vector<double> mod = pt.point.modulus;
    std::vector<double> ang = pt.point.character.angles;
    for (double& m : mod) m *= static_cast<double>(f);
    for (double& a : ang) a *= static_cast<double>(f);
    RootFiberPoint out;
    out.point = make_cpoint(pt.point.monoid, pt.point.face, std::move(mod), std::move(ang));
    out.base = pt.base;
    out.level = n;
    return out;
}

std::optional<MuElement> connecting_character(const RootFiberPoint& a, const RootFiberPoint& b,
                                              double tol) {
    if (a.level != b.level) throw MismatchError("connecting_character: level mismatch");
    if (!(a.point.monoid == b.point.monoid))
        throw MismatchError("connecting_character: monoid mismatch");
    if (a.point.face != b.point.face) return std::nullopt;
    const long long n = a.level;
    const std::size_t rf = a.point.modulus.size();
    for (std::size_t i = 0; i < rf; ++i)
        if (std::fabs(a.point.modulus[i] - b.point.modulus[i]) > tol) return std::nullopt;

    // Angle differences must be integer multiples of 2*pi/n.
    IntVec target(rf);
    for (std::size_t i = 0; i < rf; ++i) {
        double diff = b.point.character.angles[i] - a.point.character.angles[i];
        double steps = diff * static_cast<double>(n) / two_pi;
        double rounded = std::round(steps);
        if (std::fabs(steps - rounded) * two_pi / static_cast<double>(n) > tol)
            return std::nullopt;
        target[i] = static_cast<long long>(rounded);
    }

    const IntMatrix c = face_in_gp_coordinates(a.point.monoid, a.point.face);
    const std::size_t r = c.rows();
    IntMatrix aug(rf, r + rf);
    for (std::size_t i = 0; i < rf; ++i) {
        for (std::size_t j = 0; j < r; ++j) aug.at(i, j) = c.at(j, i);
        aug.at(i, r + i) = n;
    }
    auto sol = solve_integral(aug, target);
    if (!sol) return std::nullopt;
    IntVec t(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(r));
    for (Int& x : t) {
        x %= n;
        if (x < 0) x += n;
    }
    return MuElement{std::move(t)};
}

bool root_fiber_point_consistent(const RootFiberPoint& pt, double tol) {
    if (!(pt.point.monoid == pt.base.monoid) || pt.point.face != pt.base.face) return false;
    const double n = static_cast<double>(pt.level);
    for (std::size_t i = 0; i < pt.point.modulus.size(); ++i)
        if (std::fabs(n * pt.point.modulus[i] - pt.base.modulus[i]) > tol) return false;
    for (std::size_t i = 0; i < pt.point.character.angles.size(); ++i)
        if (!angle_close(n * pt.point.character.angles[i], pt.base.character.angles[i], tol))
            return false;
    return true;
}

VerificationReport verify_factorization(const AffineMonoid& p, long long n, std::size_t samples,
                                        std::uint64_t seed, double tol) {
    nlohmann::json params;
    params["monoid"] = to_json(p);
    params["n"] = n;
    params["samples"] = samples;
    params["seed"] = seed;
    params["tol"] = tol;
    VerificationReport rep("factorization", params);

    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        rep.add_case();
        CBarPoint x = sample_cbar(p, rng);
        KNPoint k = cbar_to_kn(x);
        PhiResult pr = phi_n(k, n);
        CPoint ex = exp_point(x);
        for (std::size_t g = 0; g < p.generator_count(); ++g) {
            IntVec gen = p.generator(g);
            std::complex<double> root_val = eval_c(pr.point.point, gen);
            std::complex<double> powed = std::pow(root_val, static_cast<double>(n));
            std::complex<double> expect = eval_c(ex, gen);
            if (std::abs(powed - expect) > tol) {
                FailureRecord f;
                f.input = {{"sample", s}, {"generator", g}};
                f.expected = format_complex(expect);
                f.actual = format_complex(powed);
                f.detail = "phi_n value to the n-th power disagrees with exp";
                rep.add_failure(std::move(f));
            }
        }
    }
    return rep;
}

VerificationReport verify_tower(const AffineMonoid& p,
                                const std::vector<std::pair<long long, long long>>& pairs,
                                std::size_t samples, std::uint64_t seed, double tol) {
    nlohmann::json params;
    params["monoid"] = to_json(p);
    params["pairs"] = nlohmann::json::array();
    for (auto [n, m] : pairs) params["pairs"].push_back({n, m});
    params["samples"] = samples;
    params["seed"] = seed;
    params["tol"] = tol;
    VerificationReport rep("tower", params);

    for (auto [n, m] : pairs) {
        if (m % n != 0) throw Error("verify_tower: pairs must satisfy n | m");
        Rng rng(Rng::split(seed, static_cast<std::uint64_t>(n * 1000 + m)));
        for (std::size_t s = 0; s < samples; ++s) {
            rep.add_case();
            KNPoint k = sample_kn(p, rng);
            PhiResult pm = phi_n(k, m);
            PhiResult pn = phi_n(k, n);
            RootFiberPoint projected = tower_project(pm.point, n);
            auto g = connecting_character(projected, pn.point, tol);
            if (!g) {
                FailureRecord f;
                f.input = {{"n", n}, {"m", m}, {"sample", s}, {"face", k.face}};
                f.expected = "projected level-m representative in the mu_n-orbit of phi_n";
                f.actual = "no connecting character";
                f.detail = "tower coherence failed";
                rep.add_failure(std::move(f));
            }
            if (!cpoint_close(tower_project(pn.point, 1).point, tau(k), tol)) {
                FailureRecord f;
                f.input = {{"n", n}, {"m", m}, {"sample", s}, {"face", k.face}};
                f.expected = "level-1 projection equals tau(k)";
                f.actual = "mismatch";
                f.detail = "base compatibility failed";
                rep.add_failure(std::move(f));
            }
        }
    }
    return rep;
}

VerificationReport verify_cube(const AffineMonoid& p, long long n, std::size_t samples,
                               std::uint64_t seed, double tol, bool wrong_scale) {
    nlohmann::json params;
    params["monoid"] = to_json(p);
    params["n"] = n;
    params["samples"] = samples;
    params["seed"] = seed;
    params["tol"] = tol;
    if (wrong_scale) params["wrong_scale"] = true;
    VerificationReport rep("cube", params);

    const double factor = 1.0 / static_cast<double>(wrong_scale ? n + 1 : n);
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        rep.add_case();
        KNPoint k = sample_kn(p, rng);

        // Route 1: arbitrary Cbar lift (a random Z(P)-translate), scale, exp.
        CBarPoint lift = lift_kn(k);
        IntVec z = sample_integral_hom(p, rng);
        std::vector<double> im(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) im[i] = two_pi * z[i].convert_to<double>();
        CBarPoint translated =
            cplus_act(make_cplus(p, std::vector<double>(z.size(), 0.0), std::move(im)), lift);
        RootFiberPoint via_lift;
        via_lift.point = exp_point(scale(translated, factor));
        via_lift.base = tau(k);
        via_lift.level = n;

        // Route 2: phi_n directly.
        PhiResult direct = phi_n(k, n);

        if (!connecting_character(via_lift, direct.point, tol)) {
            FailureRecord f;
            f.input = {{"sample", s}, {"face", k.face}};
            f.expected = "both routes in one mu_n-orbit";
            f.actual = "no connecting character";
            f.detail = "cube face comparison failed";
            rep.add_failure(std::move(f));
        }
        if (!cpoint_close(tower_project(direct.point, 1).point, tau(k), tol) ||
            !cpoint_close(tower_project(via_lift, 1).point, tau(k), tol)) {
            FailureRecord f;
            f.input = {{"sample", s}, {"face", k.face}};
            f.expected = "level-1 projections equal tau(k)";
            f.actual = "mismatch";
            f.detail = "cube base comparison failed";
            rep.add_failure(std::move(f));
        }
    }
    return rep;
}

}  // namespace knroot
