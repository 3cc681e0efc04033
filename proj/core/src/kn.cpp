#include "knroot/kn.hpp"

#include <cmath>
#include <numbers>

#include "knroot/io.hpp"
#include "knroot/sampling.hpp"

namespace knroot {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

TorusFiber kn_fiber(const AffineMonoid& p, const CPoint& x, std::size_t samples,
                    std::uint64_t seed) {
    CharStalk stalk = p.char_stalk(x.face);

    TorusFiber fiber;
    fiber.base = x;
    fiber.rank = stalk.quotient_gp.free_rank;
    fiber.lattice = stalk.quotient_gp;

    // Extend the base character from F^gp to P^gp once, then twist by random
    // characters of the quotient. The twists vanish on F^gp exactly (the
    // quotient projection is integral), so every sample restricts to x.
    std::vector<double> base = extend_face_functional(p, x.face, x.character.angles);
    const IntMatrix& proj = stalk.quotient_gp.projection;

    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<double> omega(fiber.rank);
        for (double& w : omega) w = rng.uniform(0.0, two_pi);
        std::vector<double> angles = base;
        for (std::size_t k = 0; k < angles.size(); ++k)
            for (std::size_t j = 0; j < fiber.rank; ++j)
                angles[k] += omega[j] * proj.at(j, k).convert_to<double>();
        fiber.samples.push_back(make_kn_point(p, x.face, x.modulus, std::move(angles)));
    }
    return fiber;
}

VerificationReport verify_chart_cartesian(const AffineMonoid& p, std::size_t samples,
                                          std::uint64_t seed, double tol, double perturb) {
    nlohmann::json params;
    params["monoid"] = to_json(p);
    params["samples"] = samples;
    params["seed"] = seed;
    params["tol"] = tol;
    if (perturb != 0.0) params["perturb"] = format_real(perturb);
    VerificationReport rep("charts", params);

    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        rep.add_case();
        CBarPoint x = sample_cbar(p, rng);
        KNPoint k = cbar_to_kn(x);

        // (a) invariance under 2*pi*i*Z(P) ...
        IntVec z = sample_integral_hom(p, rng);
        std::vector<double> im(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) im[i] = two_pi * z[i].convert_to<double>();
        CBarPoint shifted =
            cplus_act(make_cplus(p, std::vector<double>(z.size(), 0.0), std::move(im)), x);
        if (!kn_close(cbar_to_kn(shifted), k, tol)) {
            FailureRecord f;
            f.input = {{"sample", s}, {"check", "invariance"}, {"face", x.face}};
            f.expected = "identical KN image after a 2*pi*i*Z(P) translation";
            f.actual = "images differ";
            f.detail = "quotient map is not Z(P)-invariant";
            rep.add_failure(std::move(f));
        }

        // ... and conversely: equal images differ by an integral translation.
        CBarPoint relift = lift_kn(k);
        auto g = same_orbit_cplus(relift, x);
        bool integral = g.has_value();
        if (g) {
            for (double re : g->re)
                if (std::fabs(re) > tol) integral = false;
            for (double w : g->im)
                if (std::fabs(w / two_pi - std::round(w / two_pi)) > tol) integral = false;
        }
        if (!integral) {
            FailureRecord f;
            f.input = {{"sample", s}, {"check", "fiber"}, {"face", x.face}};
            f.expected = "two lifts of one KN point differ by 2*pi*i*Z(P)";
            f.actual = "connecting element not integral";
            f.detail = "quotient fibers are larger than Z(P)";
            rep.add_failure(std::move(f));
        }

        // (b) lift existence for a fresh KN point.
        KNPoint fresh = sample_kn(p, rng);
        CBarPoint lift = lift_kn(fresh);
        if (perturb != 0.0 && !lift.v.empty()) lift.v[0] += perturb;
        if (!kn_close(cbar_to_kn(lift), fresh, tol)) {
            FailureRecord f;
            f.input = {{"sample", s}, {"check", "lift"}, {"face", fresh.face}};
            f.expected = "constructed lift maps back to the sampled KN point";
            f.actual = "images differ";
            f.detail = perturb != 0.0 ? "perturbed lift detected" : "lift construction failed";
            rep.add_failure(std::move(f));
        }

        // (c) tau after the quotient map equals exp.
        if (!cpoint_close(tau(k), exp_point(x), tol)) {
            FailureRecord f;
            f.input = {{"sample", s}, {"check", "triangle"}, {"face", x.face}};
            f.expected = "tau(cbar_to_kn(x)) = exp_point(x)";
            f.actual = "points differ";
            f.detail = "commuting triangle failed";
            rep.add_failure(std::move(f));
        }
    }
    return rep;
}

}  // namespace knroot
