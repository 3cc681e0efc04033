#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "knroot/rootstack.hpp"
#include "knroot/sampling.hpp"

using namespace knroot;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * pi;

AffineMonoid make(std::size_t dim, std::vector<std::vector<long long>> gens) {
    std::vector<IntVec> g;
    for (auto& v : gens) g.push_back(IntVec(v.begin(), v.end()));
    return AffineMonoid::from_generators(dim, std::move(g));
}

AffineMonoid orthant(std::size_t k) {
    std::vector<std::vector<long long>> gens;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<long long> e(k, 0);
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    return make(k, std::move(gens));
}

const AffineMonoid nat = make(1, {{1}});
const AffineMonoid a1 = make(2, {{1, 0}, {1, 1}, {1, 2}});

bool closez(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
    return std::abs(a - b) <= tol;
}

std::vector<Int> factors_of_power(long long n, std::size_t k) {
    return std::vector<Int>(k, Int(n));
}

}  // namespace

TEST_CASE("mu_n structure") {
    SUBCASE("mu_n(N^k) = (Z/n)^k for k <= 3, n <= 4") {
        for (std::size_t k = 1; k <= 3; ++k)
            for (long long n = 2; n <= 4; ++n) {
                MuN mu = mu_n(orthant(k), n);
                CHECK(mu.group.invariant_factors == factors_of_power(n, k));
                CHECK(mu.group.free_rank == 0);
                Int expect = 1;
                for (std::size_t i = 0; i < k; ++i) expect *= n;
                CHECK(mu.order == expect);
                CHECK(mu.enumerated);
                CHECK(Int(mu.elements.size()) == mu.order);
            }
    }
    SUBCASE("mu_2(A1) = (Z/2)^2") {
        MuN mu = mu_n(a1, 2);
        CHECK(mu.group.invariant_factors == std::vector<Int>{2, 2});
        CHECK(mu.order == 4);
    }
    SUBCASE("n = 1 gives the trivial group") {
        MuN mu = mu_n(a1, 1);
        CHECK(mu.group.is_trivial());
        CHECK(mu.order == 1);
        CHECK(mu.elements.size() == 1);
    }
    SUBCASE("closed under product, identity present") {
        MuN mu = mu_n(a1, 3);
        std::set<IntVec> all;
        for (const MuElement& e : mu.elements) all.insert(e.residues);
        CHECK(all.count(IntVec{0, 0}) == 1);
        for (const MuElement& a : mu.elements)
            for (const MuElement& b : mu.elements)
                CHECK(all.count(mu_mul(mu, a, b).residues) == 1);
    }
}

TEST_CASE("root_fiber") {
    SUBCASE("N, n=2, x = 4: lifts {2, -2}, trivial stabilizer") {
        CPoint x = make_cpoint(nat, nat.full_face_index(), {std::log(4.0)}, {0.0});
        RootFiber f = root_fiber(nat, 2, x);
        REQUIRE(f.transversal.size() == 2);
        std::vector<std::complex<double>> vals;
        for (const RootFiberPoint& p : f.transversal) vals.push_back(eval_c(p.point, {1}));
        CHECK(((closez(vals[0], {2, 0}) && closez(vals[1], {-2, 0})) ||
               (closez(vals[0], {-2, 0}) && closez(vals[1], {2, 0}))));
        CHECK(f.stabilizer.order == 1);
        for (const RootFiberPoint& p : f.transversal) CHECK(root_fiber_point_consistent(p, 1e-9));
    }
    SUBCASE("N, n=2, x = 0: single lift, full mu_2 stabilizer") {
        CPoint x = make_cpoint(nat, nat.trivial_face_index(), {}, {});
        RootFiber f = root_fiber(nat, 2, x);
        CHECK(f.transversal.size() == 1);
        CHECK(f.stabilizer.order == 2);
        CHECK(f.stabilizer.invariant_factors == std::vector<Int>{2});
    }
    SUBCASE("N^2, n=2, x = (0,1): 2 lifts, stabilizer order 2") {
        AffineMonoid n2 = orthant(2);
        std::vector<std::size_t> second_axis;
        for (std::size_t g = 0; g < 2; ++g)
            if (n2.generator(g) == IntVec{0, 1}) second_axis.push_back(g);
        auto face = n2.find_face(second_axis);
        REQUIRE(face.has_value());
        CPoint x = make_cpoint(n2, *face, {0.0}, {0.0});
        RootFiber f = root_fiber(n2, 2, x);
        CHECK(f.transversal.size() == 2);
        CHECK(f.stabilizer.order == 2);
        CHECK(f.transversal.size() * 2 == 4);  // orbit * stabilizer = |mu_2(N^2)|
    }
}

TEST_CASE("mu_act") {
    MuN mu = mu_n(nat, 2);
    CPoint x = make_cpoint(nat, nat.full_face_index(), {std::log(4.0)}, {0.0});
    RootFiber f = root_fiber(nat, 2, x);
    const RootFiberPoint& lift2 = [&]() -> const RootFiberPoint& {
        for (const RootFiberPoint& p : f.transversal)
            if (closez(eval_c(p.point, {1}), {2, 0})) return p;
        FAIL("principal lift missing");
        return f.transversal.front();
    }();

    SUBCASE("identity acts trivially") {
        RootFiberPoint y = mu_act(mu, MuElement{{0}}, lift2);
        CHECK(closez(eval_c(y.point, {1}), {2, 0}));
    }
    SUBCASE("the -1 character flips the lift") {
        RootFiberPoint y = mu_act(mu, MuElement{{1}}, lift2);
        CHECK(closez(eval_c(y.point, {1}), {-2, 0}));
        CHECK(cpoint_close(y.base, lift2.base, 0.0));
    }
    SUBCASE("stabilizer elements fix boundary lifts") {
        CPoint zero = make_cpoint(nat, nat.trivial_face_index(), {}, {});
        RootFiber fz = root_fiber(nat, 2, zero);
        REQUIRE(fz.stabilizer.enumerated);
        for (const MuElement& g : fz.stabilizer.elements) {
            RootFiberPoint moved = mu_act(mu, g, fz.transversal.front());
            CHECK(cpoint_close(moved.point, fz.transversal.front().point, 1e-12));
        }
    }
    SUBCASE("transversal is one orbit: transitivity on lifts") {
        MuN mu3 = mu_n(a1, 3);
        Rng rng(8);
        CPoint x = sample_cpoint_on_face(a1, a1.full_face_index(), rng);
        RootFiber f3 = root_fiber(a1, 3, x);
        std::set<std::size_t> reached;
        for (const MuElement& g : mu3.elements) {
            RootFiberPoint moved = mu_act(mu3, g, f3.transversal.front());
            for (std::size_t i = 0; i < f3.transversal.size(); ++i)
                if (cpoint_close(moved.point, f3.transversal[i].point, 1e-9)) reached.insert(i);
        }
        CHECK(reached.size() == f3.transversal.size());
    }
}

TEST_CASE("phi_n") {
    SUBCASE("N: KN point over x = 4 with sigma = 1 -> principal lift 2") {
        KNPoint k = make_kn_point(nat, nat.full_face_index(), {std::log(4.0)}, {0.0});
        PhiResult r = phi_n(k, 2);
        CHECK(closez(eval_c(r.point.point, {1}), {2, 0}));
        CHECK(r.ambiguity.orbit_size == 2);
        CHECK(r.ambiguity.stabilizer.order == 1);
        CHECK(cpoint_close(r.point.base, tau(k), 1e-12));
    }
    SUBCASE("N: KN point over 0 -> lift 0 with full mu_2 stabilizer") {
        KNPoint k = make_kn_point(nat, nat.trivial_face_index(), {}, {0.3});
        PhiResult r = phi_n(k, 2);
        CHECK(eval_c(r.point.point, {1}) == std::complex<double>(0, 0));
        CHECK(r.ambiguity.orbit_size == 1);
        CHECK(r.ambiguity.stabilizer.order == 2);
    }
    SUBCASE("changing the lift by v -> v + 2*pi flips the n=2 answer inside the orbit") {
        KNPoint k = make_kn_point(nat, nat.full_face_index(), {std::log(4.0)}, {0.0});
        CBarPoint lift = lift_kn(k);
        lift.v[0] += two_pi;
        RootFiberPoint other;
        other.point = exp_point(scale(lift, 0.5));
        other.base = tau(k);
        other.level = 2;
        CHECK(closez(eval_c(other.point, {1}), {-2, 0}));  // e^{2*pi*i/2} = -1
        PhiResult r = phi_n(k, 2);
        auto g = connecting_character(r.point, other, 1e-9);
        REQUIRE(g.has_value());
        CHECK(g->residues == IntVec{1});
    }
    SUBCASE("well-definedness: 10 random Z(P)-translates stay in the orbit") {
        Rng rng(19);
        for (const AffineMonoid& p : {orthant(2), a1}) {
            KNPoint k = sample_kn(p, rng);
            PhiResult r = phi_n(k, 3);
            for (int t = 0; t < 10; ++t) {
                IntVec z = sample_integral_hom(p, rng);
                CBarPoint lift = lift_kn(k);
                for (std::size_t i = 0; i < lift.v.size(); ++i)
                    lift.v[i] += two_pi * z[i].convert_to<double>();
                RootFiberPoint other;
                other.point = exp_point(scale(lift, 1.0 / 3.0));
                other.base = tau(k);
                other.level = 3;
                auto g = connecting_character(r.point, other, 1e-9);
                CHECK(g.has_value());
                if (g) {
                    // g actually moves the canonical representative onto the
                    // translate (unique only modulo the stabilizer)
                    MuN mu = mu_n(p, 3);
                    RootFiberPoint moved = mu_act(mu, *g, r.point);
                    CHECK(cpoint_close(moved.point, other.point, 1e-9));
                }
            }
        }
    }
}

TEST_CASE("tower_project") {
    SUBCASE("m = n is the identity") {
        KNPoint k = make_kn_point(nat, nat.full_face_index(), {1.0}, {0.7});
        RootFiberPoint p = phi_n(k, 3).point;
        RootFiberPoint q = tower_project(p, 3);
        CHECK(cpoint_close(q.point, p.point, 0.0));
    }
    SUBCASE("N, m=4, n=2: the level-2 lift is the square of the level-4 lift") {
        KNPoint k = make_kn_point(nat, nat.full_face_index(), {std::log(16.0)}, {0.0});
        RootFiberPoint p4 = phi_n(k, 4).point;
        CHECK(closez(eval_c(p4.point, {1}), {2, 0}));
        RootFiberPoint p2 = tower_project(p4, 2);
        std::complex<double> z4 = eval_c(p4.point, {1});
        CHECK(closez(eval_c(p2.point, {1}), z4 * z4, 1e-9));
        CHECK(p2.level == 2);
    }
    SUBCASE("non-divisor rejected") {
        KNPoint k = make_kn_point(nat, nat.full_face_index(), {1.0}, {0.0});
        CHECK_THROWS_AS(tower_project(phi_n(k, 4).point, 3), MismatchError);
    }
}

TEST_CASE("orbit-stabilizer over corpus faces, n <= 4") {
    std::vector<AffineMonoid> corpus = {orthant(1), orthant(2), orthant(3), a1,
                                        make(2, {{1, 0}, {1, 2}}).saturate(),
                                        make(3, {{1, 0, 0}, {1, 2, 0}, {1, 0, 2}, {1, 2, 2}})};
    Rng rng(41);
    for (const AffineMonoid& p : corpus) {
        const std::size_t r = p.groupification().rank();
        for (long long n = 1; n <= 4; ++n) {
            Int total = 1;
            for (std::size_t i = 0; i < r; ++i) total *= n;
            for (std::size_t face = 0; face < p.face_count(); ++face) {
                CPoint x = sample_cpoint_on_face(p, face, rng);
                RootFiber f = root_fiber(p, n, x);
                CHECK(Int(f.transversal.size()) * f.stabilizer.order == total);
                // stabilizer = mu_n of the characteristic stalk P/F
                CharStalk stalk = p.char_stalk(face);
                MuN stalk_mu = mu_n(stalk.quotient, n);
                CHECK(f.stabilizer.invariant_factors == stalk_mu.group.invariant_factors);
            }
        }
    }
}

TEST_CASE("factorization exp = (^n) after f_n: 1000 random points") {
    VerificationReport rep = verify_factorization(a1, 3, 1000, 5, 1e-9);
    CHECK(rep.passed());
    CHECK(rep.cases_run() == 1000);
}

TEST_CASE("verify_tower passes; verify_cube passes; negative control flags") {
    SUBCASE("tower on standard pairs") {
        VerificationReport rep =
            verify_tower(a1, {{1, 2}, {2, 4}, {2, 6}, {3, 6}}, 100, 7, 1e-9);
        CHECK(rep.passed());
        CHECK(rep.cases_run() == 400);
    }
    SUBCASE("cube on (N,2) and (A1,3)") {
        CHECK(verify_cube(nat, 2, 100, 7, 1e-9).passed());
        CHECK(verify_cube(a1, 3, 100, 7, 1e-9).passed());
    }
    SUBCASE("cube and tower on skew and non-simplicial monoids") {
        std::vector<AffineMonoid> monoids = {
            make(2, {{2, 1}, {1, 1}, {1, 2}}),
            make(3, {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}}),
        };
        for (const AffineMonoid& p : monoids) {
            CHECK(verify_cube(p, 2, 60, 17, 1e-9).passed());
            CHECK(verify_tower(p, {{2, 4}, {3, 6}}, 60, 17, 1e-9).passed());
            CHECK(verify_factorization(p, 5, 200, 17, 1e-9).passed());
        }
    }
    SUBCASE("wrong root scale is detected on full-support samples") {
        VerificationReport rep = verify_cube(nat, 2, 60, 7, 1e-9, /*wrong_scale=*/true);
        CHECK_FALSE(rep.passed());
        // every full-support sample must be flagged
        std::set<std::size_t> flagged;
        for (const FailureRecord& f : rep.failures())
            flagged.insert(f.input.at("sample").get<std::size_t>());
        Rng rng(7);
        std::size_t full_support = 0;
        std::set<std::size_t> expected;
        for (std::size_t s = 0; s < 60; ++s) {
            KNPoint k = sample_kn(nat, rng);
            IntVec z = sample_integral_hom(nat, rng);
            (void)z;
            if (k.face == nat.full_face_index()) {
                ++full_support;
                expected.insert(s);
            }
        }
        REQUIRE(full_support > 0);
        for (std::size_t s : expected) CHECK(flagged.count(s) == 1);
    }
}

TEST_CASE("phi_n output is one of the root_fiber lifts over tau(k)") {
    Rng rng(61);
    std::vector<AffineMonoid> monoids = {
        nat, orthant(2), a1, make(3, {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}})};
    for (const AffineMonoid& p : monoids)
        for (long long n : {2, 3}) {
            for (int it = 0; it < 20; ++it) {
                KNPoint k = sample_kn(p, rng);
                PhiResult r = phi_n(k, n);
                RootFiber f = root_fiber(p, n, tau(k));
                bool found = false;
                for (const RootFiberPoint& lift : f.transversal)
                    if (cpoint_close(lift.point, r.point.point, 1e-9)) found = true;
                CHECK(found);
                CHECK(Int(f.transversal.size()) == r.ambiguity.orbit_size);
                CHECK(f.stabilizer.invariant_factors ==
                      r.ambiguity.stabilizer.invariant_factors);
            }
        }
}

TEST_CASE("mu_n beyond the enumeration limit flags generators-only") {
    // rank 4, n = 10: order 10^4 exactly is enumerable; rank 5 would not be,
    // but the cone guard caps ambient dimension first, so use n larger.
    AffineMonoid n3 = orthant(3);
    MuN big = mu_n(n3, 30);  // 27000 > 10^4
    CHECK_FALSE(big.enumerated);
    CHECK(big.elements.size() == 3);  // generators only
    CHECK(big.order == 27000);
}
