#include <doctest.h>

#include <fstream>
#include <random>

#include "knroot/io.hpp"
#include "knroot/sampling.hpp"

using namespace knroot;

namespace {

AffineMonoid make(std::size_t dim, std::vector<std::vector<long long>> gens) {
    std::vector<IntVec> g;
    for (auto& v : gens) g.push_back(IntVec(v.begin(), v.end()));
    return AffineMonoid::from_generators(dim, std::move(g));
}

const AffineMonoid a1 = make(2, {{1, 0}, {1, 1}, {1, 2}});

}  // namespace

TEST_CASE("monoid spec grammar") {
    CHECK(parse_monoid_spec("N") == make(1, {{1}}));
    CHECK(parse_monoid_spec("N2") == make(2, {{1, 0}, {0, 1}}));
    CHECK(parse_monoid_spec("N3").ambient_dim() == 3);
    CHECK(parse_monoid_spec("A1") == a1);
    CHECK(parse_monoid_spec("numsemigroup:2,3") == make(1, {{2}, {3}}));
    CHECK(parse_monoid_spec("gens:[[1,0],[1,2]]") == make(2, {{1, 0}, {1, 2}}));
    CHECK_THROWS_AS(parse_monoid_spec("bogus"), ParseError);
    CHECK_THROWS_AS(parse_monoid_spec("gens:[not json"), ParseError);
    CHECK_THROWS_AS(parse_monoid_spec("file:/nonexistent/path.json"), ParseError);

    SUBCASE("file: round trip") {
        std::string path = "test_monoid_roundtrip.json";
        {
            std::ofstream out(path);
            out << to_json(a1);
        }
        CHECK(parse_monoid_spec("file:" + path) == a1);
        std::remove(path.c_str());
    }
}

TEST_CASE("matrix JSON uses exact decimal strings") {
    IntMatrix m(2, 2);
    m.at(0, 0) = Int("123456789012345678901234567890");
    m.at(1, 1) = -7;
    nlohmann::json j = to_json(m);
    CHECK(j["entries"][0] == "123456789012345678901234567890");
    CHECK(intmatrix_from_json(j) == m);
}

TEST_CASE("monoid JSON round trip is canonical") {
    std::mt19937_64 eng(12);
    std::uniform_int_distribution<int> entry(0, 3), count(1, 4), dim(1, 3);
    for (int it = 0; it < 50; ++it) {
        std::size_t d = dim(eng);
        std::vector<IntVec> gens;
        for (int g = 0; g < count(eng); ++g) {
            IntVec v(d);
            for (Int& x : v) x = entry(eng);
            gens.push_back(v);
        }
        bool allzero = true;
        for (const auto& g : gens) allzero = allzero && vec_is_zero(g);
        if (allzero) continue;
        AffineMonoid p = AffineMonoid::from_generators(d, gens);
        CHECK(monoid_from_json(to_json(p)) == p);
    }
}

TEST_CASE("point JSON round trips") {
    Rng rng(33);
    SUBCASE("cbar") {
        CBarPoint x = sample_cbar(a1, rng);
        CBarPoint y = cbar_from_json(to_json(x));
        CHECK(cbar_close(x, y, 0.0));  // decimal strings are exact for doubles
    }
    SUBCASE("kn") {
        KNPoint k = sample_kn(a1, rng);
        KNPoint k2 = kn_from_json(to_json(k));
        CHECK(k2.face == k.face);
        CHECK(k2.log_modulus == k.log_modulus);
        CHECK(k2.sigma.angles == k.sigma.angles);
    }
    SUBCASE("cpoint with fallback monoid") {
        CPoint x = sample_cpoint_on_face(a1, a1.full_face_index(), rng);
        nlohmann::json j = to_json(x);
        j.erase("monoid");
        CPoint y = cpoint_from_json(j, &a1);
        CHECK(cpoint_close(x, y, 0.0));
    }
    SUBCASE("bad face set rejected") {
        CPoint x = sample_cpoint_on_face(a1, a1.full_face_index(), rng);
        nlohmann::json j = to_json(x);
        j["face"] = {0, 1};  // (1,0),(1,1) span no face of A1
        CHECK_THROWS_AS(cpoint_from_json(j), ParseError);
    }
}

TEST_CASE("report JSON shape") {
    VerificationReport rep("demo", {{"n", 2}});
    rep.add_case();
    CHECK(rep.to_json()["passed"] == true);
    rep.add_failure({{{"sample", 0}}, "a", "b", "c"});
    nlohmann::json j = rep.to_json();
    CHECK(j["passed"] == false);
    CHECK(j["cases_run"] == 1);
    CHECK(j["failures"].size() == 1);
    CHECK(j["failures"][0]["expected"] == "a");
}

TEST_CASE("format_real round trips doubles exactly") {
    std::mt19937_64 eng(3);
    std::uniform_real_distribution<double> u(-100, 100);
    for (int it = 0; it < 1000; ++it) {
        double x = u(eng);
        CHECK(parse_real(nlohmann::json(format_real(x))) == x);
    }
}
