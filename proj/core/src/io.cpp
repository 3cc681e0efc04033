#include "knroot/io.hpp"

#include <cstdio>
#include <fstream>

#include "knroot/errors.hpp"

namespace knroot {

namespace {

Int int_from_string(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw ParseError("not an integer: '" + s + "'");
    }
}

IntVec intvec_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("expected an array of integers");
    IntVec v;
    for (const auto& e : j) {
        if (e.is_string())
            v.push_back(int_from_string(e.get<std::string>()));
        else if (e.is_number_integer())
            v.push_back(Int(e.get<long long>()));
        else
            throw ParseError("expected integer or decimal string");
    }
    return v;
}

nlohmann::json intvec_to_json(const IntVec& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const Int& x : v) a.push_back(x.str());
    return a;
}

}  // namespace

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double parse_real(const nlohmann::json& j) {
    if (j.is_string()) return std::stod(j.get<std::string>());
    if (j.is_number()) return j.get<double>();
    throw ParseError("expected a real number (decimal string)");
}

std::string format_complex(std::complex<double> z) {
    return format_real(z.real()) + (z.imag() < 0 ? "" : "+") + format_real(z.imag()) + "i";
}

nlohmann::json real_vec_to_json(const std::vector<double>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (double x : v) a.push_back(format_real(x));
    return a;
}

std::vector<double> real_vec_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("expected an array of reals");
    std::vector<double> v;
    for (const auto& e : j) v.push_back(parse_real(e));
    return v;
}

nlohmann::json to_json(const IntMatrix& m) {
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k) entries.push_back(m.at(i, k).str());
    j["entries"] = std::move(entries);
    return j;
}

IntMatrix intmatrix_from_json(const nlohmann::json& j) {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows * cols) throw ParseError("matrix entry count != rows*cols");
    IntMatrix m(rows, cols);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const auto& e = entries[idx++];
            m.at(i, k) = e.is_string() ? int_from_string(e.get<std::string>())
                                       : Int(e.get<long long>());
        }
    return m;
}

nlohmann::json to_json(const Sublattice& s) {
    nlohmann::json j;
    j["ambient_dim"] = s.ambient_dim();
    j["rank"] = s.rank();
    nlohmann::json basis = nlohmann::json::array();
    for (std::size_t i = 0; i < s.rank(); ++i) basis.push_back(intvec_to_json(s.basis_vector(i)));
    j["basis"] = std::move(basis);
    return j;
}

nlohmann::json to_json(const FinAbGroup& g) {
    nlohmann::json j;
    j["free_rank"] = g.free_rank;
    nlohmann::json f = nlohmann::json::array();
    for (const Int& d : g.invariant_factors) f.push_back(d.str());
    j["invariant_factors"] = std::move(f);
    j["projection"] = to_json(g.projection);
    if (auto o = g.order()) j["order"] = o->str();
    return j;
}

nlohmann::json to_json(const RationalCone& c) {
    nlohmann::json j;
    j["ambient_dim"] = c.ambient_dim();
    nlohmann::json rays = nlohmann::json::array();
    for (std::size_t i = 0; i < c.ray_count(); ++i) rays.push_back(intvec_to_json(c.ray(i)));
    j["rays"] = std::move(rays);
    nlohmann::json facets = nlohmann::json::array();
    for (std::size_t i = 0; i < c.facets().rows(); ++i)
        facets.push_back(intvec_to_json(c.facets().row(i)));
    j["facets"] = std::move(facets);
    return j;
}

nlohmann::json to_json(const AffineMonoid& m) {
    nlohmann::json j;
    j["ambient_dim"] = m.ambient_dim();
    nlohmann::json gens = nlohmann::json::array();
    for (std::size_t g = 0; g < m.generator_count(); ++g)
        gens.push_back(intvec_to_json(m.generator(g)));
    j["generators"] = std::move(gens);
    return j;
}

AffineMonoid monoid_from_json(const nlohmann::json& j) {
    std::size_t dim = j.at("ambient_dim").get<std::size_t>();
    std::vector<IntVec> gens;
    for (const auto& g : j.at("generators")) gens.push_back(intvec_from_json(g));
    return AffineMonoid::from_generators(dim, std::move(gens));
}

namespace {

nlohmann::json face_to_json(const AffineMonoid& m, std::size_t face) {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t g : m.face(face).generator_indices) a.push_back(g);
    return a;
}

std::size_t face_from_json(const AffineMonoid& m, const nlohmann::json& j) {
    std::vector<std::size_t> idx;
    for (const auto& e : j) idx.push_back(e.get<std::size_t>());
    auto f = m.find_face(idx);
    if (!f) throw ParseError("no face with the given generator set");
    return *f;
}

AffineMonoid point_monoid(const nlohmann::json& j, const AffineMonoid* fallback) {
    if (j.contains("monoid")) return monoid_from_json(j.at("monoid"));
    if (fallback) return *fallback;
    throw ParseError("point JSON lacks a monoid and no default was given");
}

}  // namespace

nlohmann::json to_json(const CPoint& x) {
    nlohmann::json j;
    j["monoid"] = to_json(x.monoid);
    j["face"] = face_to_json(x.monoid, x.face);
    j["modulus"] = real_vec_to_json(x.modulus);
    j["angles"] = real_vec_to_json(x.character.angles);
    j["precision"] = 17;
    return j;
}

nlohmann::json to_json(const CBarPoint& x) {
    nlohmann::json j;
    j["monoid"] = to_json(x.monoid);
    j["face"] = face_to_json(x.monoid, x.face);
    j["u"] = real_vec_to_json(x.u);
    j["v"] = real_vec_to_json(x.v);
    j["precision"] = 17;
    return j;
}

nlohmann::json to_json(const KNPoint& x) {
    nlohmann::json j;
    j["monoid"] = to_json(x.monoid);
    j["face"] = face_to_json(x.monoid, x.face);
    j["log_modulus"] = real_vec_to_json(x.log_modulus);
    j["sigma"] = real_vec_to_json(x.sigma.angles);
    j["precision"] = 17;
    return j;
}

CPoint cpoint_from_json(const nlohmann::json& j, const AffineMonoid* fallback) {
    AffineMonoid m = point_monoid(j, fallback);
    std::size_t face = face_from_json(m, j.at("face"));
    return make_cpoint(std::move(m), face, real_vec_from_json(j.at("modulus")),
                       real_vec_from_json(j.at("angles")));
}

CBarPoint cbar_from_json(const nlohmann::json& j, const AffineMonoid* fallback) {
    AffineMonoid m = point_monoid(j, fallback);
    std::size_t face = face_from_json(m, j.at("face"));
    return make_cbar_point(std::move(m), face, real_vec_from_json(j.at("u")),
                           real_vec_from_json(j.at("v")));
}

KNPoint kn_from_json(const nlohmann::json& j, const AffineMonoid* fallback) {
    AffineMonoid m = point_monoid(j, fallback);
    std::size_t face = face_from_json(m, j.at("face"));
    return make_kn_point(std::move(m), face, real_vec_from_json(j.at("log_modulus")),
                         real_vec_from_json(j.at("sigma")));
}

nlohmann::json to_json(const MuElement& e) { return intvec_to_json(e.residues); }

nlohmann::json to_json(const MuSubgroup& s) {
    nlohmann::json j;
    j["order"] = s.order.str();
    nlohmann::json f = nlohmann::json::array();
    for (const Int& d : s.invariant_factors) f.push_back(d.str());
    j["invariant_factors"] = std::move(f);
    j["enumerated"] = s.enumerated;
    if (s.enumerated) {
        nlohmann::json els = nlohmann::json::array();
        for (const MuElement& e : s.elements) els.push_back(to_json(e));
        j["elements"] = std::move(els);
    }
    return j;
}

nlohmann::json to_json(const MuN& mu) {
    nlohmann::json j;
    j["monoid"] = to_json(mu.monoid);
    j["n"] = mu.level;
    j["group"] = to_json(mu.group);
    j["order"] = mu.order.str();
    j["enumerated"] = mu.enumerated;
    nlohmann::json els = nlohmann::json::array();
    for (const MuElement& e : mu.elements) els.push_back(to_json(e));
    j[mu.enumerated ? "elements" : "generators"] = std::move(els);
    return j;
}

nlohmann::json to_json(const RootFiberPoint& p) {
    nlohmann::json j;
    j["level"] = p.level;
    j["point"] = to_json(p.point);
    j["base"] = to_json(p.base);
    return j;
}

nlohmann::json to_json(const RootFiber& f) {
    nlohmann::json j;
    nlohmann::json tr = nlohmann::json::array();
    for (const RootFiberPoint& p : f.transversal) tr.push_back(to_json(p));
    j["transversal"] = std::move(tr);
    j["stabilizer"] = to_json(f.stabilizer);
    return j;
}

nlohmann::json to_json(const PhiResult& p) {
    nlohmann::json j;
    j["point"] = to_json(p.point);
    nlohmann::json amb;
    amb["level"] = p.ambiguity.level;
    amb["orbit_size"] = p.ambiguity.orbit_size.str();
    amb["stabilizer"] = to_json(p.ambiguity.stabilizer);
    j["ambiguity"] = std::move(amb);
    return j;
}

nlohmann::json to_json(const TorusFiber& f) {
    nlohmann::json j;
    j["base"] = to_json(f.base);
    j["rank"] = f.rank;
    j["lattice"] = to_json(f.lattice);
    nlohmann::json samples = nlohmann::json::array();
    for (const KNPoint& k : f.samples) samples.push_back(to_json(k));
    j["samples"] = std::move(samples);
    return j;
}

namespace {

AffineMonoid orthant(std::size_t k) {
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < k; ++i) {
        IntVec e(k);
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    return AffineMonoid::from_generators(k, std::move(gens));
}

}  // namespace

AffineMonoid parse_monoid_spec(const std::string& spec) {
    if (spec == "N") return orthant(1);
    if (spec == "N2") return orthant(2);
    if (spec == "N3") return orthant(3);
    if (spec == "A1")
        return AffineMonoid::from_generators(2, {{Int(1), Int(0)}, {Int(1), Int(1)}, {Int(1), Int(2)}});
    if (spec.rfind("numsemigroup:", 0) == 0) {
        std::vector<IntVec> gens;
        std::string rest = spec.substr(13);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            std::size_t comma = rest.find(',', pos);
            std::string tok = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
            if (tok.empty()) throw ParseError("numsemigroup: empty entry");
            gens.push_back({int_from_string(tok)});
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (gens.empty()) throw ParseError("numsemigroup: no generators");
        return AffineMonoid::from_generators(1, std::move(gens));
    }
    if (spec.rfind("file:", 0) == 0) {
        std::ifstream in(spec.substr(5));
        if (!in) throw ParseError("cannot open monoid file: " + spec.substr(5));
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw ParseError(std::string("bad monoid JSON: ") + e.what());
        }
        return monoid_from_json(j);
    }
    if (spec.rfind("gens:", 0) == 0) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(spec.substr(5));
        } catch (const std::exception& e) {
            throw ParseError(std::string("bad gens spec: ") + e.what());
        }
        std::vector<IntVec> gens;
        for (const auto& g : j) gens.push_back(intvec_from_json(g));
        if (gens.empty()) throw ParseError("gens: no generators");
        const std::size_t dim = gens.front().size();
        return AffineMonoid::from_generators(dim, std::move(gens));
    }
    throw ParseError("unknown monoid spec: '" + spec + "'");
}

}  // namespace knroot
