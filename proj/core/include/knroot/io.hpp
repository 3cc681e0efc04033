#pragma once

#include <complex>
#include <string>

#include <json.hpp>

#include "knroot/kn.hpp"
#include "knroot/rootstack.hpp"

namespace knroot {

/// Reals are serialized as decimal strings with 17 significant digits
/// (round-trip exact for doubles); objects carrying reals also record the
/// "precision" field.
std::string format_real(double x);
double parse_real(const nlohmann::json& j);
std::string format_complex(std::complex<double> z);

nlohmann::json real_vec_to_json(const std::vector<double>& v);
std::vector<double> real_vec_from_json(const nlohmann::json& j);

/// Matrices: row-major array of decimal strings (exact).
nlohmann::json to_json(const IntMatrix& m);
IntMatrix intmatrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Sublattice& s);
nlohmann::json to_json(const FinAbGroup& g);
nlohmann::json to_json(const RationalCone& c);

/// Monoids: {"ambient_dim": d, "generators": [[...], ...]} (one inner array
/// per generator).
nlohmann::json to_json(const AffineMonoid& m);
AffineMonoid monoid_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CPoint& x);
nlohmann::json to_json(const CBarPoint& x);
nlohmann::json to_json(const KNPoint& x);
CPoint cpoint_from_json(const nlohmann::json& j, const AffineMonoid* fallback_monoid = nullptr);
CBarPoint cbar_from_json(const nlohmann::json& j, const AffineMonoid* fallback_monoid = nullptr);
KNPoint kn_from_json(const nlohmann::json& j, const AffineMonoid* fallback_monoid = nullptr);

nlohmann::json to_json(const MuElement& e);
nlohmann::json to_json(const MuSubgroup& s);
nlohmann::json to_json(const MuN& mu);
nlohmann::json to_json(const RootFiberPoint& p);
nlohmann::json to_json(const RootFiber& f);
nlohmann::json to_json(const PhiResult& p);
nlohmann::json to_json(const TorusFiber& f);

/// Monoid spec grammar: built-in names ("N", "N2", "N3", "A1",
/// "numsemigroup:2,3"), "file:<path>" pointing at monoid JSON, or inline
/// "gens:[[1,0],[1,1]]".
AffineMonoid parse_monoid_spec(const std::string& spec);

}  // namespace knroot
