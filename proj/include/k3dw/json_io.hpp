#pragma once

// JSON forms of the domain types (schema tag "k3dw/1").
//
//   LatticeVector   [22 integers]
//   RationalVector  [22 rationals], each "p/q" or an integer
//   RelativeClass   {"representative": [...], "L": [...]}
//   PeriodPoint     {"re": [...], "im": [...], "L": [...]}
//   UnitAngle       {"c": "p/q", "s": "r/t"}
//   Kähler class    [22 rationals] or {"coords": [...]}
//
// Objects may carry "schema": "k3dw/1"; any other unknown key is rejected.

#include <initializer_list>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <json.hpp>

#include "k3dw/error.hpp"
#include "k3dw/lattice.hpp"
#include "k3dw/period_point.hpp"
#include "k3dw/relative.hpp"
#include "k3dw/wall_engine.hpp"

namespace k3dw::json_io {

using nlohmann::json;

inline constexpr std::string_view kSchema = "k3dw/1";

inline Error invalid(const std::string& what) { return Error(ErrorCode::invalid_argument, what); }

inline void expect_object(const json& j, std::initializer_list<std::string_view> allowed, const char* what) {
  if (!j.is_object()) throw invalid(std::string(what) + " must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "schema") {
      if (!it.value().is_string() || it.value().get<std::string>() != kSchema)
        throw invalid(std::string("unsupported schema tag in ") + what);
      continue;
    }
    bool known = false;
    for (auto name : allowed) known = known || it.key() == name;
    if (!known) throw invalid(std::string("unknown field '") + it.key() + "' in " + what);
  }
  for (auto name : allowed)
    if (!j.contains(std::string(name))) throw invalid(std::string("missing field '") + std::string(name) + "' in " + what);
}

inline mpz_class integer_from(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
    return mpz_class(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw invalid("malformed integer '" + j.get<std::string>() + "'");
    return z;
  }
  throw invalid("expected an integer, got " + j.dump());
}

/// Parses "p/q", "p" or an integer; result is canonical.
inline mpq_class rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  mpz_class num, den = 1;
  if (num.set_str(text.substr(0, slash), 10) != 0) throw invalid("malformed rational '" + text + "'");
  if (slash != std::string::npos && den.set_str(text.substr(slash + 1), 10) != 0)
    throw invalid("malformed rational '" + text + "'");
  if (den == 0) throw invalid("zero denominator in '" + text + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline mpq_class rational_from(const json& j) {
  if (j.is_number_integer()) return mpq_class(integer_from(j));
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  throw invalid("expected a rational string \"p/q\" or an integer, got " + j.dump());
}

/// Lowest terms with positive denominator; integers print without "/1".
inline std::string to_string(const mpq_class& q) { return q.get_str(); }

inline json to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline json to_json(const mpq_class& q) { return q.get_str(); }

inline LatticeVector lattice_vector_from(const json& j) {
  if (!j.is_array() || j.size() != kLatticeRank) throw invalid("lattice vector must be an array of 22 integers");
  LatticeVector v;
  for (std::size_t i = 0; i < kLatticeRank; ++i) v[i] = integer_from(j[i]);
  return v;
}

inline RationalVector rational_vector_from(const json& j) {
  if (!j.is_array() || j.size() != kLatticeRank) throw invalid("rational vector must be an array of 22 rationals");
  RationalVector v;
  for (std::size_t i = 0; i < kLatticeRank; ++i) v[i] = rational_from(j[i]);
  return v;
}

inline json to_json(const LatticeVector& v) {
  json out = json::array();
  for (const auto& c : v.coords()) out.push_back(to_json(c));
  return out;
}

inline json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& c : v.coords()) out.push_back(to_json(c));
  return out;
}

inline BoundaryClass boundary_from(const json& j) { return BoundaryClass(lattice_vector_from(j)); }

inline RelativeClass relative_class_from(const json& j) {
  expect_object(j, {"representative", "L"}, "relative class");
  return {lattice_vector_from(j["representative"]), boundary_from(j["L"])};
}

inline json to_json(const RelativeClass& g) {
  return {{"schema", kSchema}, {"representative", to_json(g.representative())}, {"L", to_json(g.l())}};
}

inline PeriodPoint period_from(const json& j) {
  expect_object(j, {"re", "im", "L"}, "period point");
  return {rational_vector_from(j["re"]), rational_vector_from(j["im"]), boundary_from(j["L"])};
}

inline json to_json(const PeriodPoint& s) {
  return {{"schema", kSchema}, {"re", to_json(s.re)}, {"im", to_json(s.im)}, {"L", to_json(s.boundary.vector())}};
}

inline UnitAngle angle_from(const json& j) {
  expect_object(j, {"c", "s"}, "unit angle");
  return {rational_from(j["c"]), rational_from(j["s"])};
}

inline json to_json(const UnitAngle& a) { return {{"c", to_json(a.c())}, {"s", to_json(a.s())}}; }

inline json to_json(const GaussianRational& z) { return {{"re", to_json(z.re)}, {"im", to_json(z.im)}}; }

inline json to_json(const ComplexVector& v) { return {{"re", to_json(v.re)}, {"im", to_json(v.im)}}; }

inline RationalVector kahler_coords_from(const json& j) {
  if (j.is_array()) return rational_vector_from(j);
  expect_object(j, {"coords"}, "Kähler class");
  return rational_vector_from(j["coords"]);
}

inline json to_json(const WallRecord& w) {
  return {{"k", to_json(w.k)},
          {"lifting", to_json(w.lifting)},
          {"pairing_with_L", to_json(w.pairing_with_l)},
          {"closed_invariant", to_json(w.closed_invariant)}};
}

}  // namespace k3dw::json_io
