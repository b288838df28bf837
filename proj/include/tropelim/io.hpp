// JSON encoding of polytopes, matrices and cycles.
#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropelim/exact.hpp"
#include "tropelim/fan.hpp"
#include "tropelim/polytope.hpp"

namespace tropelim::io {

using Json = nlohmann::ordered_json;

/// Malformed or incomplete document.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Integers that fit in int64 are plain numbers, larger ones are strings.
inline Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(x));
  return Json(to_string(x));
}

inline Json to_json(const Rational& x) {
  if (denominator(x) == 1) return to_json(numerator(x));
  return Json(to_string(numerator(x)) + "/" + to_string(denominator(x)));
}

inline Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

namespace detail {

inline bool is_integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + " must be an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where + " lacks the field \"" + key + "\"");
  return *it;
}

}  // namespace detail

inline Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (detail::is_integer_text(s)) return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw SchemaError(where + " must be an integer");
}

inline Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      std::string p = s.substr(0, slash), q = s.substr(slash + 1);
      if (!detail::is_integer_text(p) || !detail::is_integer_text(q)) throw SchemaError(where + " is not a rational \"p/q\"");
      Integer den = integer_from_json(Json(q), where);
      if (den == 0) throw SchemaError(where + " has a zero denominator");
      return Rational(integer_from_json(Json(p), where)) / Rational(den);
    }
  }
  return Rational(integer_from_json(j, where));
}

inline std::size_t size_from_json(const Json& j, const std::string& where) {
  Integer x = integer_from_json(j, where);
  if (x < 0 || x > 1000000) throw SchemaError(where + " must be a small nonnegative integer");
  return static_cast<std::size_t>(x);
}

inline IntVector int_vector_from_json(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) throw SchemaError(where + " must be an array of length " + std::to_string(n));
  IntVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(integer_from_json(j[i], where));
  return v;
}

inline std::vector<IntVector> int_rows_from_json(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + " must be an array");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i)
    rows.push_back(int_vector_from_json(j[i], n, where + "[" + std::to_string(i) + "]"));
  return rows;
}

// {"dim": n, "vertices": [[...], ...]}
inline Json to_json(const LatticePolytope& p) {
  Json j;
  j["dim"] = p.ambient_rank();
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(to_json(v));
  j["vertices"] = vs;
  return j;
}

inline Json to_json(const RationalPolytope& p) {
  Json j;
  j["dim"] = p.ambient_rank();
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(to_json(v));
  j["vertices"] = vs;
  return j;
}

inline LatticePolytope polytope_from_json(const Json& j, const std::string& where = "polytope") {
  std::size_t n = size_from_json(detail::field(j, "dim", where), where + ".dim");
  auto pts = int_rows_from_json(detail::field(j, "vertices", where), n, where + ".vertices");
  if (pts.empty()) throw SchemaError(where + ".vertices is empty");
  return LatticePolytope::hull(pts);
}

// {"rows": d, "cols": n, "entries": [[...], ...]}
inline Json to_json(const IntMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json e = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) e.push_back(to_json(m.row(i)));
  j["entries"] = e;
  return j;
}

inline IntMatrix matrix_from_json(const Json& j, const std::string& where = "matrix") {
  std::size_t d = size_from_json(detail::field(j, "rows", where), where + ".rows");
  std::size_t n = size_from_json(detail::field(j, "cols", where), where + ".cols");
  auto rows = int_rows_from_json(detail::field(j, "entries", where), n, where + ".entries");
  if (rows.size() != d) throw SchemaError(where + ".entries must have " + std::to_string(d) + " rows");
  IntMatrix m(d, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < n; ++k) m(i, k) = rows[i][k];
  return m;
}

// A cone is written through generators: its rays followed by both signs of
// each lineality basis vector.
inline Json cone_rays_json(const Cone& c) {
  Json rays = Json::array();
  for (const auto& r : c.rays()) rays.push_back(to_json(r));
  for (const auto& l : c.lineality().basis()) {
    rays.push_back(to_json(l));
    rays.push_back(to_json(negate(l)));
  }
  return rays;
}

// {"dim": n, "k": k, "cones": [{"rays": [...], "mult": m}, ...]}
inline Json to_json(const TropicalCycle& t) {
  Json j;
  j["dim"] = t.ambient_rank();
  j["k"] = t.dim();
  Json cones = Json::array();
  for (const auto& cell : t.cells()) {
    Json c;
    c["rays"] = cone_rays_json(cell.cone);
    c["mult"] = to_json(cell.mult);
    cones.push_back(c);
  }
  j["cones"] = cones;
  return j;
}

inline TropicalCycle cycle_from_json(const Json& j, const std::string& where = "cycle") {
  std::size_t n = size_from_json(detail::field(j, "dim", where), where + ".dim");
  std::size_t k = size_from_json(detail::field(j, "k", where), where + ".k");
  const Json& cones = detail::field(j, "cones", where);
  if (!cones.is_array()) throw SchemaError(where + ".cones must be an array");
  if (k > n) throw SchemaError(where + ".k exceeds " + where + ".dim");
  std::vector<WeightedCone> cells;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    std::string at = where + ".cones[" + std::to_string(i) + "]";
    auto rays = int_rows_from_json(detail::field(cones[i], "rays", at), n, at + ".rays");
    Integer m = integer_from_json(detail::field(cones[i], "mult", at), at + ".mult");
    cells.push_back({Cone::from_generators(rays, {}, n), m});
  }
  return TropicalCycle(n, k, std::move(cells));
}

}  // namespace tropelim::io
