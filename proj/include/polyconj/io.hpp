#pragma once

// JSON forms of the core values. Rationals are always strings ("p/q" or
// "p"); extended values add "+inf" / "-inf". Integer JSON numbers are
// accepted on input as a convenience.

#include <string>
#include <vector>

#include <json.hpp>

#include "polyconj/linalg.hpp"
#include "polyconj/mapping.hpp"
#include "polyconj/plfunc.hpp"
#include "polyconj/polyhedron.hpp"
#include "polyconj/support.hpp"

namespace polyconj::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return to_string(r); }
inline Json to_json(const ExtReal& x) { return to_string(x); }

inline Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const Rational& x : v) out.push_back(to_string(x));
  return out;
}

inline Json to_json(const Mat& M) {
  Json out = Json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) out.push_back(to_json(M.row_vec(i)));
  return out;
}

inline Json to_json(const Polyhedron& P) {
  return Json{{"dim", P.dim()}, {"A", to_json(P.A())}, {"b", to_json(P.b())}};
}

inline Json to_json(const PolyMap& F) { return Json{{"n", F.n()}, {"p", F.p()}, {"graph", to_json(F.graph())}}; }

inline Json to_json(const PLFunction& f) {
  Json pieces = Json::array();
  for (const AffinePiece& pc : f.pieces()) pieces.push_back(Json{{"c", to_json(pc.c)}, {"d", to_json(pc.d)}});
  return Json{{"n", f.n()}, {"pieces", pieces}, {"dom", to_json(f.dom())}};
}

template <class T>
Json to_json(const std::vector<T>& xs) {
  Json out = Json::array();
  for (const T& x : xs) out.push_back(to_json(x));
  return out;
}

// ---------------------------------------------------------------------------

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

inline Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(mpz_class(j.dump(), 10));
  throw InputError(where + ": expected a rational string");
}

inline std::size_t natural_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw InputError(where + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

inline Vec vec_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

inline Mat mat_from_json(const Json& j, std::size_t cols, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of rows");
  Mat M(0, cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    Vec r = vec_from_json(j[i], w);
    require_dims(r.size() == cols, w + " has " + std::to_string(r.size()) + " entries, expected " + std::to_string(cols));
    M.append_row(r);
  }
  return M;
}

/// A matrix whose column count is read from its first row.
inline Mat matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw InputError(where + ": expected a nonempty array of rows");
  return mat_from_json(j, j[0].size(), where);
}

inline Polyhedron polyhedron_from_json(const Json& j, const std::string& where) {
  const std::size_t dim = natural_from_json(field(j, "dim", where), where + ".dim");
  Mat A = mat_from_json(field(j, "A", where), dim, where + ".A");
  Vec b = vec_from_json(field(j, "b", where), where + ".b");
  require_dims(b.size() == A.rows(), where + ": b has " + std::to_string(b.size()) + " entries for " +
                                         std::to_string(A.rows()) + " rows");
  return Polyhedron(std::move(A), std::move(b));
}

inline PolyMap polymap_from_json(const Json& j, const std::string& where) {
  const std::size_t n = natural_from_json(field(j, "n", where), where + ".n");
  const std::size_t p = natural_from_json(field(j, "p", where), where + ".p");
  Polyhedron g = polyhedron_from_json(field(j, "graph", where), where + ".graph");
  require_dims(g.dim() == n + p, where + ": graph dim must equal n + p");
  return PolyMap(n, p, std::move(g));
}

inline PLFunction plfunction_from_json(const Json& j, const std::string& where) {
  const std::size_t n = natural_from_json(field(j, "n", where), where + ".n");
  const Json& pj = field(j, "pieces", where);
  if (!pj.is_array()) throw InputError(where + ".pieces: expected an array");
  std::vector<AffinePiece> pieces;
  for (std::size_t i = 0; i < pj.size(); ++i) {
    const std::string w = where + ".pieces[" + std::to_string(i) + "]";
    Vec c = vec_from_json(field(pj[i], "c", w), w + ".c");
    require_dims(c.size() == n, w + ".c");
    pieces.push_back({std::move(c), rational_from_json(field(pj[i], "d", w), w + ".d")});
  }
  Polyhedron dom = j.contains("dom") ? polyhedron_from_json(j["dom"], where + ".dom") : Polyhedron::whole_space(n);
  require_dims(dom.dim() == n, where + ".dom");
  return PLFunction(std::move(pieces), std::move(dom));
}

}  // namespace polyconj::io
