#pragma once

// JSON reading and writing for every input and report type. Rationals are
// strings "p/q", lattice points are [x, y]; no floats appear anywhere.

#include <json.hpp>

#include <string>
#include <vector>

#include "tropsev/enumeration.hpp"
#include "tropsev/initial_forms.hpp"
#include "tropsev/intersection.hpp"
#include "tropsev/severi.hpp"
#include "tropsev/torus_group.hpp"

namespace tropsev {

using Json = nlohmann::ordered_json;

namespace json_detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError(std::string("expected an object with '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

inline const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  return j;
}

inline Integer integer(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    const Rational q = parse_rational(j.get<std::string>());
    if (!is_integral(q)) throw SchemaError("expected an integer, got " + q.get_str());
    return q.get_num();
  }
  throw SchemaError("expected an integer, got " + j.dump());
}

}  // namespace json_detail

inline Json to_json(const Integer& v) {
  if (fits_int64(v)) return Json(static_cast<long long>(v.get_si()));
  return Json(v.get_str());
}

inline Json to_json(const Rational& q) { return Json(q.get_str()); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(json_detail::integer(j));
  throw SchemaError("expected a rational string \"p/q\", got " + j.dump());
}

inline Json to_json(const LatticePoint& p) { return Json::array({to_json(p.x), to_json(p.y)}); }

inline LatticePoint point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw SchemaError("a lattice point is [x, y], got " + j.dump());
  return {json_detail::integer(j[0]), json_detail::integer(j[1])};
}

inline Json to_json(const PlanePoint& p) { return Json::array({to_json(p.x), to_json(p.y)}); }

inline PlanePoint plane_point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw SchemaError("a point is [x, y], got " + j.dump());
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

inline Json points_json(const std::vector<LatticePoint>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

// Polygon: {"vertices": [[x, y], ...]}

inline Json to_json(const LatticePolygon& p) { return Json{{"vertices", points_json(p.vertices())}}; }

inline LatticePolygon polygon_from_json(const Json& j) {
  std::vector<LatticePoint> pts;
  for (const auto& v : json_detail::array(json_detail::field(j, "vertices"), "vertices"))
    pts.push_back(point_from_json(v));
  return LatticePolygon(std::move(pts));
}

// Weight: {"values": [[x, y, "p/q"], ...]}

inline Json to_json(const WeightFunction& w) {
  Json values = Json::array();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& p = w.domain()[i];
    values.push_back(Json::array({to_json(p.x), to_json(p.y), to_json(w.values()[i])}));
  }
  return Json{{"values", values}};
}

inline WeightFunction weight_from_json(const LatticePolygon& polygon, const Json& j) {
  std::vector<std::pair<LatticePoint, Rational>> pairs;
  for (const auto& v : json_detail::array(json_detail::field(j, "values"), "values")) {
    if (!v.is_array() || v.size() != 3) throw SchemaError("a weight entry is [x, y, \"p/q\"], got " + v.dump());
    pairs.emplace_back(LatticePoint(json_detail::integer(v[0]), json_detail::integer(v[1])), rational_from_json(v[2]));
  }
  return WeightFunction::from_pairs(polygon, pairs);
}

// Subdivision: {"faces": [[[x, y], ...], ...], "flags": {...}, "rank": n}

inline Json to_json(const SubdivisionFlags& f) {
  return Json{{"triangular", f.triangular}, {"nodal", f.nodal}, {"simple", f.simple}};
}

inline Json to_json(const Subdivision& s) {
  Json faces = Json::array();
  for (const auto& f : s.faces()) faces.push_back(points_json(f.vertices()));
  Json out{{"faces", faces}, {"flags", to_json(s.flags())}};
  if (is_regular(s).regular) out["rank"] = rank(s);
  return out;
}

inline Subdivision subdivision_from_json(const LatticePolygon& polygon, const Json& j) {
  std::vector<LatticePolygon> faces;
  for (const auto& f : json_detail::array(json_detail::field(j, "faces"), "faces")) {
    std::vector<LatticePoint> pts;
    for (const auto& p : json_detail::array(f, "face")) pts.push_back(point_from_json(p));
    faces.emplace_back(std::move(pts));
  }
  return Subdivision::from_faces(polygon, std::move(faces));
}

// Polynomial: {"terms": [{"a": [i, j], "coeff": [[["re", "im"], "exp"], ...]}, ...]}
// A single Puiseux term may also be given unwrapped as [["re", "im"], "exp"].

inline Json to_json(const GaussianRational& c) { return Json::array({to_json(c.re), to_json(c.im)}); }

inline GaussianRational gaussian_from_json(const Json& j) {
  if (j.is_array() && j.size() == 2) return {rational_from_json(j[0]), rational_from_json(j[1])};
  return {rational_from_json(j)};
}

inline Json to_json(const PuiseuxScalar& s) {
  Json out = Json::array();
  for (const auto& [e, c] : s.terms()) out.push_back(Json::array({to_json(c), to_json(e)}));
  return out;
}

inline PuiseuxScalar puiseux_from_json(const Json& j) {
  if (!j.is_array()) return PuiseuxScalar(gaussian_from_json(j));
  auto is_term = [](const Json& t) { return t.is_array() && t.size() == 2 && !t[1].is_array(); };
  std::vector<PuiseuxScalar::Term> terms;
  if (is_term(j) && j[0].is_array()) {
    terms.emplace_back(rational_from_json(j[1]), gaussian_from_json(j[0]));
  } else {
    for (const auto& t : j) {
      if (!is_term(t)) throw SchemaError("a coefficient term is [[\"re\", \"im\"], \"exp\"], got " + t.dump());
      terms.emplace_back(rational_from_json(t[1]), gaussian_from_json(t[0]));
    }
  }
  return PuiseuxScalar(std::move(terms));
}

inline Json to_json(const LaurentPoly& f) {
  Json terms = Json::array();
  for (const auto& [a, c] : f.terms()) terms.push_back(Json{{"a", to_json(a)}, {"coeff", to_json(c)}});
  return Json{{"terms", terms}};
}

inline Json to_json(const ComplexPoly& f) {
  Json terms = Json::array();
  for (const auto& [a, c] : f.terms())
    terms.push_back(Json{{"a", to_json(a)}, {"coeff", Json::array({Json::array({to_json(c), "0"})})}});
  return Json{{"terms", terms}};
}

inline LaurentPoly polynomial_from_json(const Json& j) {
  LaurentPoly f;
  for (const auto& t : json_detail::array(json_detail::field(j, "terms"), "terms"))
    f.add(point_from_json(json_detail::field(t, "a")), puiseux_from_json(json_detail::field(t, "coeff")));
  return f;
}

// Tropical curve.

inline Json to_json(const TropicalCurve& c) {
  Json vertices = Json::array(), edges = Json::array(), rays = Json::array();
  for (const auto& v : c.vertices) vertices.push_back(to_json(v));
  for (const auto& e : c.edges)
    edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"direction", to_json(e.direction)},
                         {"weight", to_json(e.weight)}});
  for (const auto& r : c.rays)
    rays.push_back(Json{{"from", r.from}, {"direction", to_json(r.direction)}, {"weight", to_json(r.weight)}});
  Json out{{"vertices", vertices}, {"edges", edges}, {"rays", rays}};
  if (!c.dual.faces().empty()) {
    out["polygon"] = to_json(c.dual.polygon());
    out["dual"] = to_json(c.dual);
  }
  return out;
}

inline TropicalCurve curve_from_json(const Json& j) {
  TropicalCurve c;
  for (const auto& v : json_detail::array(json_detail::field(j, "vertices"), "vertices"))
    c.vertices.push_back(plane_point_from_json(v));
  auto index = [&](const Json& v) {
    const Integer i = json_detail::integer(v);
    if (sign(i) < 0 || i >= static_cast<long>(c.vertices.size()))
      throw SchemaError("vertex index " + i.get_str() + " out of range");
    return static_cast<std::size_t>(i.get_si());
  };
  auto weight = [](const Json& v) {
    const Integer w = json_detail::integer(v);
    if (sign(w) <= 0) throw SchemaError("weights must be positive");
    return w;
  };
  auto direction = [](const Json& v) {
    const LatticePoint d = point_from_json(v);
    if (d == LatticePoint(0, 0)) throw SchemaError("zero direction");
    return d;
  };
  for (const auto& e : json_detail::array(json_detail::field(j, "edges"), "edges")) {
    CurveEdge ce;
    ce.from = index(json_detail::field(e, "from"));
    ce.to = index(json_detail::field(e, "to"));
    ce.direction = direction(json_detail::field(e, "direction"));
    ce.weight = weight(json_detail::field(e, "weight"));
    c.edges.push_back(ce);
  }
  for (const auto& r : json_detail::array(json_detail::field(j, "rays"), "rays")) {
    CurveRay cr;
    cr.from = index(json_detail::field(r, "from"));
    cr.direction = direction(json_detail::field(r, "direction"));
    cr.weight = weight(json_detail::field(r, "weight"));
    c.rays.push_back(cr);
  }
  return c;
}

// Reports.

inline Json integer_rows(const std::vector<std::vector<Integer>>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row = Json::array();
    for (const auto& v : r) row.push_back(to_json(v));
    out.push_back(row);
  }
  return out;
}

inline Json to_json(const GroupPresentation& g) {
  Json snf = Json::array(), special = Json::array();
  for (const auto& d : g.snf) snf.push_back(to_json(d));
  for (const auto& set : g.special_points) special.push_back(Json{{"face", set.face}, {"points", points_json(set.points)}});
  return Json{{"matrix", integer_rows(g.matrix.to_rows())},
              {"row_edges", g.row_edges},
              {"snf", snf},
              {"l_V", to_json(g.l_V)},
              {"dim_G", g.dim_G},
              {"special_points", special}};
}

inline Json edge_classes_json(const Subdivision& s, const std::vector<std::vector<std::size_t>>& classes) {
  Json out = Json::array();
  for (const auto& cls : classes) {
    Json c = Json::array();
    for (std::size_t e : cls) c.push_back(points_json({s.edges()[e].segment.a, s.edges()[e].segment.b}));
    out.push_back(c);
  }
  return out;
}

inline Json to_json(const CVectorReport& r) {
  return Json{{"omega", to_json(r.omega)},
              {"subdivision", to_json(r.subdivision)},
              {"rank", r.rank},
              {"dimension", r.dimension},
              {"verdict", to_string(r.verdict)},
              {"in_support", r.in_support},
              {"assumed_regular_point", r.assumed_regular_point},
              {"l_V", to_json(r.l_V)},
              {"m_sev", to_json(r.m_sev)},
              {"mu", to_json(r.mu)},
              {"xi", to_json(r.xi)},
              {"edge_classes", edge_classes_json(r.subdivision, r.edge_classes)}};
}

inline Json to_json(const IntersectionReport& r) {
  Json pts = Json::array();
  for (const auto& p : r.points) pts.push_back(Json{{"location", to_json(p.location)}, {"multiplicity", to_json(p.multiplicity)}});
  return Json{{"points", pts}, {"total", to_json(r.total)}, {"displacement", to_json(r.displacement)}};
}

inline const char* to_string(CountStrategy s) {
  switch (s) {
    case CountStrategy::SubdivisionSolve: return "subdivision";
    case CountStrategy::PathCount: return "path";
    case CountStrategy::Both: return "both";
  }
  return "?";
}

inline CountStrategy strategy_from_string(const std::string& s) {
  if (s == "subdivision") return CountStrategy::SubdivisionSolve;
  if (s == "path") return CountStrategy::PathCount;
  if (s == "both") return CountStrategy::Both;
  throw SchemaError("strategy must be subdivision, path or both, got '" + s + "'");
}

inline Json to_json(const PointConfiguration& c) {
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back(to_json(p));
  return Json{{"points", pts}, {"seed", c.seed}, {"stretched", c.stretched}, {"scale", to_json(c.scale)},
              {"stretch", to_json(c.stretch)}};
}

inline Json to_json(const CountedSolution& s) {
  Json through = Json::array();
  for (std::size_t e : s.assignment) through.push_back(points_json({s.subdivision.edges()[e].segment.a,
                                                                     s.subdivision.edges()[e].segment.b}));
  return Json{{"omega", to_json(s.omega)}, {"subdivision", to_json(s.subdivision)}, {"edges_through_points", through},
              {"mu", to_json(s.mu)}};
}

inline Json to_json(const SeveriDegreeReport& r) {
  Json sols = Json::array();
  for (const auto& s : r.solutions) sols.push_back(to_json(s));
  Json out{{"dimension", r.dimension}, {"strategy", to_string(r.strategy)}, {"configuration", to_json(r.configuration)}};
  out["subdivisions_examined"] = r.subdivisions_examined;
  out["subdivision_degree"] = r.subdivision_degree ? to_json(*r.subdivision_degree) : Json(nullptr);
  out["path_degree"] = r.path_degree ? to_json(*r.path_degree) : Json(nullptr);
  out["degree"] = to_json(r.degree);
  out["solutions"] = sols;
  return out;
}

/// Two-space indentation, with arrays of scalars kept on one line.
inline void dump_compact(const Json& j, std::string& out, int indent = 0) {
  // Scalars and points stay inline.
  auto inline_item = [](const Json& e) {
    if (!e.is_structured()) return true;
    return e.is_array() && e.size() == 2 && !e[0].is_structured() && !e[1].is_structured();
  };
  auto scalar_array = [&](const Json& a) {
    for (const auto& e : a)
      if (!inline_item(e)) return false;
    return true;
  };
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      out += pad + Json(it.key()).dump() + ": ";
      dump_compact(it.value(), out, indent + 2);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array() && !j.empty() && !scalar_array(j)) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      dump_compact(j[k], out, indent + 2);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else if (j.is_array() && !j.empty()) {
    out += "[";
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (k) out += ", ";
      dump_compact(j[k], out, indent);
    }
    out += "]";
  } else {
    out += j.dump();
  }
}

inline std::string dump_compact(const Json& j) {
  std::string out;
  dump_compact(j, out);
  return out + "\n";
}

}  // namespace tropsev
