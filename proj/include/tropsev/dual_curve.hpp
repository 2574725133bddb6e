#pragma once

// Tropical plane curves (max-plus) dual to regular subdivisions.

#include <vector>

#include "tropsev/subdivision.hpp"

namespace tropsev {

struct PlanePoint {
  Rational x;
  Rational y;

  PlanePoint() : x(0), y(0) {}
  PlanePoint(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {
    x.canonicalize();
    y.canonicalize();
  }
  PlanePoint(long x_, long y_) : x(x_), y(y_) {}

  friend bool operator==(const PlanePoint& a, const PlanePoint& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const PlanePoint& a, const PlanePoint& b) { return !(a == b); }
  friend bool operator<(const PlanePoint& a, const PlanePoint& b) {
    const int c = cmp(a.x, b.x);
    return c != 0 ? c < 0 : a.y < b.y;
  }
  std::string str() const { return "(" + x.get_str() + "," + y.get_str() + ")"; }
};

inline Rational pairing(const LatticePoint& a, const PlanePoint& q) { return q.x * a.x + q.y * a.y; }

struct CurveEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  LatticePoint direction;  // primitive, from -> to
  Integer weight;
  std::size_t dual_edge = 0;
};

struct CurveRay {
  std::size_t from = 0;
  LatticePoint direction;  // primitive, pointing away from the polygon
  Integer weight;
  std::size_t dual_edge = 0;
};

struct TropicalCurve {
  std::vector<PlanePoint> vertices;  // one per face of the dual subdivision
  std::vector<CurveEdge> edges;
  std::vector<CurveRay> rays;
  Subdivision dual;
};

/// Curve with vertex -grad(cc(w)|F) for each face F, a bounded edge per
/// interior edge and a ray per boundary edge, weighted by lattice length.
inline TropicalCurve dualize(const LatticePolygon& polygon, const WeightFunction& w) {
  const auto hull = concave_hull(polygon, w);
  TropicalCurve c;
  c.dual = hull.subdivision;
  for (const auto& fn : hull.face_functions) c.vertices.emplace_back(-fn.gx, -fn.gy);
  const auto& s = c.dual;
  for (std::size_t e = 0; e < s.edges().size(); ++e) {
    const auto& edge = s.edges()[e];
    const Integer len = lattice_length(edge.segment);
    const LatticePoint along = primitive(edge.segment.b - edge.segment.a);
    LatticePoint normal(Integer(-along.y), along.x);
    if (edge.interior) {
      const auto f0 = static_cast<std::size_t>(edge.faces[0]);
      const auto f1 = static_cast<std::size_t>(edge.faces[1]);
      // The curve edge leaves f0's vertex away from f0's side of the dual edge.
      if (sign(Integer(dot(normal, s.opposite_vertex(f0, e) - edge.segment.a))) > 0) normal = -normal;
      c.edges.push_back({f0, f1, normal, len, e});
    } else {
      const auto f0 = static_cast<std::size_t>(edge.faces[0]);
      if (sign(Integer(dot(normal, s.opposite_vertex(f0, e) - edge.segment.a))) > 0) normal = -normal;
      c.rays.push_back({f0, normal, len, e});
    }
  }
  return c;
}

/// Weighted primitive directions sum to zero at every vertex.
inline bool check_balancing(const TropicalCurve& c) {
  std::vector<LatticePoint> sum(c.vertices.size());
  for (const auto& e : c.edges) {
    sum[e.from] = sum[e.from] + e.weight * e.direction;
    sum[e.to] = sum[e.to] - e.weight * e.direction;
  }
  for (const auto& r : c.rays) sum[r.from] = sum[r.from] + r.weight * r.direction;
  return std::all_of(sum.begin(), sum.end(), [](const LatticePoint& v) { return v == LatticePoint(0, 0); });
}

/// max_a (a . q + w(a)) is attained at least twice.
inline bool passes_through(const LatticePolygon& polygon, const WeightFunction& w, const PlanePoint& q) {
  const auto& pts = polygon.lattice_points();
  std::optional<Rational> best;
  int count = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Rational v = pairing(pts[i], q) + w.values()[i];
    if (!best || v > *best) {
      best = v;
      count = 1;
    } else if (v == *best) {
      ++count;
    }
  }
  return count >= 2;
}

}  // namespace tropsev
