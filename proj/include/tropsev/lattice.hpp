#pragma once

// Planar lattice geometry: points, segments, convex lattice polygons.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropsev/arith.hpp"

namespace tropsev {

struct LatticePoint {
  Integer x;
  Integer y;

  LatticePoint() : x(0), y(0) {}
  LatticePoint(Integer x_, Integer y_) : x(std::move(x_)), y(std::move(y_)) {}
  LatticePoint(long x_, long y_) : x(x_), y(y_) {}

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const LatticePoint& a, const LatticePoint& b) {
    return !(a == b);
  }
  /// Lexicographic on (x, y).
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
    const int c = cmp(a.x, b.x);
    return c != 0 ? c < 0 : a.y < b.y;
  }
  friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
    return {Integer(a.x + b.x), Integer(a.y + b.y)};
  }
  friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
    return {Integer(a.x - b.x), Integer(a.y - b.y)};
  }
  friend LatticePoint operator-(const LatticePoint& a) {
    return {Integer(-a.x), Integer(-a.y)};
  }
  friend LatticePoint operator*(const Integer& k, const LatticePoint& a) {
    return {Integer(k * a.x), Integer(k * a.y)};
  }

  std::string str() const { return "(" + x.get_str() + "," + y.get_str() + ")"; }
};

/// Order by (y, x); the "sweep" order used for faces and edge orientation.
inline bool sweep_less(const LatticePoint& a, const LatticePoint& b) {
  const int c = cmp(a.y, b.y);
  return c != 0 ? c < 0 : a.x < b.x;
}

inline Integer cross(const LatticePoint& u, const LatticePoint& v) {
  return u.x * v.y - u.y * v.x;
}

inline Integer dot(const LatticePoint& u, const LatticePoint& v) {
  return u.x * v.x + u.y * v.y;
}

/// Sign of the turn a -> b -> c (positive: counterclockwise).
inline int orientation(const LatticePoint& a, const LatticePoint& b,
                       const LatticePoint& c) {
  return sign(Integer(cross(b - a, c - a)));
}

/// Primitive vector in the direction of v (v nonzero).
inline LatticePoint primitive(const LatticePoint& v) {
  const Integer g = gcd(v.x, v.y);
  return {Integer(v.x / g), Integer(v.y / g)};
}

struct Segment {
  LatticePoint a;
  LatticePoint b;

  friend bool operator==(const Segment& s, const Segment& t) {
    return s.a == t.a && s.b == t.b;
  }
  friend bool operator<(const Segment& s, const Segment& t) {
    if (s.a != t.a) return s.a < t.a;
    return s.b < t.b;
  }
  /// Same segment with endpoints in sweep order.
  Segment normalized() const {
    return sweep_less(b, a) ? Segment{b, a} : *this;
  }
};

/// gcd(|dx|, |dy|); the number of primitive steps along the segment.
inline Integer lattice_length(const Segment& s) {
  if (s.a == s.b) throw DegenerateSegment("segment endpoints coincide at " + s.a.str());
  return gcd(Integer(s.b.x - s.a.x), Integer(s.b.y - s.a.y));
}

/// True when p lies on the closed segment [a, b].
inline bool on_segment(const LatticePoint& p, const LatticePoint& a,
                       const LatticePoint& b) {
  if (orientation(a, b, p) != 0) return false;
  return sign(Integer(dot(p - a, b - a))) >= 0 && sign(Integer(dot(p - b, a - b))) >= 0;
}

/// True when p lies on the open segment (a, b).
inline bool in_segment_interior(const LatticePoint& p, const LatticePoint& a,
                                const LatticePoint& b) {
  return p != a && p != b && on_segment(p, a, b);
}

/// Lattice points of the closed segment, from a to b.
inline std::vector<LatticePoint> segment_points(const Segment& s) {
  const Integer n = lattice_length(s);
  const LatticePoint step = primitive(s.b - s.a);
  std::vector<LatticePoint> out;
  for (Integer k = 0; k <= n; ++k) out.push_back(s.a + Integer(k) * step);
  return out;
}

/// Convex hull in canonical form: counterclockwise, no collinear vertices,
/// starting at the lexicographically least vertex. Returns fewer than three
/// points when the input is degenerate.
inline std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orientation(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

/// A two-dimensional convex lattice polygon. Vertices are kept in canonical
/// order, so two polygons are equal iff their vertex lists are equal. The
/// lattice point lists are computed eagerly and sorted lexicographically.
class LatticePolygon {
 public:
  LatticePolygon() = default;

  /// Convex hull of the given points; throws InvalidPolygon when the hull is
  /// not two-dimensional.
  explicit LatticePolygon(std::vector<LatticePoint> points) {
    vertices_ = convex_hull(std::move(points));
    if (vertices_.size() < 3)
      throw InvalidPolygon("convex hull is not two-dimensional");
    twice_area_ = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      twice_area_ += cross(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
    enumerate_points();
  }

  static LatticePolygon from_vertices(std::initializer_list<std::pair<long, long>> vs) {
    std::vector<LatticePoint> pts;
    for (auto [x, y] : vs) pts.emplace_back(x, y);
    return LatticePolygon(std::move(pts));
  }

  /// The standard simplex scaled by d: conv{(0,0),(d,0),(0,d)}.
  static LatticePolygon simplex(long d) {
    return from_vertices({{0, 0}, {d, 0}, {0, d}});
  }

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<LatticePoint>& lattice_points() const { return points_; }
  const std::vector<LatticePoint>& boundary_points() const { return boundary_; }
  const std::vector<LatticePoint>& interior_points() const { return interior_; }
  const Integer& twice_area() const { return twice_area_; }

  std::optional<std::size_t> index_of(const LatticePoint& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - points_.begin());
  }

  /// Polygon edges in counterclockwise order.
  std::vector<Segment> edges() const {
    std::vector<Segment> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      out.push_back({vertices_[i], vertices_[(i + 1) % vertices_.size()]});
    return out;
  }

  bool contains(const LatticePoint& p) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (orientation(vertices_[i], vertices_[(i + 1) % vertices_.size()], p) < 0)
        return false;
    return true;
  }
  bool strictly_contains(const LatticePoint& p) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (orientation(vertices_[i], vertices_[(i + 1) % vertices_.size()], p) <= 0)
        return false;
    return true;
  }
  bool on_boundary(const LatticePoint& p) const {
    return contains(p) && !strictly_contains(p);
  }
  bool is_vertex(const LatticePoint& p) const {
    return std::find(vertices_.begin(), vertices_.end(), p) != vertices_.end();
  }

  bool is_triangle() const { return vertices_.size() == 3; }
  bool is_parallelogram() const {
    return vertices_.size() == 4 &&
           vertices_[1] - vertices_[0] == vertices_[2] - vertices_[3];
  }

  /// Centroid of the vertices scaled by the vertex count (kept integral).
  LatticePoint vertex_sum() const {
    LatticePoint s;
    for (const auto& v : vertices_) s = s + v;
    return s;
  }

  friend bool operator==(const LatticePolygon& p, const LatticePolygon& q) {
    return p.vertices_ == q.vertices_;
  }
  friend bool operator!=(const LatticePolygon& p, const LatticePolygon& q) {
    return !(p == q);
  }
  friend bool operator<(const LatticePolygon& p, const LatticePolygon& q) {
    return std::lexicographical_compare(p.vertices_.begin(), p.vertices_.end(),
                                        q.vertices_.begin(), q.vertices_.end());
  }

  std::string str() const {
    std::string s = "conv{";
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      s += (i ? "," : "") + vertices_[i].str();
    return s + "}";
  }

 private:
  void enumerate_points() {
    Integer xmin = vertices_[0].x, xmax = xmin, ymin = vertices_[0].y, ymax = ymin;
    for (const auto& v : vertices_) {
      if (v.x < xmin) xmin = v.x;
      if (v.x > xmax) xmax = v.x;
      if (v.y < ymin) ymin = v.y;
      if (v.y > ymax) ymax = v.y;
    }
    for (Integer x = xmin; x <= xmax; ++x) {
      for (Integer y = ymin; y <= ymax; ++y) {
        LatticePoint p(x, y);
        if (!contains(p)) continue;
        points_.push_back(p);
        (strictly_contains(p) ? interior_ : boundary_).push_back(p);
      }
    }
  }

  std::vector<LatticePoint> vertices_;
  std::vector<LatticePoint> points_;
  std::vector<LatticePoint> boundary_;
  std::vector<LatticePoint> interior_;
  Integer twice_area_;
};

/// Shoelace value; for a triangle with edge vectors u, v this is |det(u, v)|.
inline Integer twice_area(const LatticePolygon& p) { return p.twice_area(); }

/// True when the interiors of two convex polygons intersect (separating axis
/// test over the edge normals of both).
inline bool interiors_overlap(const LatticePolygon& p, const LatticePolygon& q) {
  auto separated_by_edges_of = [](const LatticePolygon& a, const LatticePolygon& b) {
    const auto& av = a.vertices();
    for (std::size_t i = 0; i < av.size(); ++i) {
      const auto& s = av[i];
      const auto& t = av[(i + 1) % av.size()];
      bool all_outside = true;
      for (const auto& v : b.vertices())
        if (orientation(s, t, v) > 0) {
          all_outside = false;
          break;
        }
      if (all_outside) return true;
    }
    return false;
  };
  return !separated_by_edges_of(p, q) && !separated_by_edges_of(q, p);
}

/// Minkowski sum of two convex polygons.
inline LatticePolygon minkowski_sum(const LatticePolygon& p, const LatticePolygon& q) {
  std::vector<LatticePoint> sums;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  return LatticePolygon(std::move(sums));
}

}  // namespace tropsev
