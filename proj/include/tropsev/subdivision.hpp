#pragma once

// Regular subdivisions of lattice polygons: construction from a weight
// function via the upper hull of the lifted points, classification,
// rank, regularity certificates and the oriented adjacency graph.

#include <array>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "tropsev/lattice.hpp"
#include "tropsev/lp.hpp"

namespace tropsev {

/// A rational value at every lattice point of a polygon.
class WeightFunction {
 public:
  WeightFunction() = default;
  WeightFunction(const LatticePolygon& polygon, std::vector<Rational> values)
      : domain_(polygon.lattice_points()), values_(std::move(values)) {
    if (values_.size() != domain_.size())
      throw IncompleteWeight("expected " + std::to_string(domain_.size()) + " values, got " +
                             std::to_string(values_.size()));
    for (auto& v : values_) v.canonicalize();
  }

  static WeightFunction zero(const LatticePolygon& polygon) {
    return {polygon, std::vector<Rational>(polygon.lattice_points().size(), Rational(0))};
  }

  static WeightFunction from_pairs(const LatticePolygon& polygon,
                                   const std::vector<std::pair<LatticePoint, Rational>>& pairs) {
    std::vector<std::optional<Rational>> slot(polygon.lattice_points().size());
    for (const auto& [p, v] : pairs) {
      auto idx = polygon.index_of(p);
      if (!idx) throw IncompleteWeight("point " + p.str() + " is not a lattice point of " + polygon.str());
      slot[*idx] = v;
    }
    std::vector<Rational> values;
    for (std::size_t i = 0; i < slot.size(); ++i) {
      if (!slot[i])
        throw IncompleteWeight("no value at " + polygon.lattice_points()[i].str());
      values.push_back(*slot[i]);
    }
    return {polygon, std::move(values)};
  }

  /// Values given in lexicographic order of the lattice points.
  static WeightFunction from_values(const LatticePolygon& polygon, std::initializer_list<long> vs) {
    std::vector<Rational> values;
    for (long v : vs) values.emplace_back(v);
    return {polygon, std::move(values)};
  }

  const std::vector<LatticePoint>& domain() const { return domain_; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  const Rational& operator()(const LatticePoint& p) const {
    auto it = std::lower_bound(domain_.begin(), domain_.end(), p);
    if (it == domain_.end() || *it != p)
      throw IncompleteWeight("weight function undefined at " + p.str());
    return values_[static_cast<std::size_t>(it - domain_.begin())];
  }

  bool integral() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return is_integral(v); });
  }

  /// psi + c + g . a
  WeightFunction plus_affine(const Rational& c, const Rational& gx, const Rational& gy) const {
    WeightFunction w = *this;
    for (std::size_t i = 0; i < domain_.size(); ++i)
      w.values_[i] += c + gx * domain_[i].x + gy * domain_[i].y;
    return w;
  }
  WeightFunction scaled(const Rational& k) const {
    WeightFunction w = *this;
    for (auto& v : w.values_) v *= k;
    return w;
  }

  friend bool operator==(const WeightFunction& a, const WeightFunction& b) {
    return a.domain_ == b.domain_ && a.values_ == b.values_;
  }

 private:
  std::vector<LatticePoint> domain_;
  std::vector<Rational> values_;
};

/// Affine function g . p + c on the plane.
struct AffineFunction {
  Rational gx, gy, c;

  Rational operator()(const LatticePoint& p) const { return gx * p.x + gy * p.y + c; }

  /// The affine function taking values fa, fb, fc at non-collinear a, b, c.
  static AffineFunction through(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                                const Rational& fa, const Rational& fb, const Rational& fc) {
    const LatticePoint u = b - a, v = c - a;
    const Rational det(cross(u, v));
    if (det == 0) throw InvariantBreach("affine interpolation through collinear points");
    const Rational du = fb - fa, dv = fc - fa;
    AffineFunction f;
    f.gx = (du * v.y - dv * u.y) / det;
    f.gy = (Rational(u.x) * dv - Rational(v.x) * du) / det;
    f.c = fa - f.gx * a.x - f.gy * a.y;
    return f;
  }
};

/// Coordinates of p in the affine frame (a; b - a, c - a).
inline std::pair<Rational, Rational> affine_coordinates(const LatticePoint& p, const LatticePoint& a,
                                                        const LatticePoint& b, const LatticePoint& c) {
  const LatticePoint u = b - a, v = c - a, w = p - a;
  const Integer det = cross(u, v);
  return {make_rational(cross(w, v), det), make_rational(cross(u, w), det)};
}

struct SubdivisionFlags {
  bool triangular = false;
  bool nodal = false;
  bool simple = false;

  friend bool operator==(const SubdivisionFlags&, const SubdivisionFlags&) = default;
};

struct SubdivisionEdge {
  Segment segment;                 // endpoints in sweep order
  bool interior = false;
  std::array<int, 2> faces{-1, -1};  // faces[1] == -1 on the boundary
};

/// A polyhedral subdivision of a lattice polygon into convex lattice
/// polygons meeting face to face.
class Subdivision {
 public:
  Subdivision() = default;

  /// Validates that the faces tile the polygon face to face. Faces are
  /// reordered by centroid (y first, then x).
  static Subdivision from_faces(const LatticePolygon& polygon, std::vector<LatticePolygon> faces) {
    Subdivision s;
    s.polygon_ = polygon;
    std::sort(faces.begin(), faces.end(), [](const LatticePolygon& p, const LatticePolygon& q) {
      const LatticePoint sp = p.vertex_sum(), sq = q.vertex_sum();
      const Integer np(static_cast<long>(p.size())), nq(static_cast<long>(q.size()));
      const Integer ly = sp.y * nq, ry = sq.y * np;
      if (ly != ry) return ly < ry;
      return sp.x * nq < sq.x * np;
    });
    s.faces_ = std::move(faces);
    s.build();
    return s;
  }

  const LatticePolygon& polygon() const { return polygon_; }
  const std::vector<LatticePolygon>& faces() const { return faces_; }
  const std::vector<SubdivisionEdge>& edges() const { return edges_; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const SubdivisionFlags& flags() const { return flags_; }
  const std::vector<std::size_t>& triangles() const { return triangles_; }
  const std::vector<std::size_t>& parallelograms() const { return parallelograms_; }
  /// Edge indices of face f, in the face's counterclockwise order.
  const std::vector<std::size_t>& face_edges(std::size_t f) const { return face_edges_[f]; }

  std::size_t interior_edge_count() const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [](const SubdivisionEdge& e) { return e.interior; }));
  }

  std::optional<std::size_t> edge_index(const Segment& seg) const {
    const Segment n = seg.normalized();
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (edges_[i].segment == n) return i;
    return std::nullopt;
  }

  bool is_vertex(const LatticePoint& p) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), p);
  }

  /// Index of a face containing p (closed), lowest index first.
  std::optional<std::size_t> face_containing(const LatticePoint& p) const {
    for (std::size_t f = 0; f < faces_.size(); ++f)
      if (faces_[f].contains(p)) return f;
    return std::nullopt;
  }

  /// A vertex of face f that is not on the line through edge e.
  const LatticePoint& opposite_vertex(std::size_t f, std::size_t e) const {
    const auto& seg = edges_[e].segment;
    for (const auto& v : faces_[f].vertices())
      if (orientation(seg.a, seg.b, v) != 0) return v;
    throw InvariantBreach("face has no vertex off its own edge");
  }

  friend bool operator==(const Subdivision& a, const Subdivision& b) {
    return a.polygon_ == b.polygon_ && a.faces_ == b.faces_;
  }

 private:
  void build() {
    Integer area_sum = 0;
    for (const auto& f : faces_) {
      for (const auto& v : f.vertices())
        if (!polygon_.contains(v))
          throw InvalidSubdivision("face " + f.str() + " leaves the polygon");
      area_sum += f.twice_area();
    }
    if (area_sum != polygon_.twice_area())
      throw InvalidSubdivision("face areas do not add up to the polygon area");
    for (std::size_t i = 0; i < faces_.size(); ++i)
      for (std::size_t j = i + 1; j < faces_.size(); ++j) {
        if (interiors_overlap(faces_[i], faces_[j]))
          throw InvalidSubdivision("faces " + faces_[i].str() + " and " + faces_[j].str() + " overlap");
        for (const auto* pair : {&faces_[i], &faces_[j]}) {
          const auto& other = (pair == &faces_[i]) ? faces_[j] : faces_[i];
          for (const auto& v : pair->vertices())
            for (const auto& e : other.edges())
              if (in_segment_interior(v, e.a, e.b))
                throw InvalidSubdivision("vertex " + v.str() + " lies inside an edge of " + other.str());
        }
      }

    std::map<Segment, std::size_t> index;
    face_edges_.assign(faces_.size(), {});
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      for (const auto& e : faces_[f].edges()) {
        const Segment n = e.normalized();
        auto [it, fresh] = index.emplace(n, edges_.size());
        if (fresh) {
          SubdivisionEdge se;
          se.segment = n;
          se.faces = {static_cast<int>(f), -1};
          edges_.push_back(se);
        } else {
          auto& se = edges_[it->second];
          if (se.faces[1] != -1) throw InvalidSubdivision("edge shared by more than two faces");
          se.faces[1] = static_cast<int>(f);
          se.interior = true;
        }
        face_edges_[f].push_back(it->second);
      }
    }
    for (const auto& e : edges_)
      if (!e.interior && !on_polygon_boundary(e.segment))
        throw InvalidSubdivision("unmatched edge in the interior of the polygon");

    // Canonical edge order: by segment (sweep-normalised), then remap.
    std::vector<std::size_t> order(edges_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto& sa = edges_[a].segment;
      const auto& sb = edges_[b].segment;
      if (sa.a != sb.a) return sweep_less(sa.a, sb.a);
      return sweep_less(sa.b, sb.b);
    });
    std::vector<std::size_t> rank(order.size());
    std::vector<SubdivisionEdge> sorted;
    for (std::size_t i = 0; i < order.size(); ++i) {
      rank[order[i]] = i;
      sorted.push_back(edges_[order[i]]);
    }
    edges_ = std::move(sorted);
    for (auto& fe : face_edges_)
      for (auto& e : fe) e = rank[e];

    std::set<LatticePoint> verts;
    for (const auto& f : faces_)
      for (const auto& v : f.vertices()) verts.insert(v);
    vertices_.assign(verts.begin(), verts.end());

    flags_.triangular = true;
    flags_.nodal = true;
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      if (faces_[f].is_triangle()) {
        triangles_.push_back(f);
      } else {
        flags_.triangular = false;
        if (faces_[f].is_parallelogram()) parallelograms_.push_back(f);
        else flags_.nodal = false;
      }
    }
    flags_.simple = std::all_of(polygon_.boundary_points().begin(), polygon_.boundary_points().end(),
                                [&](const LatticePoint& p) { return verts.count(p) > 0; });
  }

  bool on_polygon_boundary(const Segment& s) const {
    for (const auto& e : polygon_.edges())
      if (on_segment(s.a, e.a, e.b) && on_segment(s.b, e.a, e.b)) return true;
    return false;
  }

  LatticePolygon polygon_;
  std::vector<LatticePolygon> faces_;
  std::vector<SubdivisionEdge> edges_;
  std::vector<std::vector<std::size_t>> face_edges_;
  std::vector<LatticePoint> vertices_;
  SubdivisionFlags flags_;
  std::vector<std::size_t> triangles_;
  std::vector<std::size_t> parallelograms_;
};

inline SubdivisionFlags classify(const Subdivision& s) { return s.flags(); }

inline Subdivision trivial_subdivision(const LatticePolygon& p) {
  return Subdivision::from_faces(p, {p});
}

// ---------------------------------------------------------------------------
// Concave hull.

struct ConcaveHullResult {
  std::vector<Rational> hull_values;       // aligned with polygon.lattice_points()
  Subdivision subdivision;
  std::vector<LatticePoint> tight_points;  // where the hull meets psi
  std::vector<AffineFunction> face_functions;  // aligned with subdivision.faces()

  const Rational& value_at(const LatticePoint& p) const {
    const auto& pts = subdivision.polygon().lattice_points();
    auto it = std::lower_bound(pts.begin(), pts.end(), p);
    if (it == pts.end() || *it != p) throw IncompleteWeight("no hull value at " + p.str());
    return hull_values[static_cast<std::size_t>(it - pts.begin())];
  }
  WeightFunction as_weight() const { return {subdivision.polygon(), hull_values}; }
};

/// Upper hull of {(a, psi(a))} by gift wrapping: each upper facet is found by
/// rotating a plane about an already known hull edge, starting from the
/// concave chains over the polygon's boundary edges.
inline ConcaveHullResult concave_hull(const LatticePolygon& polygon, const WeightFunction& psi) {
  const auto& pts = polygon.lattice_points();
  if (psi.domain() != pts) throw IncompleteWeight("weight function is defined on a different polygon");
  const auto& val = psi.values();
  const std::size_t n = pts.size();
  auto idx = [&](const LatticePoint& p) { return *polygon.index_of(p); };

  std::deque<std::pair<std::size_t, std::size_t>> queue;
  for (const auto& e : polygon.edges()) {
    const auto chain_pts = segment_points(e);
    std::vector<std::size_t> chain;  // indices into chain_pts of the concave chain
    for (std::size_t k = 0; k < chain_pts.size(); ++k) {
      while (chain.size() >= 2) {
        const std::size_t i = chain[chain.size() - 2], j = chain.back();
        // Drop j if it is on or below the chord from i to k.
        const Rational lhs = (val[idx(chain_pts[j])] - val[idx(chain_pts[i])]) * Rational(long(k - i));
        const Rational rhs = (val[idx(chain_pts[k])] - val[idx(chain_pts[i])]) * Rational(long(j - i));
        if (lhs <= rhs) chain.pop_back();
        else break;
      }
      chain.push_back(k);
    }
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
      queue.emplace_back(idx(chain_pts[chain[k]]), idx(chain_pts[chain[k + 1]]));
  }

  std::set<std::pair<std::size_t, std::size_t>> done;
  std::vector<LatticePolygon> faces;
  std::vector<AffineFunction> planes;
  while (!queue.empty()) {
    auto [u, v] = queue.front();
    queue.pop_front();
    if (done.count({u, v})) continue;
    const LatticePoint& pu = pts[u];
    const LatticePoint& pv = pts[v];
    std::optional<std::size_t> best;
    AffineFunction plane;
    for (std::size_t c = 0; c < n; ++c) {
      if (orientation(pu, pv, pts[c]) <= 0) continue;
      if (!best || val[c] > plane(pts[c])) {
        best = c;
        plane = AffineFunction::through(pu, pv, pts[c], val[u], val[v], val[c]);
      }
    }
    if (!best) throw InvariantBreach("upper hull edge without a facet on its inner side");
    std::vector<LatticePoint> on_plane;
    for (std::size_t c = 0; c < n; ++c)
      if (orientation(pu, pv, pts[c]) >= 0 && val[c] == plane(pts[c])) on_plane.push_back(pts[c]);
    LatticePolygon face(on_plane);
    const auto& fv = face.vertices();
    for (std::size_t i = 0; i < fv.size(); ++i) {
      const std::size_t a = idx(fv[i]), b = idx(fv[(i + 1) % fv.size()]);
      done.insert({a, b});
      const Segment s{fv[i], fv[(i + 1) % fv.size()]};
      bool boundary = false;
      for (const auto& pe : polygon.edges())
        if (on_segment(s.a, pe.a, pe.b) && on_segment(s.b, pe.a, pe.b)) boundary = true;
      if (!boundary && !done.count({b, a})) queue.emplace_back(b, a);
    }
    faces.push_back(std::move(face));
    planes.push_back(plane);
  }

  ConcaveHullResult out;
  std::vector<std::pair<LatticePolygon, AffineFunction>> tagged;
  for (std::size_t i = 0; i < faces.size(); ++i) tagged.emplace_back(faces[i], planes[i]);
  out.subdivision = Subdivision::from_faces(polygon, faces);
  for (const auto& f : out.subdivision.faces())
    for (const auto& [g, pl] : tagged)
      if (g == f) {
        out.face_functions.push_back(pl);
        break;
      }
  out.hull_values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto f = out.subdivision.face_containing(pts[i]);
    out.hull_values[i] = out.face_functions[*f](pts[i]);
    if (out.hull_values[i] < val[i]) throw InvariantBreach("concave hull below the weight");
    if (out.hull_values[i] == val[i]) out.tight_points.push_back(pts[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rank and regularity.

namespace detail {

/// Rows (over all lattice points of the polygon) forcing values to be affine
/// on every face.
inline std::vector<RationalRow> face_affine_rows(const Subdivision& s) {
  const auto& pts = s.polygon().lattice_points();
  std::vector<RationalRow> rows;
  for (const auto& face : s.faces()) {
    const auto& fv = face.vertices();
    const LatticePoint &a = fv[0], &b = fv[1], &c = fv[2];
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& p = pts[i];
      if (p == a || p == b || p == c || !face.contains(p)) continue;
      auto [l1, l2] = affine_coordinates(p, a, b, c);
      RationalRow r(pts.size(), Rational(0));
      r[i] += 1;
      r[*s.polygon().index_of(a)] -= 1 - l1 - l2;
      r[*s.polygon().index_of(b)] -= l1;
      r[*s.polygon().index_of(c)] -= l2;
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

/// Strict concavity across interior edge e, as a row over the lattice points:
/// (face-0 affine extension at the opposite vertex of face 1) - value > 0.
inline RationalRow concavity_row(const Subdivision& s, std::size_t e) {
  const auto& poly = s.polygon();
  const auto& edge = s.edges()[e];
  const LatticePoint& a = edge.segment.a;
  const LatticePoint& b = edge.segment.b;
  const LatticePoint& c = s.opposite_vertex(static_cast<std::size_t>(edge.faces[0]), e);
  const LatticePoint& d = s.opposite_vertex(static_cast<std::size_t>(edge.faces[1]), e);
  auto [l1, l2] = affine_coordinates(d, a, b, c);
  RationalRow r(poly.lattice_points().size(), Rational(0));
  r[*poly.index_of(a)] += 1 - l1 - l2;
  r[*poly.index_of(b)] += l1;
  r[*poly.index_of(c)] += l2;
  r[*poly.index_of(d)] -= 1;
  return r;
}

}  // namespace detail

struct RegularityResult {
  bool regular = false;
  std::optional<WeightFunction> witness;
};

/// Decides whether some concave piecewise-affine function has exactly the
/// faces of s as its domains of linearity.
inline RegularityResult is_regular(const Subdivision& s, LpMethod method = LpMethod::Simplex) {
  const std::size_t n = s.polygon().lattice_points().size();
  LinearSystem sys(n);
  for (auto& r : detail::face_affine_rows(s)) sys.add_equal(std::move(r), 0);
  for (std::size_t e = 0; e < s.edges().size(); ++e)
    if (s.edges()[e].interior) sys.add_greater(detail::concavity_row(s, e), 0);
  auto lp = rational_lp_feasible(sys, method);
  RegularityResult out;
  out.regular = lp.feasible;
  if (lp.feasible) out.witness = WeightFunction(s.polygon(), std::move(lp.witness));
  return out;
}

/// Dimension of the space of face-wise affine functions on the lattice
/// points, modulo constants. Throws NonRegular when s is not regular.
inline std::size_t rank(const Subdivision& s) {
  if (!is_regular(s).regular) throw NonRegular("subdivision is not regular");
  const std::size_t n = s.polygon().lattice_points().size();
  return n - tropsev::rank(detail::face_affine_rows(s)) - 1;
}

/// |Vertices| - 1 - |Parallelograms|, for nodal subdivisions.
inline std::size_t rank_nodal_formula(const Subdivision& s) {
  if (!s.flags().nodal) throw NotNodal("subdivision has a face that is neither a triangle nor a parallelogram");
  return s.vertices().size() - 1 - s.parallelograms().size();
}

// ---------------------------------------------------------------------------
// Oriented adjacency graph.

struct OrientedAdjacencyGraph {
  std::size_t nodes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;  // (from, to) over interior edges
  std::vector<std::size_t> arc_edges;                     // dual subdivision edge per arc
  LatticePoint zeta;
};

/// Interior faces (all edges interior) may not be sinks; no directed cycles.
inline bool is_valid_orientation(const Subdivision& s, const OrientedAdjacencyGraph& g) {
  const std::size_t n = g.nodes;
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indeg(n, 0);
  for (auto [a, b] : g.arcs) {
    out[a].push_back(b);
    ++indeg[b];
  }
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  std::size_t seen = 0;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    ++seen;
    for (auto w : out[v])
      if (--indeg[w] == 0) stack.push_back(w);
  }
  if (seen != n) return false;
  for (std::size_t f = 0; f < n; ++f) {
    const auto& fe = s.face_edges(f);
    const bool inner = std::all_of(fe.begin(), fe.end(), [&](std::size_t e) { return s.edges()[e].interior; });
    if (inner && out[f].empty()) return false;
  }
  return true;
}

/// Orients every edge of s along a generic direction zeta (acute angle) and
/// transfers the orientation to the adjacency graph: F -> G when the oriented
/// common edge and the normal leaving F towards G are positively oriented.
inline OrientedAdjacencyGraph orient_adjacency(const Subdivision& s, std::uint64_t seed = 0) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-97, 97);
  for (;;) {
    LatticePoint zeta(coord(rng), coord(rng));
    if (zeta == LatticePoint(0, 0) || gcd(zeta.x, zeta.y) != 1) continue;
    bool generic = true;
    for (const auto& e : s.edges())
      if (dot(e.segment.b - e.segment.a, zeta) == 0) generic = false;
    if (!generic) continue;

    OrientedAdjacencyGraph g;
    g.nodes = s.faces().size();
    g.zeta = zeta;
    for (std::size_t e = 0; e < s.edges().size(); ++e) {
      const auto& edge = s.edges()[e];
      if (!edge.interior) continue;
      LatticePoint d = edge.segment.b - edge.segment.a;
      if (sign(Integer(dot(d, zeta))) < 0) d = -d;
      const auto f0 = static_cast<std::size_t>(edge.faces[0]);
      const auto f1 = static_cast<std::size_t>(edge.faces[1]);
      // Normal leaving f0: points away from f0's opposite vertex.
      LatticePoint normal(Integer(-d.y), d.x);
      if (sign(Integer(dot(normal, s.opposite_vertex(f0, e) - edge.segment.a))) > 0) normal = -normal;
      if (sign(cross(d, normal)) > 0) g.arcs.emplace_back(f0, f1);
      else g.arcs.emplace_back(f1, f0);
      g.arc_edges.push_back(e);
    }
    if (is_valid_orientation(s, g)) return g;
  }
}

}  // namespace tropsev
