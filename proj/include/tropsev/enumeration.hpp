#pragma once

// Counting tropical curves of a given degree and number of nodes through
// generic points: by solving point conditions on every simple nodal regular
// subdivision, and independently by lattice paths.

#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "tropsev/dual_curve.hpp"
#include "tropsev/severi.hpp"

namespace tropsev {

struct PointConfiguration {
  std::vector<PlanePoint> points;
  std::uint64_t seed = 0;
  bool stretched = false;
  Integer scale = 1;   // s
  Integer stretch = 1; // M
};

/// q_i = (i s, s M^i), i = 1..r, with s and M drawn from the seed and
/// M >= 3 * diameter.
inline PointConfiguration stretched_config(std::size_t r, std::uint64_t seed, long diameter = 4) {
  if (r == 0) throw SchemaError("a configuration needs at least one point");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> sd(1, 9), md(0, 9);
  PointConfiguration c;
  c.seed = seed;
  c.stretched = true;
  c.scale = sd(rng);
  c.stretch = 3 * std::max(diameter, 1L) + md(rng);
  Integer power = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    power *= c.stretch;
    c.points.emplace_back(Rational(Integer(c.scale * Integer(static_cast<long>(i)))), Rational(Integer(c.scale * power)));
  }
  return c;
}

/// max_a (w_a + q . a) attained at least twice.
inline bool hyperplane_trop_contains(const PlanePoint& q, const LatticePolygon& polygon, const WeightFunction& w) {
  return passes_through(polygon, w, q);
}

// ---------------------------------------------------------------------------
// Lattice paths.

namespace detail {

/// x - eps y
inline bool lambda_less(const LatticePoint& a, const LatticePoint& b) {
  const int c = cmp(a.x, b.x);
  return c != 0 ? c < 0 : a.y > b.y;
}

class PathCounter {
 public:
  explicit PathCounter(const LatticePolygon& polygon) : polygon_(polygon) {
    pts_ = polygon.lattice_points();
    std::sort(pts_.begin(), pts_.end(), lambda_less);
    for (std::size_t i = 0; i < pts_.size(); ++i) where_[pts_[i]] = static_cast<int>(i);
    // Boundary paths from p (first) to q (last): upper part clockwise, lower counterclockwise.
    std::vector<int> upper, lower, chord;
    for (const auto& b : polygon.boundary_points()) {
      const int i = where_.at(b);
      if (i == 0 || i == static_cast<int>(pts_.size()) - 1) continue;
      const int side = orientation(pts_.front(), pts_.back(), b);
      (side > 0 ? upper : side < 0 ? lower : chord).push_back(i);
    }
    // Boundary points on the chord from p to q form an edge, hence a whole arc.
    (upper.empty() ? upper : lower).insert((upper.empty() ? upper : lower).end(), chord.begin(), chord.end());
    plus_base_ = boundary_arc(upper);
    minus_base_ = boundary_arc(lower);
  }

  const std::vector<LatticePoint>& points() const { return pts_; }

  Integer multiplicity(const std::vector<int>& path, bool plus) {
    auto& memo = plus ? memo_plus_ : memo_minus_;
    if (auto it = memo.find(path); it != memo.end()) return it->second;
    Integer result = 0;
    if (path == (plus ? plus_base_ : minus_base_)) {
      result = 1;
    } else {
      for (std::size_t j = 1; j + 1 < path.size(); ++j) {
        const LatticePoint& a = pts_[path[j - 1]];
        const LatticePoint& b = pts_[path[j]];
        const LatticePoint& c = pts_[path[j + 1]];
        const int turn = sign(Integer(cross(b - a, c - b)));
        if (plus ? turn <= 0 : turn >= 0) continue;
        std::vector<int> cut = path;
        cut.erase(cut.begin() + static_cast<std::ptrdiff_t>(j));
        result = abs(Integer(cross(b - a, c - a))) * multiplicity(cut, plus);
        const LatticePoint flip = a + c - b;
        if (polygon_.contains(flip)) {
          std::vector<int> flipped = path;
          flipped[j] = where_.at(flip);
          result += multiplicity(flipped, plus);
        }
        break;
      }
    }
    memo.emplace(path, result);
    return result;
  }

 private:
  std::vector<int> boundary_arc(std::vector<int> mid) const {
    std::sort(mid.begin(), mid.end());
    std::vector<int> arc{0};
    arc.insert(arc.end(), mid.begin(), mid.end());
    arc.push_back(static_cast<int>(pts_.size()) - 1);
    return arc;
  }

  const LatticePolygon& polygon_;
  std::vector<LatticePoint> pts_;
  std::map<LatticePoint, int> where_;
  std::vector<int> plus_base_, minus_base_;
  std::map<std::vector<int>, Integer> memo_plus_, memo_minus_;
};

}  // namespace detail

/// Sum over lambda-increasing lattice paths with r steps of mu+ * mu-.
inline Integer path_count(const SeveriSpec& spec) {
  detail::PathCounter pc(spec.polygon());
  const int n = static_cast<int>(pc.points().size());
  const int steps = static_cast<int>(severi_dimension(spec));
  Integer total = 0;
  std::vector<int> path{0};
  std::function<void(int)> extend = [&](int from) {
    const int taken = static_cast<int>(path.size()) - 1;
    if (taken == steps - 1) {
      path.push_back(n - 1);
      const Integer plus = pc.multiplicity(path, true);
      if (plus != 0) total += plus * pc.multiplicity(path, false);
      path.pop_back();
      return;
    }
    for (int k = from + 1; k < n - 1; ++k) {
      if ((n - 1 - k) < (steps - 1 - taken)) break;
      path.push_back(k);
      extend(k);
      path.pop_back();
    }
  };
  if (steps >= 1) extend(0);
  return total;
}

// ---------------------------------------------------------------------------
// Simple nodal subdivisions.

namespace detail {

/// Tilings of the polygon by lattice triangles and parallelograms using every
/// boundary lattice point as a vertex, with (unused points + parallelograms)
/// equal to delta. Faces are placed on the left of the least open directed
/// edge, so every tiling is produced once.
class TilingEnumerator {
 public:
  TilingEnumerator(const LatticePolygon& polygon, std::size_t delta) : poly_(polygon), delta_(delta) {
    const auto& pts = poly_.lattice_points();
    state_.assign(pts.size(), Free);
    for (const auto& b : poly_.boundary_points()) state_[idx(b)] = Used;
    // Boundary edges between consecutive boundary points, counterclockwise.
    for (const auto& e : poly_.edges()) {
      const auto sp = segment_points(e);
      for (std::size_t k = 0; k + 1 < sp.size(); ++k) open_.insert({idx(sp[k]), idx(sp[k + 1])});
    }
  }

  void run(const std::function<void(const std::vector<LatticePolygon>&)>& emit) {
    emit_ = &emit;
    recurse();
  }

 private:
  enum PointState : char { Free, Used, Dead };

  std::size_t idx(const LatticePoint& p) const { return *poly_.index_of(p); }

  void recurse() {
    if (open_.empty()) {
      if (dead_ + parallelograms_ == delta_) (*emit_)(faces_);
      return;
    }
    const auto [ia, ib] = *open_.begin();
    const auto& pts = poly_.lattice_points();
    const LatticePoint& a = pts[ia];
    const LatticePoint& b = pts[ib];
    for (std::size_t ic = 0; ic < pts.size(); ++ic) {
      const LatticePoint& c = pts[ic];
      if (state_[ic] == Dead || orientation(a, b, c) <= 0) continue;
      try_face({a, b, c}, false);
      const LatticePoint d = a + c - b;
      if (auto id = poly_.index_of(d); id && state_[*id] != Dead) try_face({a, b, c, d}, true);
    }
  }

  void try_face(std::vector<LatticePoint> corners, bool parallelogram) {
    const std::size_t extra_p = parallelogram ? 1 : 0;
    if (dead_ + parallelograms_ + extra_p > delta_) return;
    LatticePolygon face(corners);
    if (face.size() != corners.size()) return;
    std::vector<std::size_t> newly_dead;
    const auto& fv0 = face.vertices();
    // A dead point may sit inside an edge this face closes: the face across made it dead.
    auto on_closed_edge = [&](const LatticePoint& p) {
      for (std::size_t k = 0; k < fv0.size(); ++k) {
        const LatticePoint& x = fv0[k];
        const LatticePoint& y = fv0[(k + 1) % fv0.size()];
        if (open_.count({idx(x), idx(y)}) && in_segment_interior(p, x, y)) return true;
      }
      return false;
    };
    for (const auto& p : face.lattice_points()) {
      if (face.is_vertex(p)) continue;
      const std::size_t i = idx(p);
      if (state_[i] == Dead && on_closed_edge(p)) continue;
      if (state_[i] != Free) return;  // boundary points and used vertices must stay corners
      newly_dead.push_back(i);
    }
    if (dead_ + newly_dead.size() + parallelograms_ + extra_p > delta_) return;
    for (const auto& f : faces_)
      if (interiors_overlap(f, face)) return;

    // Apply.
    std::vector<std::pair<std::size_t, PointState>> saved;
    for (const auto& v : face.vertices()) {
      const std::size_t i = idx(v);
      saved.emplace_back(i, state_[i]);
      state_[i] = Used;
    }
    for (std::size_t i : newly_dead) state_[i] = Dead;
    dead_ += newly_dead.size();
    parallelograms_ += extra_p;
    std::vector<std::pair<std::size_t, std::size_t>> closed, opened;
    const auto& fv = face.vertices();
    for (std::size_t k = 0; k < fv.size(); ++k) {
      const std::size_t x = idx(fv[k]), y = idx(fv[(k + 1) % fv.size()]);
      if (open_.erase({x, y})) closed.emplace_back(x, y);
      else {
        open_.insert({y, x});
        opened.emplace_back(y, x);
      }
    }
    faces_.push_back(std::move(face));

    recurse();

    faces_.pop_back();
    for (const auto& e : opened) open_.erase(e);
    for (const auto& e : closed) open_.insert(e);
    parallelograms_ -= extra_p;
    dead_ -= newly_dead.size();
    for (std::size_t i : newly_dead) state_[i] = Free;
    for (auto it = saved.rbegin(); it != saved.rend(); ++it) state_[it->first] = it->second;
  }

  const LatticePolygon& poly_;
  std::size_t delta_;
  std::vector<PointState> state_;
  std::set<std::pair<std::size_t, std::size_t>> open_;
  std::vector<LatticePolygon> faces_;
  std::size_t dead_ = 0;
  std::size_t parallelograms_ = 0;
  const std::function<void(const std::vector<LatticePolygon>&)>* emit_ = nullptr;
};

}  // namespace detail

/// Regular, simple, nodal subdivisions of rank |lattice points| - 1 - delta,
/// in a canonical order.
inline std::vector<Subdivision> simple_nodal_subdivisions(const LatticePolygon& polygon, std::size_t delta) {
  std::vector<Subdivision> out;
  detail::TilingEnumerator en(polygon, delta);
  en.run([&](const std::vector<LatticePolygon>& faces) {
    auto s = Subdivision::from_faces(polygon, faces);
    if (is_regular(s).regular) out.push_back(std::move(s));
  });
  std::sort(out.begin(), out.end(), [](const Subdivision& a, const Subdivision& b) {
    return std::lexicographical_compare(a.faces().begin(), a.faces().end(), b.faces().begin(), b.faces().end());
  });
  return out;
}

// ---------------------------------------------------------------------------
// Solving point conditions on a fixed subdivision.

struct CountedSolution {
  WeightFunction omega;                 // normalised: first vertex 0, unused points below the hull
  Subdivision subdivision;
  std::vector<std::size_t> assignment;  // subdivision edge through each configuration point
  Integer mu;
};

namespace detail {

/// Affine constraint coeffs . y + constant (> 0 when strict).
struct AffineIneq {
  RationalRow coeffs;
  Rational constant;
  std::vector<double> approx;  // coeffs then constant, for the floating-point guide

  void refresh() {
    approx.resize(coeffs.size() + 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) approx[k] = coeffs[k].get_d();
    approx.back() = constant.get_d();
  }
};

class PointSolver {
 public:
  PointSolver(const Subdivision& s, const std::vector<PlanePoint>& points)
      : s_(s), points_(points), vertices_(s.vertices()) {
    const std::size_t n = vertices_.size();
    RationalMatrix eq;
    auto unit = [&](std::initializer_list<std::pair<LatticePoint, long>> terms) {
      RationalRow r(n + 1, Rational(0));
      for (const auto& [p, c] : terms) r[var(p)] += c;
      return r;
    };
    eq.push_back(unit({{vertices_[0], 1}}));
    for (std::size_t f : s.parallelograms()) {
      const auto& v = s.faces()[f].vertices();
      eq.push_back(unit({{v[0], 1}, {v[2], 1}, {v[1], -1}, {v[3], -1}}));
    }
    auto aff = solve_affine(std::move(eq), n);
    x0_ = aff.origin;
    const std::size_t d = aff.basis.size();
    basis_.assign(n, RationalRow(d, Rational(0)));
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < n; ++i) basis_[i][k] = aff.basis[k][i];
    for (std::size_t e = 0; e < s.edges().size(); ++e) {
      if (!s.edges()[e].interior) continue;
      const RationalRow row = concavity_row(s, e);  // over all lattice points
      RationalRow over_vertices(n, Rational(0));
      const auto& pts = s.polygon().lattice_points();
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (row[i] != 0) over_vertices[var(pts[i])] += row[i];
      ineqs_.push_back(transform(over_vertices, Rational(0)));
    }
  }

  /// Calls emit for every solution; throws ConfigDegenerate on non-generic data.
  void solve(const std::function<void(const RationalRow&, const std::vector<std::size_t>&)>& emit) {
    emit_ = &emit;
    used_.assign(s_.edges().size(), false);
    assignment_.clear();
    recurse(Node{x0_, basis_, ineqs_, false});
  }

 private:
  /// Vertex values x0 + basis . y over the parameters y still free.
  struct Node {
    RationalRow x0;
    std::vector<RationalRow> basis;
    std::vector<AffineIneq> ineqs;
    bool deficient = false;
  };

  /// Constraints putting point j on the curve edge dual to edge e, in node parameters.
  struct Incidence {
    AffineIneq eqn;  // eqn.coeffs . y = rhs
    Rational rhs;
    std::vector<AffineIneq> fresh;
    bool singular = false;
  };

  std::optional<Incidence> incidence(const Node& node, std::size_t j, std::size_t e) const {
    const PlanePoint& q = points_[j];
    const auto& edge = s_.edges()[e];
    const LatticePoint& a = edge.segment.a;
    const LatticePoint& b = edge.segment.b;
    Incidence inc;
    const std::size_t ia = var(a);
    // x[a] - x[b] = (b - a) . q
    inc.eqn = difference(node, ia, var(b), Rational(0));
    inc.rhs = pairing(b - a, q) - inc.eqn.constant;
    inc.singular = all_zero(inc.eqn.coeffs);
    if (inc.singular && inc.rhs != 0) return std::nullopt;
    // q inside the curve edge: x[a] - x[c] + (a - c) . q > 0 for each opposite vertex c.
    for (int side = 0; side < 2; ++side) {
      const int f = edge.faces[static_cast<std::size_t>(side)];
      if (f < 0) continue;
      const LatticePoint& c = s_.opposite_vertex(static_cast<std::size_t>(f), e);
      inc.fresh.push_back(difference(node, ia, var(c), pairing(a - c, q)));
      if (all_zero(inc.fresh.back().coeffs) && sign(inc.fresh.back().constant) < 0) return std::nullopt;
    }
    if (!closure_ok(node.ineqs, inc.fresh, inc.singular ? nullptr : &inc.eqn, inc.rhs)) return std::nullopt;
    return inc;
  }

  Node child(const Node& node, Incidence inc) const {
    Node out = node;
    out.ineqs.insert(out.ineqs.end(), std::make_move_iterator(inc.fresh.begin()),
                     std::make_move_iterator(inc.fresh.end()));
    if (inc.singular) {
      out.deficient = true;
    } else {
      std::size_t j = 0;
      while (inc.eqn.coeffs[j] == 0) ++j;
      eliminate(inc.eqn.coeffs, inc.rhs, j, out.x0, out.basis, out.ineqs);
    }
    return out;
  }

  std::size_t var(const LatticePoint& p) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  /// Row over vertex values -> affine form in the current parameters.
  AffineIneq transform(const RationalRow& row, const Rational& constant) const {
    return transform_with(row, constant, x0_, basis_);
  }
  static AffineIneq transform_with(const RationalRow& row, const Rational& constant, const RationalRow& x0,
                                   const std::vector<RationalRow>& basis) {
    const std::size_t d = basis.empty() ? 0 : basis[0].size();
    AffineIneq q{RationalRow(d, Rational(0)), constant, {}};
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == 0) continue;
      q.constant += row[i] * x0[i];
      for (std::size_t k = 0; k < d; ++k)
        if (basis[i][k] != 0) q.coeffs[k] += row[i] * basis[i][k];
    }
    q.refresh();
    return q;
  }

  /// x[i] - x[j] + constant in the node parameters.
  static AffineIneq difference(const Node& node, std::size_t i, std::size_t j, Rational constant) {
    const std::size_t d = node.basis.empty() ? 0 : node.basis[0].size();
    AffineIneq q{RationalRow(d), std::move(constant), {}};
    q.constant += node.x0[i];
    q.constant -= node.x0[j];
    for (std::size_t k = 0; k < d; ++k) q.coeffs[k] = node.basis[i][k] - node.basis[j][k];
    q.refresh();
    return q;
  }

  static bool all_zero(const RationalRow& r) {
    return std::all_of(r.begin(), r.end(), [](const Rational& v) { return v == 0; });
  }

  void recurse(const Node& node) {
    const std::size_t k = assignment_.size();
    if (k == points_.size()) {
      const std::size_t d = node.basis.empty() ? 0 : node.basis[0].size();
      if (d > 0 || node.deficient) {
        if (closure_ok(node.ineqs)) throw ConfigDegenerate("point conditions are dependent on a feasible type");
        return;
      }
      bool strict = true;
      for (const auto& q : node.ineqs) {
        if (sign(q.constant) < 0) return;
        if (q.constant == 0) strict = false;
      }
      if (!strict) throw ConfigDegenerate("a solution curve is not in general position");
      (*emit_)(node.x0, assignment_);
      return;
    }
    for (std::size_t e = 0; e < s_.edges().size(); ++e) {
      if (used_[e]) continue;
      auto inc = incidence(node, k, e);
      if (!inc) continue;
      used_[e] = true;
      assignment_.push_back(e);
      recurse(child(node, std::move(*inc)));
      assignment_.pop_back();
      used_[e] = false;
    }
  }

  /// Substitute y_j = (rhs - sum_{k != j} c_k y_k) / c_j and drop column j.
  static void eliminate(const RationalRow& c, const Rational& rhs, std::size_t j, RationalRow& x0,
                        std::vector<RationalRow>& basis, std::vector<AffineIneq>& ineqs) {
    const Rational inv = 1 / c[j];
    const std::size_t d = c.size();
    auto reduce = [&](RationalRow& coeffs, Rational& constant) {
      const Rational f = coeffs[j];
      if (f != 0) {
        constant += f * rhs * inv;
        for (std::size_t k = 0; k < d; ++k)
          if (k != j && c[k] != 0) coeffs[k] -= f * c[k] * inv;
      }
      coeffs.erase(coeffs.begin() + static_cast<std::ptrdiff_t>(j));
      return f != 0;
    };
    for (std::size_t i = 0; i < x0.size(); ++i) reduce(basis[i], x0[i]);
    for (auto& q : ineqs) {
      if (reduce(q.coeffs, q.constant)) {
        q.refresh();
      } else {
        q.approx.erase(q.approx.begin() + static_cast<std::ptrdiff_t>(j));
      }
    }
  }

  static bool closure_ok(const std::vector<AffineIneq>& ineqs, const std::vector<AffineIneq>& extra = {},
                         const AffineIneq* eqn = nullptr, const Rational& rhs = Rational(0)) {
    std::vector<GuidedRow> rows;
    for (const auto* list : {&ineqs, &extra})
      for (const auto& q : *list) {
        if (all_zero(q.coeffs)) {
          if (sign(q.constant) < 0) return false;
          continue;
        }
        rows.push_back({&q.coeffs, &q.constant, &q.approx});
      }
    if (rows.empty()) return true;
    return closure_feasible_guided(rows[0].coeffs->size(), rows, eqn ? &eqn->coeffs : nullptr, &rhs);
  }

  const Subdivision& s_;
  const std::vector<PlanePoint>& points_;
  const std::vector<LatticePoint>& vertices_;
  RationalRow x0_;
  std::vector<RationalRow> basis_;
  std::vector<AffineIneq> ineqs_;
  std::vector<bool> used_;
  std::vector<std::size_t> assignment_;
  const std::function<void(const RationalRow&, const std::vector<std::size_t>&)>* emit_ = nullptr;
};

/// Full weight function from vertex values: unused points get the face value minus one.
inline WeightFunction extend_to_polygon(const Subdivision& s, const RationalRow& vertex_values) {
  const auto& pts = s.polygon().lattice_points();
  const auto& verts = s.vertices();
  std::vector<Rational> values;
  for (const auto& p : pts) {
    auto it = std::lower_bound(verts.begin(), verts.end(), p);
    if (it != verts.end() && *it == p) {
      values.push_back(vertex_values[static_cast<std::size_t>(it - verts.begin())]);
      continue;
    }
    const auto& face = s.faces()[*s.face_containing(p)];
    const auto& fv = face.vertices();
    auto val = [&](const LatticePoint& v) {
      return vertex_values[static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin())];
    };
    const auto fn = AffineFunction::through(fv[0], fv[1], fv[2], val(fv[0]), val(fv[1]), val(fv[2]));
    values.push_back(fn(p) - 1);
  }
  return {s.polygon(), std::move(values)};
}

}  // namespace detail

/// Every curve of the combinatorial type s through the points.
inline std::vector<CountedSolution> solve_on_subdivision(const Subdivision& s, const std::vector<PlanePoint>& points) {
  std::vector<CountedSolution> out;
  Integer mu = 1;
  for (std::size_t f : s.triangles()) mu *= s.faces()[f].twice_area();
  detail::PointSolver solver(s, points);
  solver.solve([&](const RationalRow& x, const std::vector<std::size_t>& assignment) {
    out.push_back({detail::extend_to_polygon(s, x), s, assignment, mu});
  });
  return out;
}

enum class CountStrategy { SubdivisionSolve, PathCount, Both };

struct SeveriDegreeReport {
  std::size_t dimension = 0;
  PointConfiguration configuration;
  std::vector<CountedSolution> solutions;
  std::optional<Integer> subdivision_degree;
  std::optional<Integer> path_degree;
  std::size_t subdivisions_examined = 0;
  Integer degree = 0;
  CountStrategy strategy = CountStrategy::Both;
};

/// Worker count for the per-subdivision solve; results never depend on it.
inline unsigned default_workers() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

inline SeveriDegreeReport count_through_points(const SeveriSpec& spec, const PointConfiguration& config,
                                               CountStrategy strategy, unsigned workers = default_workers()) {
  SeveriDegreeReport report;
  report.dimension = severi_dimension(spec);
  report.configuration = config;
  report.strategy = strategy;
  if (config.points.size() != report.dimension)
    throw SchemaError("configuration has " + std::to_string(config.points.size()) + " points, expected " +
                      std::to_string(report.dimension));

  if (strategy != CountStrategy::PathCount) {
    const auto subdivisions = simple_nodal_subdivisions(spec.polygon(), spec.delta());
    report.subdivisions_examined = subdivisions.size();
    std::vector<std::vector<CountedSolution>> per(subdivisions.size());
    std::vector<std::exception_ptr> errors(std::max(1u, workers));
    auto work = [&](unsigned w) {
      try {
        for (std::size_t i = w; i < subdivisions.size(); i += std::max(1u, workers))
          per[i] = solve_on_subdivision(subdivisions[i], config.points);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };
    if (workers <= 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    Integer total = 0;
    for (auto& v : per)
      for (auto& sol : v) {
        total += sol.mu;
        report.solutions.push_back(std::move(sol));
      }
    report.subdivision_degree = total;
    report.degree = total;
  }
  if (strategy != CountStrategy::SubdivisionSolve) {
    report.path_degree = path_count(spec);
    report.degree = *report.path_degree;
  }
  if (report.subdivision_degree && report.path_degree && *report.subdivision_degree != *report.path_degree)
    throw InvariantBreach("strategies disagree: " + report.subdivision_degree->get_str() + " by subdivisions, " +
                          report.path_degree->get_str() + " by lattice paths");
  return report;
}

/// Largest coordinate spread between two vertices, at least 1.
inline long polygon_diameter(const LatticePolygon& polygon) {
  long diameter = 1;
  for (const auto& v : polygon.vertices())
    for (const auto& w : polygon.vertices())
      diameter = std::max({diameter, Integer(abs(v.x - w.x)).get_si(), Integer(abs(v.y - w.y)).get_si()});
  return diameter;
}

/// Counts through a stretched configuration drawn from seed. A degenerate
/// draw is replaced by the next seed; the seed actually used is in the report.
inline SeveriDegreeReport count_severi_degree(const SeveriSpec& spec, std::uint64_t seed, CountStrategy strategy,
                                              unsigned workers = default_workers(), int max_reseeds = 16) {
  const std::size_t r = severi_dimension(spec);
  const long diameter = polygon_diameter(spec.polygon());
  for (int attempt = 0;; ++attempt) {
    try {
      return count_through_points(spec, stretched_config(r, seed + static_cast<std::uint64_t>(attempt), diameter),
                                  strategy, workers);
    } catch (const ConfigDegenerate&) {
      if (attempt >= max_reseeds) throw;
    }
  }
}

/// Degree from every seed, all equal.
inline bool independence_check(const SeveriSpec& spec, const std::vector<std::uint64_t>& seeds,
                               CountStrategy strategy = CountStrategy::SubdivisionSolve) {
  if (seeds.size() < 2) throw SchemaError("independence check needs at least two seeds");
  std::optional<Integer> first;
  for (auto seed : seeds) {
    const auto d = count_severi_degree(spec, seed, strategy).degree;
    if (!first) first = d;
    else if (*first != d) return false;
  }
  return true;
}

}  // namespace tropsev
