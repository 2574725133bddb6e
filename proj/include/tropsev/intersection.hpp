#pragma once

// Stable intersection of tropical plane curves, lattice indices of rational
// linear spaces, and mixed volumes of lattice polygons.

#include <map>
#include <random>
#include <vector>

#include "tropsev/dual_curve.hpp"
#include "tropsev/matrix.hpp"

namespace tropsev {

struct IntersectionPoint {
  PlanePoint location;
  Integer multiplicity;
};

struct IntersectionReport {
  std::vector<IntersectionPoint> points;  // sorted by location, one entry per location
  Integer total = 0;
  LatticePoint displacement;              // direction of the infinitesimal shift of the second curve
};

/// A bounded edge (length set) or a ray of a tropical curve, as
/// start + s * direction for s in [0, length] or s >= 0.
struct CurveCell {
  PlanePoint start;
  LatticePoint direction;
  std::optional<Rational> length;
  Integer weight;
};

inline std::vector<CurveCell> cells(const TropicalCurve& c) {
  std::vector<CurveCell> out;
  for (const auto& e : c.edges) {
    const PlanePoint& a = c.vertices[e.from];
    const PlanePoint& b = c.vertices[e.to];
    const Rational len = e.direction.x != 0 ? (b.x - a.x) / Rational(e.direction.x)
                                            : (b.y - a.y) / Rational(e.direction.y);
    if (b.x != a.x + len * e.direction.x || b.y != a.y + len * e.direction.y || sign(len) <= 0)
      throw InvariantBreach("edge direction does not join its endpoints");
    out.push_back({a, e.direction, len, e.weight});
  }
  for (const auto& r : c.rays) out.push_back({c.vertices[r.from], r.direction, std::nullopt, r.weight});
  return out;
}

inline TropicalCurve translated(TropicalCurve c, const PlanePoint& by) {
  for (auto& v : c.vertices) v = PlanePoint(v.x + by.x, v.y + by.y);
  return c;
}

namespace detail {

/// a + b * eps for an infinitesimal eps > 0.
struct EpsNumber {
  Rational a;
  Rational b;
  int sign() const { return a != 0 ? tropsev::sign(a) : tropsev::sign(b); }
};

}  // namespace detail

/// Stable intersection: the second curve is moved by eps * v for a generic
/// integer v and infinitesimal eps; each transversal crossing counts
/// w1 * w2 * |det(u1, u2)| at its limit point.
inline IntersectionReport stable_intersect(const TropicalCurve& c1, const TropicalCurve& c2, std::uint64_t seed = 0) {
  const auto cells1 = cells(c1);
  const auto cells2 = cells(c2);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-1000, 1000);
  for (;;) {
    const LatticePoint v(coord(rng), coord(rng));
    bool generic = v != LatticePoint(0, 0);
    for (const auto* cs : {&cells1, &cells2})
      for (const auto& c : *cs)
        if (cross(v, c.direction) == 0) generic = false;
    if (!generic) continue;

    std::map<PlanePoint, Integer> found;
    bool tie = false;
    for (const auto& x : cells1) {
      for (const auto& y : cells2) {
        const Integer det = cross(x.direction, y.direction);
        if (det == 0) continue;
        // s u - t w = (q - p) + eps v
        const Rational dx = y.start.x - x.start.x, dy = y.start.y - x.start.y;
        const Rational D(det);
        const LatticePoint &u = x.direction, &w = y.direction;
        // Cramer on [u, -w] [s t]^T = r:  s = cross(r, -w)/det(u,-w), t = cross(u, r)/det(u,-w)
        auto solve = [&](const Rational& rx, const Rational& ry) {
          const Rational s = (rx * (-w.y) - ry * (-w.x)) / (-D);
          const Rational t = (Rational(u.x) * ry - Rational(u.y) * rx) / (-D);
          return std::pair{s, t};
        };
        const auto [s0, t0] = solve(dx, dy);
        const auto [s1, t1] = solve(Rational(v.x), Rational(v.y));
        const detail::EpsNumber s{s0, s1}, t{t0, t1};
        auto inside = [&](const detail::EpsNumber& p, const std::optional<Rational>& len) -> int {
          const int lo = p.sign();
          if (lo == 0) return 0;
          if (lo < 0) return -1;
          if (!len) return 1;
          const int hi = detail::EpsNumber{*len - p.a, -p.b}.sign();
          return hi == 0 ? 0 : hi;
        };
        const int si = inside(s, x.length), ti = inside(t, y.length);
        if (si == 0 || ti == 0) {
          tie = true;
          break;
        }
        if (si < 0 || ti < 0) continue;
        const PlanePoint at(x.start.x + s0 * u.x, x.start.y + s0 * u.y);
        found[at] += x.weight * y.weight * abs(det);
      }
      if (tie) break;
    }
    if (tie) continue;
    IntersectionReport r;
    r.displacement = v;
    for (auto& [p, m] : found) {
      r.points.push_back({p, m});
      r.total += m;
    }
    return r;
  }
}

/// A rational linear subspace of Q^n given by spanning integer vectors.
struct RationalLinearSpace {
  std::size_t ambient = 0;
  std::vector<std::vector<Integer>> spanning;
};

/// Basis of L intersected with Z^n.
inline std::vector<std::vector<Integer>> saturated_basis(const RationalLinearSpace& L) {
  const std::size_t n = L.ambient;
  if (L.spanning.empty()) return {};
  IntegerMatrix b(L.spanning.size(), n);
  for (std::size_t i = 0; i < L.spanning.size(); ++i) {
    if (L.spanning[i].size() != n) throw SchemaError("vector of the wrong length");
    for (std::size_t j = 0; j < n; ++j) b(i, j) = L.spanning[i][j];
  }
  const auto snf = smith_normal_form(b);
  // B = U^-1 D V^-1, so the row space is spanned by the first rank rows of V^-1.
  RationalMatrix aug(n, RationalRow(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(snf.right(i, j));
    aug[i][n + i] = 1;
  }
  row_reduce(aug, n);
  std::vector<std::vector<Integer>> out;
  for (std::size_t i = 0; i < snf.rank(); ++i) {
    std::vector<Integer> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(aug[i][n + j].get_num());
    out.push_back(std::move(row));
  }
  return out;
}

/// Index of (L1 cap Z^n) + (L2 cap Z^n) in Z^n.
inline Integer lattice_index(const RationalLinearSpace& a, const RationalLinearSpace& b) {
  if (a.ambient != b.ambient) throw NotComplementary("ambient dimensions differ");
  const auto ba = saturated_basis(a);
  const auto bb = saturated_basis(b);
  const std::size_t n = a.ambient;
  if (ba.size() + bb.size() != n) throw NotComplementary("dimensions do not add up to the ambient dimension");
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (i < ba.size() ? ba[i] : bb[i - ba.size()])[j];
  const Integer d = abs(determinant(m));
  if (d == 0) throw NotComplementary("the two spaces intersect nontrivially");
  return d;
}

/// Normalised so that MV(P, P) = 2 area(P): MV = area(P+Q) - area(P) - area(Q).
inline Integer mixed_volume(const LatticePolygon& p, const LatticePolygon& q) {
  const Integer twice = minkowski_sum(p, q).twice_area() - p.twice_area() - q.twice_area();
  return twice / 2;
}

}  // namespace tropsev
