#pragma once

// Seeded random polygons, weights and subdivisions for property checks.

#include <random>
#include <vector>

#include "tropsev/subdivision.hpp"

namespace tropsev {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Hull of a few random points in [0, box]^2 with at most max_points lattice points.
inline LatticePolygon random_polygon(Rng& rng, long box = 3, std::size_t max_points = 8) {
  for (;;) {
    std::vector<LatticePoint> pts;
    const long k = uniform(rng, 3, 6);
    for (long i = 0; i < k; ++i) pts.emplace_back(uniform(rng, 0, box), uniform(rng, 0, box));
    if (convex_hull(pts).size() < 3) continue;
    LatticePolygon p(pts);
    if (p.lattice_points().size() <= max_points) return p;
  }
}

/// Integer values in [-range, range].
inline WeightFunction random_weight(Rng& rng, const LatticePolygon& polygon, long range = 12) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < polygon.lattice_points().size(); ++i) v.emplace_back(uniform(rng, -range, range));
  return {polygon, std::move(v)};
}

/// f(x) + g(y) with f, g strictly concave, optionally with a few points pushed down.
/// Such weights cut a rectangle into unit squares.
inline WeightFunction separable_weight(Rng& rng, const LatticePolygon& polygon, std::size_t lowered = 0) {
  auto concave = [&](long step) {
    std::vector<long> f{0};
    long slope = uniform(rng, 5, 9);
    for (long i = 0; i < 16; ++i) {
      f.push_back(f.back() + slope);
      slope -= uniform(rng, 1, step);
    }
    return f;
  };
  const auto f = concave(3), g = concave(3);
  Integer x0 = polygon.vertices()[0].x, y0 = polygon.vertices()[0].y;
  for (const auto& p : polygon.vertices()) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
  }
  const auto& pts = polygon.lattice_points();
  std::vector<Rational> v;
  for (const auto& p : pts)
    v.emplace_back(f[Integer(p.x - x0).get_ui()] + g[Integer(p.y - y0).get_ui()]);
  for (std::size_t k = 0; k < lowered; ++k) v[uniform(rng, 0, static_cast<long>(pts.size()) - 1)] -= uniform(rng, 1, 3);
  return {polygon, std::move(v)};
}

/// Rectangle [0, w] x [0, h].
inline LatticePolygon random_rectangle(Rng& rng, long max_side = 3) {
  const long w = uniform(rng, 1, max_side), h = uniform(rng, 1, max_side);
  return LatticePolygon({{0, 0}, {w, 0}, {w, h}, {0, h}});
}

struct SampledSubdivision {
  LatticePolygon polygon;
  WeightFunction weight;
  Subdivision subdivision;
};

/// A regular nodal subdivision induced by a random weight; about a third of
/// the draws start from separable weights on rectangles so parallelograms appear.
inline SampledSubdivision random_nodal_subdivision(Rng& rng) {
  for (;;) {
    const long kind = uniform(rng, 0, 2);
    const LatticePolygon polygon = kind == 0 ? random_rectangle(rng) : random_polygon(rng, 3, 10);
    const WeightFunction w = kind == 0 ? separable_weight(rng, polygon, static_cast<std::size_t>(uniform(rng, 0, 2)))
                                       : random_weight(rng, polygon);
    auto hull = concave_hull(polygon, w);
    if (hull.subdivision.flags().nodal) return {polygon, w, std::move(hull.subdivision)};
  }
}

}  // namespace tropsev
