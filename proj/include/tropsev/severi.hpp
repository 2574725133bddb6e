#pragma once

// Severi-variety invariants of a weight vector: dimension, support test,
// edge classes, and the weight / Mikhalkin / extrinsic multiplicities.

#include <numeric>
#include <vector>

#include "tropsev/torus_group.hpp"

namespace tropsev {

class SeveriSpec {
 public:
  /// Reducible curves are counted, so delta may exceed the number of interior
  /// points; it is bounded only by keeping the dimension positive.
  SeveriSpec(LatticePolygon polygon, std::size_t delta) : polygon_(std::move(polygon)), delta_(delta) {
    const std::size_t n = polygon_.lattice_points().size();
    if (delta_ + 2 > n)
      throw DeltaTooLarge("delta " + std::to_string(delta_) + " leaves no point conditions on " +
                          std::to_string(n) + " lattice points");
  }
  /// delta <= |interior lattice points|, the range of the irreducible theory.
  bool within_interior_bound() const { return delta_ <= polygon_.interior_points().size(); }
  const LatticePolygon& polygon() const { return polygon_; }
  std::size_t delta() const { return delta_; }

 private:
  LatticePolygon polygon_;
  std::size_t delta_;
};

/// |lattice points| - delta - 1
inline std::size_t severi_dimension(const SeveriSpec& spec) {
  return spec.polygon().lattice_points().size() - spec.delta() - 1;
}

enum class SupportVerdict { Rejected, MaxRankCandidate, LowRank };

inline const char* to_string(SupportVerdict v) {
  switch (v) {
    case SupportVerdict::Rejected: return "Rejected";
    case SupportVerdict::MaxRankCandidate: return "MaxRankCandidate";
    case SupportVerdict::LowRank: return "LowRank";
  }
  return "?";
}

inline SupportVerdict classify_rank(const Subdivision& s, std::size_t r, std::size_t dim) {
  if (r > dim) return SupportVerdict::Rejected;
  if (r == dim && s.flags().simple && s.flags().nodal) return SupportVerdict::MaxRankCandidate;
  return SupportVerdict::LowRank;
}

inline void require_integral(const WeightFunction& w) {
  if (!w.integral()) throw NotIntegral("weight vector has a non-integral entry");
}

inline SupportVerdict support_test(const SeveriSpec& spec, const WeightFunction& w) {
  require_integral(w);
  const auto s = concave_hull(spec.polygon(), w).subdivision;
  return classify_rank(s, rank(s), severi_dimension(spec));
}

/// Finest partition of the edges in which opposite sides of every
/// parallelogram share a class. Classes are sorted by their least edge index.
inline std::vector<std::vector<std::size_t>> edge_equivalence_classes(const Subdivision& s) {
  if (!s.flags().nodal) throw NotNodal("subdivision has a face that is neither a triangle nor a parallelogram");
  std::vector<std::size_t> parent(s.edges().size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (std::size_t f : s.parallelograms()) {
    const auto& fe = s.face_edges(f);
    unite(fe[0], fe[2]);
    unite(fe[1], fe[3]);
  }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::ptrdiff_t> slot(parent.size(), -1);
  for (std::size_t e = 0; e < parent.size(); ++e) {
    const std::size_t r = find(e);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::ptrdiff_t>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(slot[r])].push_back(e);
  }
  return classes;
}

struct SubdivisionMultiplicities {
  Integer l_V;
  Integer m_sev;
  Integer mu;
  Rational xi;
  std::vector<std::vector<std::size_t>> edge_classes;
  bool non_primitive_parallelogram = false;
};

/// m_sev = l_V * prod of class-representative lengths; mu = prod 2 area(triangles); xi = mu / m_sev.
inline SubdivisionMultiplicities severi_multiplicities(const Subdivision& s) {
  SubdivisionMultiplicities m;
  m.edge_classes = edge_equivalence_classes(s);
  m.l_V = build_matrix(s).l_V;
  m.m_sev = m.l_V;
  for (const auto& cls : m.edge_classes) m.m_sev *= lattice_length(s.edges()[cls.front()].segment);
  m.mu = 1;
  for (std::size_t f : s.triangles()) m.mu *= s.faces()[f].twice_area();
  m.xi = make_rational(m.mu, m.m_sev);
  for (std::size_t f : s.parallelograms())
    if (!special_points(s.faces()[f]).empty()) m.non_primitive_parallelogram = true;
  return m;
}

struct CVectorReport {
  WeightFunction omega;
  Subdivision subdivision;
  std::size_t rank = 0;
  std::size_t dimension = 0;
  SupportVerdict verdict = SupportVerdict::LowRank;
  bool in_support = false;
  bool assumed_regular_point = false;
  Integer l_V;
  Integer m_sev;
  Integer mu;
  Rational xi;
  std::vector<std::vector<std::size_t>> edge_classes;
};

/// Report for w against a Severi variety of the given dimension on the polygon.
inline CVectorReport severi_report(const LatticePolygon& polygon, std::size_t dimension, const WeightFunction& w,
                                   bool assume_regular_point = false) {
  require_integral(w);
  CVectorReport r;
  r.omega = w;
  r.subdivision = concave_hull(polygon, w).subdivision;
  r.rank = rank(r.subdivision);
  r.dimension = dimension;
  r.verdict = classify_rank(r.subdivision, r.rank, dimension);
  if (r.rank != dimension)
    throw NotMaxRank("rank " + std::to_string(r.rank) + " differs from dimension " + std::to_string(dimension));
  if (r.verdict != SupportVerdict::MaxRankCandidate) throw NotSimpleNodal("subdivision is not simple and nodal");
  auto m = severi_multiplicities(r.subdivision);
  if (m.non_primitive_parallelogram) {
    if (!assume_regular_point)
      throw RegularPointUnasserted("a non-primitive parallelogram requires asserting a regular point");
    r.assumed_regular_point = true;
  }
  r.in_support = true;
  r.l_V = m.l_V;
  r.m_sev = m.m_sev;
  r.mu = m.mu;
  r.xi = m.xi;
  r.edge_classes = std::move(m.edge_classes);
  return r;
}

inline CVectorReport severi_weight(const SeveriSpec& spec, const WeightFunction& w,
                                   bool assume_regular_point = false) {
  return severi_report(spec.polygon(), severi_dimension(spec), w, assume_regular_point);
}

}  // namespace tropsev
