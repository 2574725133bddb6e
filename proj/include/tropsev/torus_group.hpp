#pragma once

// The inner-edge exponent matrix of a nodal subdivision, its Smith form,
// special points of parallelograms, and the boundary-binomial membership test.

#include <vector>

#include "tropsev/initial_forms.hpp"
#include "tropsev/matrix.hpp"
#include "tropsev/subdivision.hpp"

namespace tropsev {

struct SpecialPointSet {
  std::size_t face = 0;
  std::vector<LatticePoint> points;
};

namespace detail {

inline void require_parallelogram(const LatticePolygon& p) {
  if (!p.is_parallelogram()) throw NotParallelogram(p.str() + " is not a parallelogram");
}

/// Coordinates of p - corner in the basis of primitive side vectors u, w.
inline std::pair<Rational, Rational> side_coordinates(const LatticePoint& p, const LatticePoint& corner,
                                                      const LatticePoint& u, const LatticePoint& w) {
  const LatticePoint d = p - corner;
  const Integer det = cross(u, w);
  return {make_rational(cross(d, w), det), make_rational(cross(u, d), det)};
}

}  // namespace detail

/// Lattice points of the parallelogram not in corner + Z u + Z w, where u, w
/// are the primitive side vectors.
inline std::vector<LatticePoint> special_points(const LatticePolygon& p) {
  detail::require_parallelogram(p);
  const auto& v = p.vertices();
  const LatticePoint u = primitive(v[1] - v[0]);
  const LatticePoint w = primitive(v[3] - v[0]);
  std::vector<LatticePoint> out;
  for (const auto& q : p.lattice_points()) {
    auto [s, t] = detail::side_coordinates(q, v[0], u, w);
    if (!is_integral(s) || !is_integral(t)) out.push_back(q);
  }
  return out;
}

struct GroupPresentation {
  IntegerMatrix matrix;                 // rows: interior edges; columns: (alpha_i, beta_i) per face
  std::vector<std::size_t> row_edges;   // subdivision edge index of each row
  std::vector<Integer> snf;
  Integer l_V = 1;
  std::size_t dim_G = 0;
  std::vector<SpecialPointSet> special_points;
  std::vector<LatticePoint> support_set;  // lattice points that are not special
};

/// One row per interior edge shared by faces i < j (rows sorted by (i, j)),
/// +v in the columns of face i and -v in those of face j, where v is the
/// primitive edge vector leaving the endpoint that comes first in (y, x) order.
inline GroupPresentation build_matrix(const Subdivision& s) {
  if (!s.flags().nodal) throw NotNodal("subdivision has a face that is neither a triangle nor a parallelogram");
  const std::size_t faces = s.faces().size();
  std::vector<std::size_t> rows;
  for (std::size_t e = 0; e < s.edges().size(); ++e)
    if (s.edges()[e].interior) rows.push_back(e);
  std::sort(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) {
    const auto& fa = s.edges()[a].faces;
    const auto& fb = s.edges()[b].faces;
    return fa != fb ? fa < fb : a < b;
  });

  GroupPresentation g;
  g.row_edges = rows;
  g.matrix = IntegerMatrix(rows.size(), 2 * faces);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& edge = s.edges()[rows[r]];
    const LatticePoint v = primitive(edge.segment.b - edge.segment.a);
    const auto i = static_cast<std::size_t>(edge.faces[0]);
    const auto j = static_cast<std::size_t>(edge.faces[1]);
    g.matrix(r, 2 * i) = v.x;
    g.matrix(r, 2 * i + 1) = v.y;
    g.matrix(r, 2 * j) = -v.x;
    g.matrix(r, 2 * j + 1) = -v.y;
  }
  if (!rows.empty()) {
    const auto snf = smith_normal_form(g.matrix);
    g.snf = snf.diagonal;
    g.l_V = snf.nonzero_product();
    g.dim_G = 2 * faces - snf.rank();
  } else {
    g.dim_G = 2 * faces;
  }

  std::vector<LatticePoint> special;
  for (std::size_t f : s.parallelograms()) {
    SpecialPointSet set{f, special_points(s.faces()[f])};
    special.insert(special.end(), set.points.begin(), set.points.end());
    g.special_points.push_back(std::move(set));
  }
  std::sort(special.begin(), special.end());
  for (const auto& p : s.polygon().lattice_points())
    if (!std::binary_search(special.begin(), special.end(), p)) g.support_set.push_back(p);
  return g;
}

namespace detail {

inline Integer binomial(const Integer& n, const Integer& k) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return r;
}

/// Coefficients c_0..c_s along a segment equal C(s,k) c_0 r^k with c_0, c_s nonzero.
inline bool is_binomial_power(const std::vector<GaussianRational>& c) {
  const std::size_t s = c.size() - 1;
  if (c.front().is_zero() || c.back().is_zero()) return false;
  const GaussianRational ratio = c[1] / (GaussianRational(Rational(long(s))) * c[0]);
  GaussianRational power(1);
  for (std::size_t k = 0; k <= s; ++k) {
    const GaussianRational expected =
        GaussianRational(Rational(binomial(Integer(long(s)), Integer(long(k))))) * c[0] * power;
    if (c[k] != expected) return false;
    power = power * ratio;
  }
  return true;
}

inline std::vector<GaussianRational> restriction(const ComplexPoly& f, const Segment& e) {
  std::vector<GaussianRational> c;
  for (const auto& p : segment_points(e)) c.push_back(f.coefficient(p));
  return c;
}

}  // namespace detail

/// Every edge restriction of every face is a pure binomial power (times a
/// monomial); on parallelograms f also factors as a product of the two side
/// binomial powers, which forces zeros at the special points.
inline bool is_in_V_boundary(const ComplexPoly& f, const Subdivision& s) {
  for (const auto& [a, c] : f.terms())
    if (!s.polygon().contains(a))
      throw SupportMismatch("monomial " + a.str() + " outside " + s.polygon().str());
  for (const auto& face : s.faces()) {
    for (const auto& e : face.edges())
      if (!detail::is_binomial_power(detail::restriction(f, e))) return false;
    if (!face.is_parallelogram()) continue;
    const auto& v = face.vertices();
    const LatticePoint u = primitive(v[1] - v[0]);
    const LatticePoint w = primitive(v[3] - v[0]);
    const auto base = f.coefficient(v[0]);
    for (const auto& q : face.lattice_points()) {
      auto [i, j] = detail::side_coordinates(q, v[0], u, w);
      if (!is_integral(i) || !is_integral(j)) {
        if (!f.coefficient(q).is_zero()) return false;
        continue;
      }
      const LatticePoint qi = v[0] + Integer(i.get_num()) * u;
      const LatticePoint qj = v[0] + Integer(j.get_num()) * w;
      if (f.coefficient(q) * base != f.coefficient(qi) * f.coefficient(qj)) return false;
    }
  }
  return true;
}

}  // namespace tropsev
