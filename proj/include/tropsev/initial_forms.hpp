#pragma once

// Laurent polynomials over truncated Puiseux series with Gaussian-rational
// coefficients, their valuations, and initial forms.

#include <map>
#include <utility>
#include <vector>

#include "tropsev/subdivision.hpp"

namespace tropsev {

/// Exact complex number with rational real and imaginary parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }
  GaussianRational(long r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    const Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw ZeroScalar("division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::string str() const {
    if (im == 0) return re.get_str();
    return "(" + re.get_str() + (sign(im) < 0 ? "" : "+") + im.get_str() + "i)";
  }
};

/// Finite sum of c * t^e. Terms are kept with strictly decreasing exponents
/// and nonzero coefficients; the empty sum is zero.
class PuiseuxScalar {
 public:
  using Term = std::pair<Rational, GaussianRational>;  // (exponent, coefficient)

  PuiseuxScalar() = default;
  PuiseuxScalar(GaussianRational c) { add(Rational(0), c); }
  PuiseuxScalar(long c) : PuiseuxScalar(GaussianRational(c)) {}
  explicit PuiseuxScalar(std::vector<Term> terms) {
    for (auto& [e, c] : terms) add(e, c);
  }

  /// c * t^e
  static PuiseuxScalar monomial(const GaussianRational& c, const Rational& e) {
    PuiseuxScalar s;
    s.add(e, c);
    return s;
  }
  static PuiseuxScalar t(const Rational& e = Rational(1)) { return monomial(GaussianRational(1), e); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(Rational e, const GaussianRational& c) {
    e.canonicalize();
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Rational& x) { return t.first > x; });
    if (it != terms_.end() && it->first == e) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    } else if (!c.is_zero()) {
      terms_.insert(it, {e, c});
    }
  }

  friend PuiseuxScalar operator+(PuiseuxScalar a, const PuiseuxScalar& b) {
    for (const auto& [e, c] : b.terms_) a.add(e, c);
    return a;
  }
  friend PuiseuxScalar operator*(const PuiseuxScalar& a, const PuiseuxScalar& b) {
    PuiseuxScalar p;
    for (const auto& [e1, c1] : a.terms_)
      for (const auto& [e2, c2] : b.terms_) p.add(e1 + e2, c1 * c2);
    return p;
  }
  friend bool operator==(const PuiseuxScalar& a, const PuiseuxScalar& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;
};

/// Largest exponent present.
inline Rational valuation(const PuiseuxScalar& b) {
  if (b.is_zero()) throw ZeroScalar("valuation of zero");
  return b.terms().front().first;
}

inline GaussianRational leading_coefficient(const PuiseuxScalar& b) {
  if (b.is_zero()) throw ZeroScalar("leading coefficient of zero");
  return b.terms().front().second;
}

/// Polynomial with exact complex coefficients; zero coefficients are never stored.
class ComplexPoly {
 public:
  ComplexPoly() = default;
  ComplexPoly(std::initializer_list<std::pair<std::pair<long, long>, long>> terms) {
    for (const auto& [a, c] : terms) add(LatticePoint(a.first, a.second), GaussianRational(c));
  }

  void add(const LatticePoint& a, const GaussianRational& c) {
    auto& slot = terms_[a];
    slot += c;
    if (slot.is_zero()) terms_.erase(a);
  }
  const std::map<LatticePoint, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coefficient(const LatticePoint& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? GaussianRational() : it->second;
  }
  std::vector<LatticePoint> support() const {
    std::vector<LatticePoint> s;
    for (const auto& [a, c] : terms_) s.push_back(a);
    return s;
  }

  friend ComplexPoly operator*(const ComplexPoly& f, const ComplexPoly& g) {
    ComplexPoly p;
    for (const auto& [a, c] : f.terms_)
      for (const auto& [b, d] : g.terms_) p.add(a + b, c * d);
    return p;
  }
  friend bool operator==(const ComplexPoly& f, const ComplexPoly& g) { return f.terms_ == g.terms_; }

 private:
  std::map<LatticePoint, GaussianRational> terms_;
};

/// Laurent polynomial with Puiseux coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  void add(const LatticePoint& a, const PuiseuxScalar& c) {
    auto& slot = terms_[a];
    slot = slot + c;
    if (slot.is_zero()) terms_.erase(a);
  }
  const std::map<LatticePoint, PuiseuxScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::vector<LatticePoint> support() const {
    std::vector<LatticePoint> s;
    for (const auto& [a, c] : terms_) s.push_back(a);
    return s;
  }

  static LaurentPoly from(const ComplexPoly& f) {
    LaurentPoly p;
    for (const auto& [a, c] : f.terms()) p.add(a, PuiseuxScalar(c));
    return p;
  }

  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly p;
    for (const auto& [a, c] : f.terms_)
      for (const auto& [b, d] : g.terms_) p.add(a + b, c * d);
    return p;
  }
  friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) {
    for (const auto& [a, c] : g.terms_) f.add(a, c);
    return f;
  }

 private:
  std::map<LatticePoint, PuiseuxScalar> terms_;
};

/// Newton polygon of f; throws InvalidPolygon when it is not two-dimensional.
inline LatticePolygon newton_polygon(const LaurentPoly& f) { return LatticePolygon(f.support()); }

/// nu_f on the support of f: the concave hull of a -> Val(c_a), handled also
/// when the Newton polygon is a segment or a point.
inline std::map<LatticePoint, Rational> nu(const LaurentPoly& f) {
  if (f.is_zero()) throw ZeroScalar("nu of the zero polynomial");
  std::map<LatticePoint, Rational> val;
  for (const auto& [a, c] : f.terms()) val[a] = valuation(c);
  const auto supp = f.support();
  const auto hull = convex_hull(supp);
  if (hull.size() >= 3) {
    LatticePolygon newton(supp);
    Rational below = val.begin()->second;
    for (const auto& [a, v] : val) below = std::min(below, v);
    below -= 1;
    std::vector<Rational> psi;
    for (const auto& p : newton.lattice_points()) {
      auto it = val.find(p);
      psi.push_back(it == val.end() ? below : it->second);
    }
    const auto ch = concave_hull(newton, WeightFunction(newton, std::move(psi)));
    std::map<LatticePoint, Rational> out;
    for (const auto& [a, v] : val) out[a] = ch.value_at(a);
    return out;
  }
  if (hull.size() == 1) return val;
  // Collinear support: upper concave chain over the line parameter.
  const LatticePoint origin = hull[0];
  const LatticePoint step = primitive(hull[1] - hull[0]);
  std::vector<std::pair<Integer, Rational>> pts;  // (parameter, value), sorted
  for (const auto& [a, v] : val) {
    const LatticePoint d = a - origin;
    pts.emplace_back(step.x != 0 ? Integer(d.x / step.x) : Integer(d.y / step.y), v);
  }
  std::sort(pts.begin(), pts.end());
  std::vector<std::size_t> chain;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    while (chain.size() >= 2) {
      const auto& i = pts[chain[chain.size() - 2]];
      const auto& j = pts[chain.back()];
      const auto& q = pts[k];
      if ((j.second - i.second) * Rational(q.first - i.first) <=
          (q.second - i.second) * Rational(j.first - i.first))
        chain.pop_back();
      else
        break;
    }
    chain.push_back(k);
  }
  std::map<LatticePoint, Rational> out;
  std::size_t seg = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    while (seg + 2 < chain.size() && pts[chain[seg + 1]].first <= pts[k].first) ++seg;
    const auto& i = pts[chain[seg]];
    const auto& j = pts[chain[std::min(seg + 1, chain.size() - 1)]];
    Rational v = i.second;
    if (j.first != i.first)
      v += (j.second - i.second) * Rational(pts[k].first - i.first) / Rational(j.first - i.first);
    out[origin + Integer(pts[k].first) * step] = v;
  }
  return out;
}

/// in_w f: the leading coefficients c°_a (zero where nu_f exceeds Val(c_a))
/// over the argmax of a . w + nu_f(a).
inline ComplexPoly initial_form(const LaurentPoly& f, const Rational& wx, const Rational& wy) {
  const auto nf = nu(f);
  std::optional<Rational> best;
  for (const auto& [a, v] : nf) {
    const Rational deg = wx * a.x + wy * a.y + v;
    if (!best || deg > *best) best = deg;
  }
  ComplexPoly out;
  for (const auto& [a, v] : nf) {
    if (wx * a.x + wy * a.y + v != *best) continue;
    const auto& c = f.terms().at(a);
    if (valuation(c) == v) out.add(a, leading_coefficient(c));
  }
  return out;
}

inline ComplexPoly initial_form(const LaurentPoly& f, long wx, long wy) {
  return initial_form(f, Rational(wx), Rational(wy));
}

/// Val(c_a) on the support of f, and a value below every valuation on the
/// other lattice points of the Newton polygon; its concave hull is nu_f.
inline WeightFunction valuation_weight(const LaurentPoly& f) {
  const LatticePolygon newton = newton_polygon(f);
  Rational below = valuation(f.terms().begin()->second);
  for (const auto& [a, c] : f.terms()) below = std::min(below, valuation(c));
  below -= 1;
  std::vector<Rational> psi;
  for (const auto& p : newton.lattice_points()) {
    auto it = f.terms().find(p);
    psi.push_back(it == f.terms().end() ? below : valuation(it->second));
  }
  return {newton, std::move(psi)};
}

/// For every 2-face of the subdivision induced by nu_f, the c° data on it.
inline std::vector<std::pair<LatticePolygon, ComplexPoly>> face_polynomials(const LaurentPoly& f) {
  const LatticePolygon newton = newton_polygon(f);
  const auto nf = nu(f);
  const auto ch = concave_hull(newton, valuation_weight(f));
  std::vector<std::pair<LatticePolygon, ComplexPoly>> out;
  for (const auto& face : ch.subdivision.faces()) {
    ComplexPoly g;
    for (const auto& [a, c] : f.terms())
      if (face.contains(a) && valuation(c) == nf.at(a)) g.add(a, leading_coefficient(c));
    out.emplace_back(face, std::move(g));
  }
  return out;
}

}  // namespace tropsev
