#pragma once

// Plain SVG drawings of subdivisions and tropical curves.

#include <cstdio>
#include <sstream>
#include <string>

#include "tropsev/dual_curve.hpp"

namespace tropsev {

namespace svg_detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Frame {
  double x0, y0, x1, y1, scale;
  std::string px(double x) const { return num((x - x0) * scale + 20); }
  std::string py(double y) const { return num((y1 - y) * scale + 20); }
  std::string header() const {
    const double w = (x1 - x0) * scale + 40, h = (y1 - y0) * scale + 40;
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) + "\">\n";
  }
};

inline Frame frame(double x0, double y0, double x1, double y1, double target = 400) {
  if (x1 - x0 < 1) x1 = x0 + 1;
  if (y1 - y0 < 1) y1 = y0 + 1;
  return {x0, y0, x1, y1, target / std::max(x1 - x0, y1 - y0)};
}

}  // namespace svg_detail

inline std::string subdivision_svg(const Subdivision& s) {
  const auto& pts = s.polygon().lattice_points();
  double x0 = pts[0].x.get_d(), x1 = x0, y0 = pts[0].y.get_d(), y1 = y0;
  for (const auto& p : pts) {
    x0 = std::min(x0, p.x.get_d());
    x1 = std::max(x1, p.x.get_d());
    y0 = std::min(y0, p.y.get_d());
    y1 = std::max(y1, p.y.get_d());
  }
  const auto fr = svg_detail::frame(x0, y0, x1, y1);
  std::ostringstream out;
  out << fr.header();
  for (const auto& face : s.faces()) {
    out << "<polygon fill=\"" << (face.size() == 4 ? "#dde8f5" : "#f5f0dd") << "\" stroke=\"black\" points=\"";
    for (const auto& v : face.vertices()) out << fr.px(v.x.get_d()) << ',' << fr.py(v.y.get_d()) << ' ';
    out << "\"/>\n";
  }
  for (const auto& p : pts)
    out << "<circle cx=\"" << fr.px(p.x.get_d()) << "\" cy=\"" << fr.py(p.y.get_d()) << "\" r=\"3\" fill=\""
        << (s.is_vertex(p) ? "black" : "white") << "\" stroke=\"black\"/>\n";
  out << "</svg>\n";
  return out.str();
}

/// Rays are drawn with a length fixed relative to the bounding box of the vertices.
inline std::string curve_svg(const TropicalCurve& c) {
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!c.vertices.empty()) {
    x0 = x1 = c.vertices[0].x.get_d();
    y0 = y1 = c.vertices[0].y.get_d();
  }
  for (const auto& v : c.vertices) {
    x0 = std::min(x0, v.x.get_d());
    x1 = std::max(x1, v.x.get_d());
    y0 = std::min(y0, v.y.get_d());
    y1 = std::max(y1, v.y.get_d());
  }
  const double reach = std::max({x1 - x0, y1 - y0, 1.0}) * 0.5;
  auto fr = svg_detail::frame(x0 - reach, y0 - reach, x1 + reach, y1 + reach);
  std::ostringstream out;
  out << fr.header();
  auto line = [&](double ax, double ay, double bx, double by, const Integer& w) {
    out << "<line x1=\"" << fr.px(ax) << "\" y1=\"" << fr.py(ay) << "\" x2=\"" << fr.px(bx) << "\" y2=\"" << fr.py(by)
        << "\" stroke=\"black\" stroke-width=\"" << w.get_str() << "\"/>\n";
    if (w != 1)
      out << "<text x=\"" << fr.px((ax + bx) / 2) << "\" y=\"" << fr.py((ay + by) / 2) << "\" font-size=\"12\">"
          << w.get_str() << "</text>\n";
  };
  for (const auto& e : c.edges)
    line(c.vertices[e.from].x.get_d(), c.vertices[e.from].y.get_d(), c.vertices[e.to].x.get_d(),
         c.vertices[e.to].y.get_d(), e.weight);
  for (const auto& r : c.rays) {
    const double dx = r.direction.x.get_d(), dy = r.direction.y.get_d();
    const double len = reach / std::max(std::abs(dx), std::abs(dy));
    const double ax = c.vertices[r.from].x.get_d(), ay = c.vertices[r.from].y.get_d();
    line(ax, ay, ax + dx * len, ay + dy * len, r.weight);
  }
  for (const auto& v : c.vertices)
    out << "<circle cx=\"" << fr.px(v.x.get_d()) << "\" cy=\"" << fr.py(v.y.get_d()) << "\" r=\"3\" fill=\"black\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace tropsev
