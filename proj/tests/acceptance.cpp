// Acceptance gate: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "oracles.hpp"

using namespace tropsev;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Gate {
  int failures = 0;
  void report(int n, bool ok, const std::string& detail) {
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
    if (!ok) ++failures;
  }
};

template <class F>
bool guarded(F&& f, std::string& detail) {
  try {
    return f();
  } catch (const std::exception& e) {
    detail += std::string(" exception: ") + e.what();
    return false;
  }
}

WeightFunction discriminant_weight(const LatticePolygon& p) {
  return WeightFunction::from_pairs(p, {{{0, 0}, Rational(-1)}, {{0, 1}, Rational(0)}, {{0, 2}, Rational(0)},
                                        {{1, 1}, Rational(0)}, {{2, 1}, Rational(0)}});
}

bool criterion1(std::string& d) {
  const auto t0 = Clock::now();
  const auto p = LatticePolygon::from_vertices({{0, 0}, {0, 4}, {2, 2}});
  const auto s = Subdivision::from_faces(p, {LatticePolygon::from_vertices({{0, 0}, {2, 2}, {1, 2}}),
                                             LatticePolygon::from_vertices({{0, 0}, {1, 2}, {0, 4}}),
                                             LatticePolygon::from_vertices({{1, 2}, {2, 2}, {0, 4}})});
  const auto g = build_matrix(s);
  const double t = seconds_since(t0);
  const IntegerMatrix expected{{1, 2, -1, -2, 0, 0}, {1, 0, 0, 0, -1, 0}, {0, 0, -1, 2, 1, -2}};
  std::string snf;
  for (const auto& v : g.snf) snf += (snf.empty() ? "" : ",") + v.get_str();
  d = "SNF diag(" + snf + ") l_V " + g.l_V.get_str() + " dim_G " +
      std::to_string(g.dim_G) + " in " + std::to_string(t) + " s";
  return g.matrix == expected && g.snf == std::vector<Integer>{1, 1, 2} && g.l_V == 2 && g.dim_G == 3 && t < 1.0;
}

bool criterion2(std::string& d) {
  const auto t0 = Clock::now();
  const auto p = LatticePolygon::from_vertices({{0, 0}, {0, 2}, {2, 1}});
  const SeveriSpec spec(p, 1);
  const auto r = severi_weight(spec, discriminant_weight(p));
  const double t = seconds_since(t0);
  const auto& s = r.subdivision;
  const bool split = s.faces().size() == 2 && s.triangles().size() == 2 && s.edge_index(Segment{{0, 1}, {2, 1}});
  d = "rank " + std::to_string(r.rank) + " dim " + std::to_string(severi_dimension(spec)) + " m_sev " +
      r.m_sev.get_str() + " mu " + r.mu.get_str() + " xi " + r.xi.get_str() + " in " + std::to_string(t) + " s";
  return split && r.rank == 3 && severi_dimension(spec) == 3 && r.m_sev == 2 && r.mu == 4 && r.xi == 2 &&
         Rational(r.m_sev) * r.xi == Rational(r.mu) && t < 1.0;
}

bool criterion3(std::string& d) {
  const auto t0 = Clock::now();
  const ComplexPoly l{{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}};
  const ComplexPoly one_plus_x{{{0, 0}, 1}, {{1, 0}, 1}};
  const auto f = LaurentPoly::from(l * l);
  const bool initial_ok = initial_form(f, 0, -1) == one_plus_x * one_plus_x;
  const auto c = dualize(newton_polygon(f), valuation_weight(f));
  bool rays_ok = c.rays.size() == 3;
  for (const auto& r : c.rays) rays_ok = rays_ok && r.weight == 2;
  const bool balanced = check_balancing(c);
  const double t = seconds_since(t0);
  d = std::string("initial form ") + (initial_ok ? "(1+x)^2" : "wrong") + ", " + std::to_string(c.rays.size()) +
      " rays, balanced " + (balanced ? "yes" : "no") + " in " + std::to_string(t) + " s";
  return initial_ok && rays_ok && balanced && t < 1.0;
}

struct DegreeCase {
  long d;
  std::size_t delta;
  long expected;
};

const DegreeCase kCases[] = {{1, 0, 1}, {2, 1, 3}, {3, 1, 12}};

bool criterion4(std::string& d, std::vector<SeveriDegreeReport>& reports) {
  bool ok = true;
  for (const auto& c : kCases) {
    const auto t0 = Clock::now();
    const auto r = count_severi_degree(SeveriSpec(LatticePolygon::simplex(c.d), c.delta), 1, CountStrategy::Both);
    const double t = seconds_since(t0);
    const Integer classical = c.delta == 0 ? Integer(1) : oracle::nodal_plane_curves(c.d);
    const bool here = r.subdivision_degree && r.path_degree && *r.subdivision_degree == *r.path_degree &&
                      r.degree == c.expected && r.degree == classical && t < 60.0;
    d += "d=" + std::to_string(c.d) + " delta=" + std::to_string(c.delta) + ": " + r.degree.get_str() + " (" +
         std::to_string(t) + " s); ";
    ok = ok && here;
    reports.push_back(r);
  }
  return ok;
}

bool criterion5(std::string& d, const std::vector<SeveriDegreeReport>& seed1) {
  bool ok = true;
  for (std::size_t k = 0; k < std::size(kCases); ++k) {
    const auto& c = kCases[k];
    const SeveriSpec spec(LatticePolygon::simplex(c.d), c.delta);
    std::vector<std::string> degrees{seed1[k].degree.get_str()};
    std::vector<std::uint64_t> used{seed1[k].configuration.seed};
    for (std::uint64_t seed : {2u, 3u}) {
      const auto r = count_severi_degree(spec, seed, CountStrategy::SubdivisionSolve);
      degrees.push_back(r.degree.get_str());
      used.push_back(r.configuration.seed);
    }
    const bool distinct = used[0] != used[1] && used[1] != used[2] && used[0] != used[2];
    const bool same = degrees[0] == degrees[1] && degrees[1] == degrees[2];
    d += "d=" + std::to_string(c.d) + ": " + degrees[0] + "/" + degrees[1] + "/" + degrees[2] + "; ";
    ok = ok && distinct && same;
  }
  return ok;
}

struct Tally {
  std::size_t passed = 0, failed = 0;
  void operator()(bool ok) { ++(ok ? passed : failed); }
  std::string str() const { return std::to_string(passed) + "/" + std::to_string(passed + failed); }
};

bool criterion6(std::string& d, const std::vector<SeveriDegreeReport>& reports) {
  Rng rng(2024);
  Tally a, b, c, dd, e, f;
  for (int i = 0; i < 100; ++i) {
    // (a) Pick, Euler, area additivity
    const auto p = random_polygon(rng, 4, 16);
    const auto w = random_weight(rng, p);
    const auto s = concave_hull(p, w).subdivision;
    bool ok = true;
    std::set<LatticePoint> verts;
    std::set<std::pair<LatticePoint, LatticePoint>> edges;
    Integer area = 0;
    for (const auto& face : s.faces()) {
      const auto h = oracle::hull(face.vertices());
      const auto pts = oracle::lattice_points(h);
      const auto bnd = oracle::boundary_count(h);
      ok = ok && oracle::twice_area(h) == 2 * Integer(static_cast<long>(pts.size() - bnd)) +
                                              Integer(static_cast<long>(bnd)) - 2;
      area += oracle::twice_area(h);
      for (std::size_t k = 0; k < h.size(); ++k) {
        verts.insert(h[k]);
        auto x = h[k], y = h[(k + 1) % h.size()];
        if (y < x) std::swap(x, y);
        edges.insert({x, y});
      }
    }
    ok = ok && area == oracle::twice_area(p.vertices()) && verts.size() + s.faces().size() == edges.size() + 1 &&
         s.vertices().size() == verts.size() && s.edges().size() == edges.size();
    a(ok);

    // (c) balancing of dualize output
    c(check_balancing(dualize(p, w)));

    // (b), (d) on regular nodal subdivisions
    const auto n = random_nodal_subdivision(rng);
    std::set<LatticePoint> nv;
    for (const auto& face : n.subdivision.faces())
      for (const auto& v : oracle::hull(face.vertices())) nv.insert(v);
    const std::size_t formula = nv.size() - 1 - n.subdivision.parallelograms().size();
    b(rank(n.subdivision) == oracle::facewise_affine_dimension(n.subdivision) &&
      rank_nodal_formula(n.subdivision) == formula && rank(n.subdivision) == formula);
    const auto g = build_matrix(n.subdivision);
    dd(g.dim_G == formula &&
       g.dim_G == 2 * n.subdivision.faces().size() - oracle::rank(oracle::to_rational(g.matrix.to_rows())));

    // (e) Bernstein on polygon pairs with at most 8 lattice points
    const auto p1 = random_polygon(rng, 3, 8), p2 = random_polygon(rng, 3, 8);
    const auto r = stable_intersect(dualize(p1, random_weight(rng, p1, 6)), dualize(p2, random_weight(rng, p2, 6)),
                                    static_cast<std::uint64_t>(i));
    e(r.total == oracle::mixed_volume(p1.vertices(), p2.vertices()));
  }
  // (f) every solution behind criterion 4
  for (const auto& rep : reports)
    for (const auto& sol : rep.solutions) {
      const auto m = severi_multiplicities(sol.subdivision);
      f(Rational(m.m_sev) * m.xi == Rational(m.mu) && m.mu == sol.mu);
    }
  d = "(a) " + a.str() + " (b) " + b.str() + " (c) " + c.str() + " (d) " + dd.str() + " (e) " + e.str() + " (f) " +
      f.str();
  const bool enough = a.passed + a.failed >= 100 && f.passed + f.failed >= 1;
  return enough && !a.failed && !b.failed && !c.failed && !dd.failed && !e.failed && !f.failed;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

bool criterion7(std::string& d) {
  const fs::path dir = fs::temp_directory_path() / ("tropsev_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  write(dir / "cubic.json", R"({"vertices":[[0,0],[3,0],[0,3]]})");
  write(dir / "tri.json", R"({"vertices":[[0,0],[0,4],[2,2]]})");
  write(dir / "tri_sub.json", R"({"faces":[[[0,0],[2,2],[1,2]],[[0,0],[1,2],[0,4]],[[1,2],[2,2],[0,4]]]})");
  write(dir / "disc.json", R"({"vertices":[[0,0],[0,2],[2,1]]})");
  write(dir / "disc_w.json", R"({"values":[[0,0,"-1"],[0,1,"0"],[0,2,"0"],[1,1,"0"],[2,1,"0"]]})");
  const std::string cli = TROPSEV_CLI;
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"count --polygon cubic.json --delta 1 --seed 5 --strategy both --workers 1",
       "count --polygon cubic.json --delta 1 --seed 5 --strategy both --workers 4"},
      {"group --polygon tri.json --subdivision tri_sub.json", "group --polygon tri.json --subdivision tri_sub.json"},
      {"weight --polygon disc.json --delta 1 --weights disc_w.json",
       "weight --polygon disc.json --delta 1 --weights disc_w.json"},
      {"check --seed 3 --instances 100", "check --seed 3 --instances 100"}};
  bool ok = true;
  int k = 0;
  for (const auto& [first, second] : pairs) {
    std::string outputs[2];
    const std::string args[2] = {first, second};
    for (int r = 0; r < 2; ++r) {
      const fs::path out = dir / ("out_" + std::to_string(k) + "_" + std::to_string(r) + ".json");
      const std::string cmd = "cd '" + dir.string() + "' && '" + cli + "' " + args[r] + " --json-out '" +
                              out.string() + "'";
      const int status = std::system(cmd.c_str());
      outputs[r] = slurp(out);
      if (status != 0 || outputs[r].empty()) ok = false;
    }
    const bool same = outputs[0] == outputs[1];
    d += args[0].substr(0, args[0].find(' ')) + (same ? " identical; " : " DIFFERS; ");
    ok = ok && same;
    ++k;
  }
  fs::remove_all(dir);
  return ok;
}

}  // namespace

int main() {
  Gate gate;
  std::string d;
  std::vector<SeveriDegreeReport> reports;

  d.clear();
  gate.report(1, guarded([&] { return criterion1(d); }, d), d);
  d.clear();
  gate.report(2, guarded([&] { return criterion2(d); }, d), d);
  d.clear();
  gate.report(3, guarded([&] { return criterion3(d); }, d), d);
  d.clear();
  gate.report(4, guarded([&] { return criterion4(d, reports); }, d), d);
  d.clear();
  gate.report(5, guarded([&] { return reports.size() == std::size(kCases) && criterion5(d, reports); }, d), d);
  d.clear();
  gate.report(6, guarded([&] { return criterion6(d, reports); }, d), d);
  d.clear();
  gate.report(7, guarded([&] { return criterion7(d); }, d), d);

  std::cout << (gate.failures == 0 ? "all criteria passed" : std::to_string(gate.failures) + " criteria failed")
            << std::endl;
  return gate.failures == 0 ? 0 : 1;
}
