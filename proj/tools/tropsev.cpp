#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tropsev/tropsev.hpp"

namespace fs = std::filesystem;
using namespace tropsev;

namespace {

struct Options {
  std::string polygon, weights, subdivision, polynomial, json_out, emit_svg;
  std::vector<std::string> curves;
  std::size_t delta = 0;
  std::uint64_t seed = 1;
  std::string strategy = "both";
  unsigned workers = 0;
  std::size_t instances = 100;
  bool assume_regular_point = false;
};

Json read_json(const std::string& path, const char* flag) {
  if (path.empty()) throw SchemaError(std::string("missing ") + flag);
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write " + path.string());
  out << text;
}

void emit(const Options& o, const Json& j) {
  const std::string text = dump_compact(j);
  if (o.json_out.empty()) std::cout << text;
  else write_file(o.json_out, text);
}

fs::path svg_dir(const Options& o) {
  fs::create_directories(o.emit_svg);
  return o.emit_svg;
}

LatticePolygon polygon(const Options& o) { return polygon_from_json(read_json(o.polygon, "--polygon")); }

WeightFunction weights(const Options& o, const LatticePolygon& p) {
  return weight_from_json(p, read_json(o.weights, "--weights"));
}

void cmd_subdivide(const Options& o) {
  const auto p = polygon(o);
  const auto s = concave_hull(p, weights(o, p)).subdivision;
  if (!o.emit_svg.empty()) write_file(svg_dir(o) / "subdivision.svg", subdivision_svg(s));
  emit(o, to_json(s));
}

void cmd_curve(const Options& o) {
  TropicalCurve c;
  if (!o.polynomial.empty()) {
    const auto f = polynomial_from_json(read_json(o.polynomial, "--polynomial"));
    if (f.is_zero()) throw ZeroScalar("the zero polynomial has no curve");
    const auto w = valuation_weight(f);
    c = dualize(newton_polygon(f), w);
  } else {
    const auto p = polygon(o);
    c = dualize(p, weights(o, p));
  }
  if (!check_balancing(c)) throw InvariantBreach("dual curve is not balanced");
  if (!o.emit_svg.empty()) {
    const auto dir = svg_dir(o);
    write_file(dir / "curve.svg", curve_svg(c));
    write_file(dir / "subdivision.svg", subdivision_svg(c.dual));
  }
  emit(o, to_json(c));
}

void cmd_weight(const Options& o) {
  const auto p = polygon(o);
  const SeveriSpec spec(p, o.delta);
  emit(o, to_json(severi_weight(spec, weights(o, p), o.assume_regular_point)));
}

void cmd_group(const Options& o) {
  const auto p = polygon(o);
  Subdivision s;
  if (!o.subdivision.empty()) s = subdivision_from_json(p, read_json(o.subdivision, "--subdivision"));
  else s = concave_hull(p, weights(o, p)).subdivision;
  emit(o, to_json(build_matrix(s)));
}

void cmd_intersect(const Options& o) {
  if (o.curves.size() != 2) throw SchemaError("intersect needs --curve twice");
  const auto a = curve_from_json(read_json(o.curves[0], "--curve"));
  const auto b = curve_from_json(read_json(o.curves[1], "--curve"));
  emit(o, to_json(stable_intersect(a, b, o.seed)));
}

void cmd_count(const Options& o) {
  const SeveriSpec spec(polygon(o), o.delta);
  const unsigned workers = o.workers == 0 ? default_workers() : o.workers;
  const auto report = count_severi_degree(spec, o.seed, strategy_from_string(o.strategy), workers);
  if (!o.emit_svg.empty()) {
    const auto dir = svg_dir(o);
    for (std::size_t k = 0; k < report.solutions.size(); ++k) {
      const auto& sol = report.solutions[k];
      const std::string stem = "solution_" + std::to_string(k);
      write_file(dir / (stem + "_curve.svg"), curve_svg(dualize(spec.polygon(), sol.omega)));
      write_file(dir / (stem + "_subdivision.svg"), subdivision_svg(sol.subdivision));
    }
  }
  emit(o, to_json(report));
}

struct Suite {
  const char* name;
  std::size_t passed = 0, failed = 0;
  void record(bool ok) { ++(ok ? passed : failed); }
};

void cmd_check(const Options& o) {
  Rng rng(o.seed);
  Suite balancing{"balancing"}, euler{"euler"}, rank_formula{"rank_formula"}, mult{"m_sev_xi_mu"};
  for (std::size_t i = 0; i < o.instances; ++i) {
    const auto p = random_polygon(rng, 3, 10);
    const auto c = dualize(p, random_weight(rng, p));
    balancing.record(check_balancing(c));
    const auto& s = c.dual;
    euler.record(s.vertices().size() + s.faces().size() == s.edges().size() + 1);

    const auto n = random_nodal_subdivision(rng);
    rank_formula.record(rank(n.subdivision) == rank_nodal_formula(n.subdivision));
    if (n.subdivision.flags().simple) {
      const auto m = severi_multiplicities(n.subdivision);
      mult.record(Rational(m.m_sev) * m.xi == Rational(m.mu));
    }
  }
  Json suites = Json::array();
  bool ok = true;
  for (const Suite* s : {&balancing, &euler, &rank_formula, &mult}) {
    suites.push_back(Json{{"name", s->name}, {"passed", s->passed}, {"failed", s->failed}});
    ok = ok && s->failed == 0;
  }
  emit(o, Json{{"seed", o.seed}, {"instances", o.instances}, {"suites", suites}});
  if (!ok) throw InvariantBreach("invariant suite failures");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tropical Severi variety computations"};
  app.require_subcommand(1);
  Options o;

  auto with_output = [&](CLI::App* sub) {
    sub->add_option("--json-out", o.json_out, "write JSON here instead of stdout");
    return sub;
  };
  auto with_svg = [&](CLI::App* sub) {
    sub->add_option("--emit-svg", o.emit_svg, "directory for SVG drawings");
    return sub;
  };

  auto* subdivide = with_svg(with_output(app.add_subcommand("subdivide", "regular subdivision of a weight")));
  subdivide->add_option("--polygon", o.polygon)->required();
  subdivide->add_option("--weights", o.weights)->required();

  auto* curve = with_svg(with_output(app.add_subcommand("curve", "tropical curve of a weight or polynomial")));
  curve->add_option("--polygon", o.polygon);
  auto* w_opt = curve->add_option("--weights", o.weights);
  auto* f_opt = curve->add_option("--polynomial", o.polynomial);
  w_opt->excludes(f_opt);

  auto* weight = with_output(app.add_subcommand("weight", "tropical weight of a point of a Severi variety"));
  weight->add_option("--polygon", o.polygon)->required();
  weight->add_option("--delta", o.delta)->required();
  weight->add_option("--weights", o.weights)->required();
  weight->add_flag("--assume-regular-point", o.assume_regular_point);

  auto* group = with_output(app.add_subcommand("group", "boundary binomial group presentation"));
  group->add_option("--polygon", o.polygon)->required();
  auto* s_opt = group->add_option("--subdivision", o.subdivision);
  auto* gw_opt = group->add_option("--weights", o.weights);
  s_opt->excludes(gw_opt);

  auto* intersect = with_output(app.add_subcommand("intersect", "stable intersection of two curves"));
  intersect->add_option("--curve", o.curves)->required()->expected(2);
  intersect->add_option("--seed", o.seed);

  auto* count = with_svg(with_output(app.add_subcommand("count", "Severi degree through generic points")));
  count->add_option("--polygon", o.polygon)->required();
  count->add_option("--delta", o.delta)->required();
  count->add_option("--seed", o.seed);
  count->add_option("--strategy", o.strategy)->check(CLI::IsMember({"subdivision", "path", "both"}));
  count->add_option("--workers", o.workers, "threads for the subdivision solve (0: all cores)");

  auto* check = with_output(app.add_subcommand("check", "invariant suites on seeded random instances"));
  check->add_option("--seed", o.seed);
  check->add_option("--instances", o.instances);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ErrorKind::Schema);
  }

  try {
    if (*subdivide) cmd_subdivide(o);
    else if (*curve) cmd_curve(o);
    else if (*weight) cmd_weight(o);
    else if (*group) cmd_group(o);
    else if (*intersect) cmd_intersect(o);
    else if (*count) cmd_count(o);
    else if (*check) cmd_check(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::Schema);
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::Schema);
  }
  return 0;
}
