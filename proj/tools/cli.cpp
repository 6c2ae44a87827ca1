#include "cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "hypcover/covering.hpp"
#include "hypcover/planar.hpp"
#include "hypcover/serialize.hpp"

namespace hypcover::cli {

namespace {

using nlohmann::json;

const std::map<std::string, std::array<TableRow, 10>>& tables() {
  static const std::map<std::string, std::array<TableRow, 10>> t{
      {"noncongruent-QA2",
       {{{3, 7, 3}, {3, 8, 3}, {4, 5, 4}, {4, 6, 4}, {5, 4, 5}, {5, 5, 4}, {6, 4, 5}, {6, 5, 4}, {7, 3, 7}, {7, 4, 5}}}},
      {"noncongruent-A1A2",
       {{{3, 7, 3}, {3, 8, 3}, {4, 5, 4}, {4, 5, 5}, {5, 4, 5}, {5, 4, 6}, {6, 4, 5}, {6, 4, 6}, {7, 3, 7}, {7, 3, 8}}}},
      {"congruent",
       {{{3, 7, 3}, {3, 8, 3}, {4, 5, 4}, {4, 6, 4}, {5, 4, 5}, {5, 4, 6}, {6, 4, 5}, {6, 4, 6}, {7, 3, 7}, {7, 3, 8}}}},
  };
  return t;
}

std::string num(double x) { return fmt::format("{:.6g}", x); }

// JSON numbers are rounded to the same 6 significant digits as CSV.
void round_numbers(json& j) {
  if (j.is_number_float()) {
    j = std::stod(num(j.get<double>()));
  } else if (j.is_structured()) {
    for (auto& child : j) round_numbers(child);
  }
}

std::string uncovered_edges(const CoveringConfig& c) {
  std::string s;
  for (const auto& r : c.per_edge) {
    if (r.covered) continue;
    if (!s.empty()) s += ';';
    s += to_string(r.edge);
  }
  return s;
}

std::string type_label(const SchlafliParams& p) { return fmt::format("F_{:g}^({:g},{:g})", p.u, p.v, p.w); }

const char* kDensityHeader = "u,v,w,contact_edge,t,h1,h2,density,vol_H1,vol_H2,vol_F,feasible,uncovered_edges";

std::string density_csv_row(const DensityResult& r) {
  const auto& c = r.config;
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}", num(c.params.u), num(c.params.v),
                     num(c.params.w), to_string(c.contact_edge), num(c.t), num(c.h1), num(c.h2),
                     num(r.density), num(r.vol_H1), num(r.vol_H2), num(r.vol_F), c.feasible ? "true" : "false",
                     uncovered_edges(c));
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::Inadmissible:
    case Errc::InvalidArgument:
    case Errc::NoIntersection:
    case Errc::NegativeHeight:
      return kInadmissible;
    case Errc::NoFeasiblePoint:
    case Errc::NoRoot:
    case Errc::NotACovering:
      return kInfeasible;
    default:
      return kNumericalFailure;
  }
}

struct Common {
  std::string format;  // empty: csv for table, family and planar-scan, json otherwise
  std::string out_path;
  double tol = 1e-12;
};

struct Params {
  double u = 0, v = 0, w = 0;
};

void add_params(CLI::App* sub, Params& p) {
  sub->add_option("--u", p.u, "Schlafli parameter u")->required();
  sub->add_option("--v", p.v, "Schlafli parameter v")->required();
  sub->add_option("--w", p.w, "Schlafli parameter w")->required();
}

SearchOptions search(const Common& c) {
  SearchOptions s;
  s.tolerance = c.tol;
  return s;
}

// Each command writes its document to `os` and returns an exit code.

int cmd_geometry(const Params& p, const Common& c, std::ostream& os) {
  const TruncatedOrthoscheme o = embed(p.u, p.v, p.w);
  json j = geometry_json(o);
  if (c.format == "json") {
    round_numbers(j);
    os << j.dump(2) << '\n';
    return kOk;
  }
  os << "quantity,value\n";
  os << "u," << num(p.u) << "\nv," << num(p.v) << "\nw," << num(p.w) << '\n';
  os << "series," << j["series"].get<std::string>() << '\n';
  os << "extendable," << (o.params().extendable ? "true" : "false") << '\n';
  for (const auto& key : {"F", "theta", "area_QEJ", "area_HLC"}) {
    os << "volume." << key << ',' << num(j["volume"][key].get<double>()) << '\n';
  }
  for (const auto& [key, value] : j["lengths"].items()) os << "length." << key << ',' << num(value.get<double>()) << '\n';
  for (const auto& [key, value] : j["placement"].items()) os << "placement." << key << ',' << num(value.get<double>()) << '\n';
  for (Vertex v : kAllVertices) {
    const auto& x = o.vertex(v);
    os << "vertex." << to_string(v) << ",\"(" << num(x[0]) << ' ' << num(x[1]) << ' ' << num(x[2]) << ' '
       << num(x[3]) << ")\"\n";
  }
  return kOk;
}

void emit_density(const DensityResult& r, const Common& c, std::ostream& os) {
  if (c.format == "json") {
    json j = r;
    round_numbers(j);
    os << j.dump(2) << '\n';
  } else {
    os << kDensityHeader << '\n' << density_csv_row(r) << '\n';
  }
}

int cmd_density(const Params& p, const std::string& edge, const double* t, const Common& c, std::ostream& os,
                std::ostream& err) {
  const TruncatedOrthoscheme o = embed(p.u, p.v, p.w);
  const EdgeId e = parse_edge(edge);
  DensityResult r = t ? density(o, make_config(o, e, *t)) : minimize_noncongruent(o, e, search(c));
  emit_density(r, c, os);
  if (!r.config.feasible) {
    err << "infeasible: hyperballs leave edges uncovered: " << uncovered_edges(r.config) << '\n';
    return kInfeasible;
  }
  return kOk;
}

int cmd_congruent(const Params& p, const std::string& edge, const Common& c, std::ostream& os) {
  const TruncatedOrthoscheme o = embed(p.u, p.v, p.w);
  const EdgeId e = parse_edge(edge);
  const DensityResult r = solve_congruent(o, e);
  const DensityResult best = minimize_noncongruent(o, e, search(c));
  const bool optimal = std::abs(r.density - best.density) <= 1e-6;
  if (c.format == "json") {
    json j = r;
    j["noncongruent_optimum_delta"] = best.density;
    j["noncongruent_optimum_t"] = best.config.t;
    j["congruent_is_optimal"] = optimal;
    round_numbers(j);
    os << j.dump(2) << '\n';
  } else {
    os << kDensityHeader << ",noncongruent_optimum_delta,congruent_is_optimal\n"
       << density_csv_row(r) << ',' << num(best.density) << ',' << (optimal ? "true" : "false") << '\n';
  }
  return r.config.feasible ? kOk : kInfeasible;
}

int cmd_table(const std::string& which, const Common& c, std::ostream& os) {
  const auto& rows = table_rows(which);
  const bool congruent = which == "congruent";
  const EdgeId edge = which == "noncongruent-QA2" ? EdgeId::QA2 : EdgeId::A1A2;
  std::vector<DensityResult> results;
  for (const auto& row : rows) {
    const TruncatedOrthoscheme o = embed(row.u, row.v, row.w);
    results.push_back(congruent ? solve_congruent(o, edge) : minimize_noncongruent(o, edge, search(c)));
  }
  if (c.format == "json") {
    json j = json::array();
    for (const auto& r : results) {
      json item = r;
      item["type"] = type_label(r.config.params);
      j.push_back(item);
    }
    round_numbers(j);
    os << j.dump(2) << '\n';
  } else {
    os << "type,u,v,w,contact_edge,t,delta_min,h1,h2,feasible\n";
    for (const auto& r : results) {
      const auto& cfg = r.config;
      // The label carries a comma, so it is quoted.
      os << fmt::format("\"{}\",{},{},{},{},{},{},{},{},{}\n", type_label(cfg.params), num(cfg.params.u),
                        num(cfg.params.v), num(cfg.params.w), to_string(cfg.contact_edge), num(cfg.t),
                        num(r.density), num(cfg.h1), num(cfg.h2), cfg.feasible ? "true" : "false");
    }
  }
  return kOk;
}

int cmd_family(double u_lo, double u_hi, int samples, const Common& c, std::ostream& os) {
  if (samples < 2) throw Error(Errc::InvalidArgument, "--samples must be at least 2");
  const FamilyResult f = optimize_family_u37(u_lo, u_hi, search(c));
  std::vector<DensityResult> curve;
  for (int i = 0; i < samples; ++i) {
    const double u = u_lo + (u_hi - u_lo) * i / (samples - 1);
    curve.push_back(minimize_noncongruent(embed(u, 3, 7), EdgeId::A1A2, search(c)));
  }
  const DensityResult boundary = minimize_noncongruent(embed(7, 3, 7), EdgeId::A1A2, search(c));
  const auto& b = f.best.config;

  if (c.format == "json") {
    json j;
    j["curve"] = json::array();
    for (const auto& r : curve) {
      j["curve"].push_back({{"u", r.config.params.u},
                            {"t", r.config.t},
                            {"h1", r.config.h1},
                            {"h2", r.config.h2},
                            {"delta", r.density},
                            {"feasible", r.config.feasible}});
    }
    j["summary"] = {{"u_star", f.u_star},     {"t", b.t},
                    {"h1", b.h1},             {"h2", b.h2},
                    {"delta_star", f.best.density},
                    {"tiling", f.extendable ? "extendable" : "non-extendable"},
                    {"boundary_u7_delta", boundary.density}};
    round_numbers(j);
    os << j.dump(2) << '\n';
  } else {
    os << "u,t,h1,h2,delta,feasible\n";
    for (const auto& r : curve) {
      os << fmt::format("{},{},{},{},{},{}\n", num(r.config.params.u), num(r.config.t), num(r.config.h1),
                        num(r.config.h2), num(r.density), r.config.feasible ? "true" : "false");
    }
    os << fmt::format("# u_star={} t={} h1={} h2={} delta_star={} tiling={}\n", num(f.u_star), num(b.t),
                      num(b.h1), num(b.h2), num(f.best.density),
                      f.extendable ? "extendable" : "non-extendable");
    os << fmt::format("# boundary u=7: delta={}\n", num(boundary.density));
  }
  return kOk;
}

int cmd_planar_scan(const std::vector<std::pair<double, double>>& path, const Common& c, std::ostream& os) {
  const planar::ScanReport s = planar::limit_scan(path);
  if (c.format == "json") {
    json j = s;
    round_numbers(j);
    // a - 1 is tiny along the path; keep a at full precision.
    for (std::size_t i = 0; i < s.rows.size(); ++i) j["rows"][i]["a"] = s.rows[i].a;
    os << j.dump(2) << '\n';
  } else {
    os << "a,b,h1,h2,pentagon_area,delta,gap_to_limit\n";
    for (const auto& r : s.rows) {
      os << fmt::format("{:.15g},{},{},{},{},{},{}\n", r.a, num(r.b), num(r.h1), num(r.h2), num(r.pentagon_area),
                        num(r.delta), num(r.gap_to_limit));
    }
    os << fmt::format("# limit={} strictly_decreasing={} all_above_limit={} terminal_gap={}\n",
                      num(planar::kLimitDensity), s.strictly_decreasing, s.all_above_limit, num(s.terminal_gap));
  }
  return kOk;
}

}  // namespace

const std::array<TableRow, 10>& table_rows(const std::string& which) {
  const auto it = tables().find(which);
  if (it == tables().end()) throw Error(Errc::InvalidArgument, "unknown table '" + which + "'");
  return it->second;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-hyperball coverings of doubly truncated Coxeter orthoschemes", "hypcover"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--format", common.format, "Output format (default: csv for table, family, planar-scan; json otherwise)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", common.out_path, "Write output to this file instead of stdout");
  app.add_option("--tol", common.tol, "Optimizer tolerance on the contact parameter")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  Params params;
  std::string edge = "A1A2";
  double t = 0.0;

  auto* geometry = app.add_subcommand("geometry", "Vertex coordinates, Gram matrices, volume, edge lengths");
  add_params(geometry, params);

  auto* dens = app.add_subcommand("density", "Covering density (minimized over t unless --t is given)");
  add_params(dens, params);
  dens->add_option("--edge", edge, "Contact edge")->capture_default_str();
  auto* t_opt = dens->add_option("--t", t, "Contact parameter in [0,1]");

  auto* cong = app.add_subcommand("congruent", "Equal-height covering on the contact edge");
  add_params(cong, params);
  cong->add_option("--edge", edge, "Contact edge")->capture_default_str();

  std::string which;
  auto* table = app.add_subcommand("table", "Reference density tables");
  table->add_option("which", which, "Table name")
      ->required()
      ->check(CLI::IsMember({"noncongruent-QA2", "noncongruent-A1A2", "congruent"}));

  double u_lo = 6.05, u_hi = 6.95;
  int samples = 19;
  auto* family = app.add_subcommand("family", "Minimum density over the {u,3,7} family, 6 < u < 7");
  family->add_option("--u-lo", u_lo, "Lower end of the u range")->capture_default_str();
  family->add_option("--u-hi", u_hi, "Upper end of the u range")->capture_default_str();
  family->add_option("--samples", samples, "Points on the density curve")->capture_default_str();

  std::string path_name = "admissible";
  int k_max = 4;
  double a = 0.0, b = 0.0;
  auto* scan = app.add_subcommand("planar-scan", "Planar hypercycle covering densities toward (a,b) -> (1,inf)");
  scan->add_option("--path", path_name, "admissible: a=1+10^-3k, b=10^k; diagonal: a=1+10^-k, b=10^k")
      ->check(CLI::IsMember({"admissible", "diagonal"}))
      ->capture_default_str();
  scan->add_option("--k-max", k_max, "Number of path points")->check(CLI::Range(1, 5))->capture_default_str();
  auto* a_opt = scan->add_option("--a", a, "Single configuration: a");
  auto* b_opt = scan->add_option("--b", b, "Single configuration: b");
  a_opt->needs(b_opt);
  b_opt->needs(a_opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kOk : kInadmissible;
  }

  if (common.format.empty()) common.format = (*table || *family || *scan) ? "csv" : "json";

  std::ostringstream doc;
  int code = kOk;
  try {
    if (*geometry) {
      code = cmd_geometry(params, common, doc);
    } else if (*dens) {
      code = cmd_density(params, edge, t_opt->count() ? &t : nullptr, common, doc, err);
    } else if (*cong) {
      code = cmd_congruent(params, edge, common, doc);
    } else if (*table) {
      code = cmd_table(which, common, doc);
    } else if (*family) {
      code = cmd_family(u_lo, u_hi, samples, common, doc);
    } else if (*scan) {
      std::vector<std::pair<double, double>> path;
      if (a_opt->count()) {
        path.emplace_back(a, b);
      } else {
        path = path_name == "admissible" ? planar::admissible_path(k_max) : planar::diagonal_path(k_max);
      }
      code = cmd_planar_scan(path, common, doc);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  }

  if (common.out_path.empty()) {
    out << doc.str();
  } else {
    std::ofstream f(common.out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << common.out_path << '\n';
      return kNumericalFailure;
    }
    f << doc.str();
  }
  return code;
}

}  // namespace hypcover::cli
