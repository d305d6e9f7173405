/*
 * Copyright 2026 The equisplit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "equisplit/closed_form.hpp"
#include "equisplit/constructions.hpp"
#include "equisplit/errors.hpp"
#include "equisplit/hexpack.hpp"
#include "equisplit/optimizer.hpp"
#include "equisplit/parallel.hpp"
#include "equisplit/report.hpp"
#include "equisplit/svg.hpp"
#include "equisplit/topology_io.hpp"
#include "equisplit/verification.hpp"

namespace {

using namespace equisplit;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;

constexpr double kArcTol = 1e-3;

/// Raised by a command to end with a given status after printing `what`.
struct Failure {
  int code;
  std::string what;
};

// --parallel alone means one worker per hardware thread.
int threads_from(int parallel) { return parallel < 0 ? 1 : parallel; }

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  std::vector<int> m;
  std::vector<int> n;
  std::string format = "text";
  std::string out;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

int cmd_bounds(const BoundsArgs& args) {
  std::vector<ReportRow> rows;
  for (int n : args.n) {
    for (int m : args.m) rows.push_back(make_report_row(m, n));
  }
  emit(args.format == "csv" ? rows_to_csv(rows) : rows_to_text(rows), args.out);
  return kExitOk;
}

// ------------------------------------------------------------- construct

struct ConstructArgs {
  std::string id;
  std::string svg;
};

int cmd_construct(const ConstructArgs& args) {
  const SplitSystem split = construction_by_id(args.id);
  const ValidationReport report = validate_split(split, 1e-9);
  if (!args.svg.empty()) write_text_file(args.svg, render_svg(split));

  std::cout << "construction " << args.id << "  polygon n=" << split.polygon.n()
            << "  parts m=" << split.m << "\n";
  std::cout << "length " << format_number(report.total_length) << "  lower bound "
            << format_number(report.lower_bound) << "\n";
  std::cout << "target area " << format_number(report.target_area) << "  max deviation "
            << format_number(report.max_area_deviation) << "\n";
  for (std::size_t i = 0; i < report.region_areas.size(); ++i) {
    std::cout << "  region " << i << " area " << format_number(report.region_areas[i]) << "\n";
  }
  for (const auto& f : report.failures) std::cout << "failure: " << f << "\n";
  std::cout << (report.passed ? "valid" : "INVALID") << "\n";
  return report.passed ? kExitOk : kExitUsage;
}

// -------------------------------------------------------------- optimize

struct OptimizeArgs {
  std::string topology;
  std::string catalog;
  int points = 64;
  std::uint64_t seed = 1;
  int parallel = -1;
  std::string out;
  std::string svg;
};

std::string arc_summary(const ArcCheckReport& arc) {
  int checked = 0;
  int straight = 0;
  double worst = 0.0;
  for (const auto& e : arc.edges) {
    if (!e.checked) continue;
    ++checked;
    if (e.straight) {
      ++straight;
    } else if (e.edge_length > 0.0) {
      worst = std::max(worst, e.circle.residual / e.edge_length);
    }
  }
  std::ostringstream s;
  s << "arcs " << (arc.passed ? "ok" : "FAIL") << " (" << checked << " fitted, " << straight
    << " straight, worst residual/length " << format_number(worst) << ")";
  return s.str();
}

void print_result(const std::string& name, const OptimizedPartition& r, bool detail) {
  std::cout << name << "  length " << format_number(r.total_length) << "  "
            << (r.converged ? "converged" : "NOT CONVERGED") << "  max residual "
            << format_number(r.max_abs_residual()) << "  iterations " << r.outer_iterations
            << "/" << r.inner_iterations << "  " << arc_summary(arc_property_check(r, kArcTol))
            << "\n";
  if (!detail) return;
  for (std::size_t i = 0; i < r.region_areas.size(); ++i) {
    std::cout << "  region " << r.topology.regions[i].name << " area "
              << format_number(r.region_areas[i]) << " residual "
              << format_number(r.constraint_residuals[i]) << " multiplier "
              << format_number(r.multiplier_estimates[i]) << "\n";
  }
  for (std::size_t i = 0; i < r.node_positions.size(); ++i) {
    std::cout << "  node " << r.topology.nodes[i].name << " (" << format_number(r.node_positions[i].x)
              << ", " << format_number(r.node_positions[i].y) << ")\n";
  }
}

int optimize_topology(const OptimizeArgs& args, const OptimizerConfig& cfg) {
  const TopologySpec spec = read_topology_file(args.topology);
  const OptimizedPartition result = optimize(spec, cfg);
  print_result(spec.label.empty() ? std::string("topology") : spec.label, result, true);
  if (!args.out.empty()) {
    std::ostringstream text;
    write_optimized(text, result);
    write_text_file(args.out, text.str());
  }
  if (!args.svg.empty()) write_text_file(args.svg, render_svg(result));
  if (!result.converged) throw Failure{kExitUsage, "optimizer did not converge"};
  return kExitOk;
}

int optimize_catalog(const OptimizeArgs& args, const OptimizerConfig& cfg) {
  Catalog which;
  if (args.catalog == "3.1" || args.catalog == "halves") {
    which = Catalog::kHalves;
  } else if (args.catalog == "3.2" || args.catalog == "thirds") {
    which = Catalog::kThirds;
  } else {
    throw Failure{kExitUsage, "--catalog must be 3.1, 3.2, halves or thirds"};
  }
  const auto cases = case_catalog(which);
  const auto results = parallel_map(
      cases, [&](const CatalogCase& c) { return optimize(c.topology, cfg); },
      threads_from(args.parallel));

  if (!args.svg.empty()) std::filesystem::create_directories(args.svg);
  int best = -1;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    print_result("case (" + cases[i].id + ") " + cases[i].description, results[i], false);
    if (!args.svg.empty()) {
      write_text_file((std::filesystem::path(args.svg) / ("case_" + cases[i].id + ".svg")).string(),
                      render_svg(results[i]));
    }
    if (results[i].converged &&
        (best < 0 || results[i].total_length < results[static_cast<std::size_t>(best)].total_length)) {
      best = static_cast<int>(i);
    }
  }
  if (best < 0) throw Failure{kExitUsage, "no catalog case converged"};
  const auto& winner = results[static_cast<std::size_t>(best)];
  std::cout << "winner case (" << cases[static_cast<std::size_t>(best)].id << ") length "
            << format_number(winner.total_length) << "\n";
  return kExitOk;
}

int cmd_optimize(const OptimizeArgs& args) {
  OptimizerConfig cfg;
  cfg.points_per_edge = args.points;
  cfg.seed = args.seed;
  return args.catalog.empty() ? optimize_topology(args, cfg) : optimize_catalog(args, cfg);
}

// --------------------------------------------------------------- hexpack

struct HexpackArgs {
  int n = 4;
  std::vector<std::int64_t> series;
  std::string csv;
  bool offset_scan = false;
  int parallel = -1;
};

int cmd_hexpack(const HexpackArgs& args) {
  HexPackOptions options;
  options.offset_scan = args.offset_scan;
  const auto results = ratio_series(args.n, args.series, options, threads_from(args.parallel));
  const std::string csv = hexpack_csv(results);
  // The summary goes to stderr when stdout carries the CSV.
  std::ostream& summary = args.csv.empty() ? std::cerr : std::cout;
  if (args.csv.empty()) {
    std::cout << csv;
  } else {
    write_text_file(args.csv, csv);
  }
  const auto bracket = asymptotic_bracket(args.n);
  const auto& last = results.back();
  summary << "n=" << args.n << " m=" << last.m << " ratio " << format_number(last.ratio)
          << " vs bracket [" << format_number(bracket.lower_const) << ", "
          << format_number(bracket.upper_const) << "]: "
          << (last.ratio < bracket.lower_const
                  ? "below lower constant"
                  : (last.ratio <= bracket.upper_const ? "inside bracket"
                                                       : "above upper constant by " +
                                                             format_number(100.0 * (last.ratio / bracket.upper_const - 1.0)) +
                                                             "%"))
          << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::vector<int> only;
  int parallel = -1;
};

int cmd_verify(const VerifyArgs& args) {
  VerifyOptions options;
  options.threads = threads_from(args.parallel);
  std::vector<CriterionResult> results;
  if (args.only.empty()) {
    results = run_acceptance(options);
  } else {
    for (int id : args.only) {
      switch (id) {
        case 1: results.push_back(check_closed_form()); break;
        case 2: results.push_back(check_two_part_catalog(options)); break;
        case 3: results.push_back(check_three_part_catalog(options)); break;
        case 4: results.push_back(check_arc_emergence()); break;
        case 5: results.push_back(check_extremum_systems()); break;
        case 6: results.push_back(check_simplex_identity()); break;
        case 7: results.push_back(check_constructions()); break;
        case 8: results.push_back(check_hexpack_asymptotics(options)); break;
        default: throw Failure{kExitUsage, "no criterion " + std::to_string(id)};
      }
    }
  }
  int failed = 0;
  for (const auto& r : results) {
    std::cout << format_result(r) << "\n";
    if (!r.passed) ++failed;
  }
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size()
            << " criteria passed\n";
  return failed == 0 ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-length equal-area splits of regular polygons"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "equisplit 0.1.0");

  BoundsArgs bounds;
  auto* b = app.add_subcommand("bounds", "Closed-form bounds and best constructions for an (m, n) grid");
  b->add_option("--m", bounds.m, "Part counts, comma separated")->required()->delimiter(',')
      ->check(CLI::PositiveNumber);
  b->add_option("--n", bounds.n, "Polygon side counts, comma separated")->required()->delimiter(',')
      ->check(CLI::Range(3, 1000000));
  b->add_option("--format", bounds.format, "Table format")->check(CLI::IsMember({"text", "csv"}));
  b->add_flag("--csv", [&](std::int64_t) { bounds.format = "csv"; }, "Same as --format csv");
  b->add_option("--out", bounds.out, "Write the table to a file instead of stdout");

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build, validate and render a shipped construction");
  c->add_option("--case", construct.id, "corner-arc, y-split, three-arcs, median-arc, t-split, cross, annulus:<n>")
      ->required();
  c->add_option("--svg", construct.svg, "SVG output path");

  OptimizeArgs opt;
  auto* o = app.add_subcommand("optimize", "Minimise cut length for a topology or a case catalog");
  auto* topo = o->add_option("--topology", opt.topology, "Topology file");
  auto* cat = o->add_option("--catalog", opt.catalog, "Case catalog: 3.1 or halves (two parts), 3.2 or thirds (three parts)");
  topo->excludes(cat);
  o->add_option("--points", opt.points, "Interior points per edge")->check(CLI::Range(0, 100000));
  o->add_option("--seed", opt.seed, "Jitter seed");
  o->add_flag("--parallel{0}", opt.parallel, "Worker threads for catalog runs (bare flag: all cores)");
  o->add_option("--out", opt.out, "Write the optimized topology (single topology only)")->needs(topo);
  o->add_option("--svg", opt.svg, "SVG path, or a directory for --catalog");

  HexpackArgs hex;
  auto* h = app.add_subcommand("hexpack", "Hexagon-packing upper-bound series");
  h->add_option("--n", hex.n, "Polygon side count")->required();
  h->add_option("--series", hex.series, "Ascending part counts, comma separated")->required()
      ->delimiter(',');
  h->add_option("--csv", hex.csv, "CSV output path (default stdout)");
  h->add_flag("--offset-scan", hex.offset_scan, "Try 25 lattice shifts and keep the best");
  h->add_flag("--parallel{0}", hex.parallel, "Worker threads for the series (bare flag: all cores)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run the acceptance checks");
  v->add_option("--only", verify.only, "Criterion numbers, comma separated")->delimiter(',');
  v->add_flag("--parallel{0}", verify.parallel, "Worker threads (bare flag: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (o->parsed() && opt.topology.empty() && opt.catalog.empty()) {
    std::cerr << "optimize: one of --topology or --catalog is required\n";
    return kExitUsage;
  }

  try {
    if (b->parsed()) return cmd_bounds(bounds);
    if (c->parsed()) return cmd_construct(construct);
    if (o->parsed()) return cmd_optimize(opt);
    if (h->parsed()) return cmd_hexpack(hex);
    if (v->parsed()) return cmd_verify(verify);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.what << "\n";
    return f.code;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const SchemaError& e) {
    std::cerr << "topology error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << " (limit " << e.limit() << ")\n";
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& line : e.trace()) std::cerr << "  " << line << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
