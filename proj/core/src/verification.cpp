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

#include "equisplit/verification.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "equisplit/closed_form.hpp"
#include "equisplit/constructions.hpp"
#include "equisplit/extremum.hpp"
#include "equisplit/geometry.hpp"
#include "equisplit/hexpack.hpp"
#include "equisplit/optimizer.hpp"
#include "equisplit/parallel.hpp"

namespace equisplit {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

class Check {
 public:
  Check(int id, std::string name) : start_(std::chrono::steady_clock::now()) {
    result_.id = id;
    result_.name = std::move(name);
    result_.passed = true;
  }

  void require(bool ok, const std::string& what) {
    if (!result_.detail.empty()) result_.detail += "; ";
    result_.detail += (ok ? "" : "FAILED ") + what;
    result_.passed = result_.passed && ok;
  }

  CriterionResult finish(double time_limit = 0.0) {
    result_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (time_limit > 0.0) {
      require(result_.seconds <= time_limit, fmt("runtime %.1f s <= %.0f s", result_.seconds, time_limit));
    }
    return result_;
  }

 private:
  std::chrono::steady_clock::time_point start_;
  CriterionResult result_;
};

std::vector<OptimizedPartition> run_catalog(Catalog which, const OptimizerConfig& cfg, int threads) {
  const auto cases = case_catalog(which);
  return parallel_map(cases, [&](const CatalogCase& c) { return optimize(c.topology, cfg); }, threads);
}

std::size_t index_of(const std::vector<CatalogCase>& cases, const std::string& id) {
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (cases[i].id == id) return i;
  }
  return cases.size();
}

// Uniform point in the simplex spanned by `verts` via normalised exponentials.
template <std::size_t N, class P>
P random_in_simplex(const std::array<P, N>& verts, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::array<double, N> w{};
  double sum = 0.0;
  for (auto& x : w) sum += (x = expo(rng));
  P p{};
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t k = 0; k < p.size(); ++k) p[k] += w[i] / sum * verts[i][k];
  }
  return p;
}

using P3 = std::array<double, 3>;

P3 sub(const P3& a, const P3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
P3 cross3(const P3& a, const P3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot3(const P3& a, const P3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Distance from p to the plane through a, b, c.
double plane_distance(const P3& p, const P3& a, const P3& b, const P3& c) {
  const P3 nrm = cross3(sub(b, a), sub(c, a));
  return std::abs(dot3(nrm, sub(p, a))) / std::sqrt(dot3(nrm, nrm));
}

}  // namespace

CriterionResult check_closed_form() {
  Check check(1, "closed-form fidelity");
  const double e2 = exact_infimum(2, 3).value_or(NAN);
  const double e3 = exact_infimum(3, 3).value_or(NAN);
  const double lb = lower_bound(2, 3);
  const double up = asymptotic_bracket(6).upper_const;
  check.require(std::abs(e2 - 0.6733868435) <= 1e-9, fmt("exact(2,3) = %.10f", e2));
  check.require(std::abs(e3 - 0.8660254038) <= 1e-9, fmt("exact(3,3) = %.10f", e3));
  check.require(std::abs(lb - 0.1494539) <= 1e-6, fmt("lower(2,3) = %.7f", lb));
  check.require(std::abs(up - 3.0) <= 1e-12, fmt("upper_const(6) = %.15f", up));
  return check.finish();
}

CriterionResult check_two_part_catalog(const VerifyOptions& options) {
  Check check(2, "two-part catalog recovers the proven infimum");
  const auto cases = case_catalog(Catalog::kHalves);
  const auto results = run_catalog(Catalog::kHalves, {}, options.threads);
  const double target = std::sqrt(kSqrt3 * kPi / 12.0);
  const auto& c3 = results[index_of(cases, "iii")];
  const auto& c1 = results[index_of(cases, "i")];
  const auto& c2 = results[index_of(cases, "ii")];
  check.require(c3.converged, "case iii converged");
  check.require(std::abs(c3.total_length - target) <= 0.005 * target,
                fmt("case iii length %.7f vs %.7f (0.5%%)", c3.total_length, target));
  const double bound1 = std::sqrt(kSqrt3 * kPi / 2.0) * 0.99;
  const double bound2 = std::sqrt(kSqrt3 * kPi / 4.0) * 0.99;
  check.require(c1.total_length >= bound1, fmt("case i length %.7f >= %.7f", c1.total_length, bound1));
  check.require(c2.total_length >= bound2, fmt("case ii length %.7f >= %.7f", c2.total_length, bound2));
  return check.finish(60.0);
}

CriterionResult check_three_part_catalog(const VerifyOptions& options) {
  Check check(3, "three-part catalog recovers the proven infimum");
  const auto cases = case_catalog(Catalog::kThirds);
  const auto results = run_catalog(Catalog::kThirds, {}, options.threads);
  const std::size_t v = index_of(cases, "v");
  const auto& best = results[v];
  const double target = kSqrt3 / 2.0;
  check.require(best.converged, "case v converged");
  check.require(std::abs(best.total_length - target) <= 0.005 * target,
                fmt("case v length %.7f vs %.7f (0.5%%)", best.total_length, target));

  const auto& spec = cases[v].topology;
  double junction_err = 0.0;
  double anchor_err = 0.0;
  for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
    const Point2 p = best.node_positions[i];
    if (const auto* a = std::get_if<BoundaryAnchor>(&spec.nodes[i].kind)) {
      anchor_err = std::max(anchor_err, distance(p, spec.polygon.side_midpoint(a->side)));
    } else {
      junction_err = std::max(junction_err, norm(p));
    }
  }
  check.require(junction_err <= 1e-3, fmt("junction offset %.2e <= 1e-3", junction_err));
  check.require(anchor_err <= 1e-3, fmt("anchor offset %.2e <= 1e-3", anchor_err));
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (i == v) continue;
    check.require(results[i].total_length > best.total_length,
                  "case " + cases[i].id + fmt(" length %.7f > %.7f", results[i].total_length, best.total_length));
  }
  return check.finish(120.0);
}

CriterionResult check_arc_emergence() {
  Check check(4, "arc emergence in the corner cut");
  const auto cases = case_catalog(Catalog::kHalves);
  const auto& spec = cases[index_of(cases, "iii")].topology;
  OptimizerConfig cfg;
  cfg.points_per_edge = 64;
  const auto coarse = arc_property_check(optimize(spec, cfg), 1e-3);
  cfg.points_per_edge = 128;
  const auto fine = arc_property_check(optimize(spec, cfg), 1e-3);
  const auto& e64 = coarse.edges.front();
  const auto& e128 = fine.edges.front();
  const double rel64 = e64.circle.residual / e64.edge_length;
  const double rel128 = e128.circle.residual / e128.edge_length;
  check.require(e64.checked && rel64 < 1e-3, fmt("64 points: residual/length %.3e < 1e-3", rel64));
  check.require(rel128 < rel64, fmt("128 points: %.3e < %.3e", rel128, rel64));
  return check.finish();
}

CriterionResult check_extremum_systems() {
  Check check(5, "extremum systems");
  const std::array<double, 4> areas{kSqrt3 / 8.0, kSqrt3 / 12.0, kPi / 6.0, 1.0};
  double sector_err = 0.0;
  double segment_err = 0.0;
  for (double a : areas) {
    const double rs = std::sqrt(6.0 * a / kPi);
    const auto s = sector_extremum_solve(a);
    sector_err = std::max({sector_err, std::abs(s.a - rs), std::abs(s.b - rs), std::abs(s.r - rs)});
    const double rg = std::sqrt(2.0 * a / kPi);
    const auto g = segment_extremum_solve(a);
    segment_err = std::max({segment_err, std::abs(g.r - rg), std::abs(g.d - rg)});
  }
  check.require(sector_err <= 1e-10, fmt("sector max error %.2e <= 1e-10", sector_err));
  check.require(segment_err <= 1e-10, fmt("segment max error %.2e <= 1e-10", segment_err));
  return check.finish();
}

CriterionResult check_simplex_identity() {
  Check check(6, "simplex distance-sum identity");
  std::mt19937_64 rng(2024);
  const RegularPolygon tri(3);
  using P2 = std::array<double, 2>;
  const std::array<P2, 3> tv{P2{tri.vertex(0).x, tri.vertex(0).y}, P2{tri.vertex(1).x, tri.vertex(1).y},
                             P2{tri.vertex(2).x, tri.vertex(2).y}};
  const double expect2 = simplex_distance_sum({2, 1.0});
  double err2 = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const P2 q = random_in_simplex(tv, rng);
    double sum = 0.0;
    for (int k = 0; k < 3; ++k) sum += tri.inner_distance({q[0], q[1]}, k);
    err2 = std::max(err2, std::abs(sum - expect2));
  }
  check.require(std::abs(expect2 - kSqrt3 / 2.0) <= 1e-15, fmt("formula(2) = %.15f", expect2));
  check.require(err2 <= 1e-12, fmt("triangle max error %.2e <= 1e-12", err2));

  const std::array<P3, 4> v{P3{0.0, 0.0, 0.0}, P3{1.0, 0.0, 0.0}, P3{0.5, kSqrt3 / 2.0, 0.0},
                            P3{0.5, kSqrt3 / 6.0, std::sqrt(2.0 / 3.0)}};
  const double expect3 = simplex_distance_sum({3, 1.0});
  double err3 = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const P3 q = random_in_simplex(v, rng);
    const double sum = plane_distance(q, v[1], v[2], v[3]) + plane_distance(q, v[0], v[2], v[3]) +
                       plane_distance(q, v[0], v[1], v[3]) + plane_distance(q, v[0], v[1], v[2]);
    err3 = std::max(err3, std::abs(sum - expect3));
  }
  check.require(err3 <= 1e-10, fmt("tetrahedron max error %.2e <= 1e-10", err3));
  return check.finish();
}

CriterionResult check_constructions() {
  Check check(7, "construction validity");
  for (const auto& s : shipped_constructions()) {
    const auto report = validate_split(s, 1e-9);
    check.require(report.passed, s.label + " validates");
    const double lb = lower_bound(s.m, s.polygon.n());
    check.require(s.total_length >= lb, s.label + fmt(" length %.7f >= %.7f", s.total_length, lb));
  }
  const double corner = corner_arc_split().total_length;
  const double y = y_split().total_length;
  const double e2 = *exact_infimum(2, 3);
  const double e3 = *exact_infimum(3, 3);
  check.require(std::abs(corner - e2) <= 1e-12, fmt("corner-arc - exact = %.2e", corner - e2));
  check.require(std::abs(y - e3) <= 1e-12, fmt("y-split - exact = %.2e", y - e3));
  return check.finish();
}

CriterionResult check_hexpack_asymptotics(const VerifyOptions& options) {
  Check check(8, "hexagon packing asymptotics");
  const auto series = ratio_series(4, {100, 1000, 10000, 100000}, {}, options.threads);
  const double upper = 1.8612097;
  const double lower = 1.7724539 * (1.0 - 0.05);
  const auto& last = series.back();
  check.require(std::abs(last.ratio - upper) <= 0.15 * upper,
                fmt("ratio(1e5) %.7f within 15%% of %.7f", last.ratio, upper));
  check.require(last.ratio >= lower, fmt("ratio(1e5) %.7f >= %.7f", last.ratio, lower));
  const double lt_last = last.l_t / static_cast<double>(last.m);
  check.require(lt_last < 0.01, fmt("l_t/m at 1e5 = %.3e < 0.01", lt_last));
  bool decreasing = true;
  for (std::size_t i = 1; i < series.size(); ++i) {
    decreasing = decreasing && series[i].l_t / static_cast<double>(series[i].m) <
                                   series[i - 1].l_t / static_cast<double>(series[i - 1].m);
  }
  check.require(decreasing, "l_t/m strictly decreasing");
  return check.finish(120.0);
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options) {
  return {check_closed_form(),       check_two_part_catalog(options),
          check_three_part_catalog(options), check_arc_emergence(),
          check_extremum_systems(),  check_simplex_identity(),
          check_constructions(),     check_hexpack_asymptotics(options)};
}

std::string format_result(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "%s [%d] ", r.passed ? "PASS" : "FAIL", r.id);
  return head + r.name + fmt(" (%.2f s): ", r.seconds) + r.detail;
}

}  // namespace equisplit
