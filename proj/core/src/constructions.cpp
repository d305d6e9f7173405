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

#include "equisplit/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "equisplit/errors.hpp"

namespace equisplit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Direction angle of side k of the canonical n-gon.
double side_angle(int n, int k) { return 2.0 * kPi * k / n; }

// Arc centred at vertex k of the triangle spanning its pi/3 interior angle,
// running from side k (outgoing) to side k-1 (incoming).
ArcSpec triangle_corner_arc(const RegularPolygon& tri, int k, double radius) {
  const double start = side_angle(3, k);
  return make_arc(tri.vertex(k), radius, start, start + kPi / 3.0);
}

PolygonWalk walk(const RegularPolygon& poly, double from, double to) {
  return PolygonWalk{poly, from, to};
}

SplitSystem finish(SplitSystem s) {
  s.total_length = summed_cut_length(s);
  return s;
}

}  // namespace

double cut_length(const Cut& cut) {
  return std::visit([](const auto& c) { return c.length(); }, cut);
}

double summed_cut_length(const SplitSystem& split) {
  double total = 0.0;
  for (const auto& cut : split.cuts) total += cut_length(cut);
  return total;
}

SplitSystem corner_arc_split() {
  SplitSystem s;
  s.polygon = RegularPolygon(3);
  s.m = 2;
  s.label = "corner-arc";
  const double r = sector_minimum(s.polygon.area() / 2.0).radius;
  const ArcSpec arc = triangle_corner_arc(s.polygon, 0, r);
  s.cuts.push_back(arc);
  const Point2 v0 = s.polygon.vertex(0);
  s.regions.push_back({{Segment{v0, arc.start_point()}, ArcPiece{arc, false},
                        Segment{arc.end_point(), v0}}});
  s.regions.push_back({{walk(s.polygon, r, 3.0 - r), ArcPiece{arc, true}}});
  return finish(std::move(s));
}

SplitSystem y_split() {
  SplitSystem s;
  s.polygon = RegularPolygon(3);
  s.m = 3;
  s.label = "y-split";
  const Point2 centre{0.0, 0.0};
  for (int k = 0; k < 3; ++k) s.cuts.push_back(Segment{centre, s.polygon.side_midpoint(k)});
  for (int k = 0; k < 3; ++k) {
    s.regions.push_back({{walk(s.polygon, k + 0.5, k + 1.5),
                          Segment{s.polygon.side_midpoint(k + 1), centre},
                          Segment{centre, s.polygon.side_midpoint(k)}}});
  }
  return finish(std::move(s));
}

SplitSystem three_corner_arcs() {
  SplitSystem s;
  s.polygon = RegularPolygon(3);
  s.m = 4;
  s.label = "three-arcs";
  const double r = sector_minimum(s.polygon.area() / 4.0).radius;
  std::vector<ArcSpec> arcs;
  for (int k = 0; k < 3; ++k) arcs.push_back(triangle_corner_arc(s.polygon, k, r));
  for (int k = 0; k < 3; ++k) {
    s.cuts.push_back(arcs[k]);
    const Point2 v = s.polygon.vertex(k);
    s.regions.push_back({{Segment{v, arcs[k].start_point()}, ArcPiece{arcs[k], false},
                          Segment{arcs[k].end_point(), v}}});
  }
  BoundaryLoop centre;
  for (int k = 0; k < 3; ++k) {
    centre.pieces.push_back(walk(s.polygon, k + r, k + 1.0 - r));
    centre.pieces.push_back(ArcPiece{arcs[(k + 1) % 3], true});
  }
  s.regions.push_back(std::move(centre));
  return finish(std::move(s));
}

SplitSystem median_arc_split() {
  SplitSystem s;
  s.polygon = RegularPolygon(3);
  s.m = 6;
  s.label = "median-arc";
  const double r = sector_minimum(s.polygon.area() / 6.0).radius;
  const Point2 centre{0.0, 0.0};
  std::vector<ArcSpec> arcs;
  for (int k = 0; k < 3; ++k) arcs.push_back(triangle_corner_arc(s.polygon, k, r));
  auto mid_angle = [&](int k) { return arcs[k].start_angle + kPi / 6.0; };
  auto lower_half = [&](int k) {
    return make_arc(arcs[k].center, r, arcs[k].start_angle, mid_angle(k));
  };
  auto upper_half = [&](int k) {
    return make_arc(arcs[k].center, r, mid_angle(k), arcs[k].end_angle);
  };

  for (int k = 0; k < 3; ++k) s.cuts.push_back(arcs[k]);
  for (int k = 0; k < 3; ++k) s.cuts.push_back(Segment{arcs[k].point_at(mid_angle(k)), centre});

  for (int k = 0; k < 3; ++k) {
    const Point2 v = s.polygon.vertex(k);
    s.regions.push_back({{Segment{v, arcs[k].start_point()}, ArcPiece{arcs[k], false},
                          Segment{arcs[k].end_point(), v}}});
  }
  for (int k = 0; k < 3; ++k) {
    const int next = (k + 1) % 3;
    s.regions.push_back({{Segment{centre, arcs[k].point_at(mid_angle(k))},
                          ArcPiece{lower_half(k), true},
                          walk(s.polygon, k + r, k + 1.0 - r),
                          ArcPiece{upper_half(next), true},
                          Segment{arcs[next].point_at(mid_angle(next)), centre}}});
  }
  return finish(std::move(s));
}

SplitSystem square_cross_split() {
  SplitSystem s;
  s.polygon = RegularPolygon(4);
  s.m = 4;
  s.label = "cross";
  const Point2 centre{0.0, 0.0};
  s.cuts.push_back(Segment{s.polygon.side_midpoint(0), s.polygon.side_midpoint(2)});
  s.cuts.push_back(Segment{s.polygon.side_midpoint(3), s.polygon.side_midpoint(1)});
  for (int k = 0; k < 4; ++k) {
    s.regions.push_back({{walk(s.polygon, k - 0.5, k + 0.5),
                          Segment{s.polygon.side_midpoint(k), centre},
                          Segment{centre, s.polygon.side_midpoint(k - 1)}}});
  }
  return finish(std::move(s));
}

SplitSystem square_t_split() {
  SplitSystem s;
  s.polygon = RegularPolygon(4);
  s.m = 3;
  s.label = "t-split";
  // Strip of height 1/3 along side 0, then a vertical bisector above it.
  const double left_s = -1.0 / 3.0;  // on side 3
  const double right_s = 4.0 / 3.0;  // on side 1
  const double top_s = 2.5;          // midpoint of side 2
  const Point2 left = s.polygon.boundary_point(left_s);
  const Point2 right = s.polygon.boundary_point(right_s);
  const Point2 top = s.polygon.boundary_point(top_s);
  const Point2 foot{top.x, left.y};
  s.cuts.push_back(Segment{left, right});
  s.cuts.push_back(Segment{foot, top});
  s.regions.push_back({{walk(s.polygon, left_s, right_s), Segment{right, left}}});
  s.regions.push_back({{walk(s.polygon, right_s, top_s), Segment{top, foot}, Segment{foot, right}}});
  s.regions.push_back(
      {{walk(s.polygon, top_s, 4.0 + left_s), Segment{left, foot}, Segment{foot, top}}});
  return finish(std::move(s));
}

SplitSystem annulus_split(int n) {
  if (n < 3) throw DomainError("annulus_split needs n >= 3");
  SplitSystem s;
  s.polygon = RegularPolygon(n);
  s.m = n + 1;
  s.label = "annulus:" + std::to_string(n);
  const double inner_side = 1.0 / std::sqrt(n + 1.0);
  const double inner_radius = inner_side / (2.0 * std::sin(kPi / n));
  std::vector<Point2> inner(static_cast<std::size_t>(n));
  std::vector<Point2> mids(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = -0.5 * kPi + 2.0 * kPi * k / n;
    inner[k] = {inner_radius * std::cos(angle), inner_radius * std::sin(angle)};
    mids[k] = s.polygon.side_midpoint(k);
  }
  for (int k = 0; k < n; ++k) s.cuts.push_back(Segment{inner[k], inner[(k + 1) % n]});
  for (int k = 0; k < n; ++k) {
    // At n = 3 the spokes vanish and the inner triangle is the medial one.
    if (distance(inner[k], mids[k]) > 1e-12) s.cuts.push_back(Segment{inner[k], mids[k]});
  }
  BoundaryLoop core;
  for (int k = 0; k < n; ++k) core.pieces.push_back(Segment{inner[k], inner[(k + 1) % n]});
  s.regions.push_back(std::move(core));
  for (int k = 0; k < n; ++k) {
    const int next = (k + 1) % n;
    s.regions.push_back({{walk(s.polygon, k + 0.5, k + 1.5), Segment{mids[next], inner[next]},
                          Segment{inner[next], inner[k]}, Segment{inner[k], mids[k]}}});
  }
  return finish(std::move(s));
}

ValidationReport validate_split(const SplitSystem& split, double tol) {
  ValidationReport report;
  const double total_area = split.polygon.area();
  report.target_area = split.m > 0 ? total_area / split.m : 0.0;
  report.region_count_ok = split.m >= 1 && static_cast<int>(split.regions.size()) == split.m;
  if (!report.region_count_ok) {
    report.failures.push_back("region count " + std::to_string(split.regions.size()) +
                              " != m = " + std::to_string(split.m));
  }

  report.loops_closed = true;
  for (std::size_t i = 0; i < split.regions.size(); ++i) {
    try {
      const double a = loop_area(split.regions[i]);
      report.region_areas.push_back(a);
      report.max_area_deviation =
          std::max(report.max_area_deviation, std::abs(a - report.target_area));
    } catch (const ValidationError& e) {
      report.loops_closed = false;
      report.region_areas.push_back(std::nan(""));
      report.failures.push_back("region " + std::to_string(i) + ": " + e.what());
    }
  }
  if (report.loops_closed && report.max_area_deviation > tol) {
    std::ostringstream msg;
    msg << "area deviation " << report.max_area_deviation << " exceeds " << tol;
    report.failures.push_back(msg.str());
  }

  report.total_length = split.total_length;
  report.summed_cut_length = summed_cut_length(split);
  report.length_consistent = std::abs(report.total_length - report.summed_cut_length) <= 1e-12;
  if (!report.length_consistent) report.failures.push_back("total_length != sum of cut lengths");

  report.contained = true;
  auto check = [&](Point2 p) {
    if (point_in_polygon(p, split.polygon) == Location::kOutside) report.contained = false;
  };
  for (const auto& cut : split.cuts) {
    std::visit(Overloaded{
                   [&](const Segment& c) {
                     for (int i = 0; i <= 16; ++i) check(c.a + (i / 16.0) * (c.b - c.a));
                   },
                   [&](const ArcSpec& c) {
                     for (int i = 0; i <= 64; ++i) {
                       check(c.point_at(c.start_angle + c.sweep() * i / 64.0));
                     }
                   },
                   [&](const CurveChain& c) {
                     for (auto p : c.points) check(p);
                   },
               },
               cut);
  }
  if (!report.contained) report.failures.push_back("a cut leaves the polygon");

  if (split.m >= 1) {
    report.lower_bound = lower_bound(split.m, split.polygon.n());
    report.above_lower_bound = report.total_length >= report.lower_bound - tol;
    if (!report.above_lower_bound) report.failures.push_back("total length below lower bound");
  }

  report.passed = report.failures.empty();
  return report;
}

std::vector<std::string> construction_ids() {
  return {"corner-arc", "y-split", "three-arcs", "median-arc", "t-split", "cross", "annulus:<n>"};
}

SplitSystem construction_by_id(const std::string& id) {
  if (id == "corner-arc") return corner_arc_split();
  if (id == "y-split") return y_split();
  if (id == "three-arcs") return three_corner_arcs();
  if (id == "median-arc") return median_arc_split();
  if (id == "t-split") return square_t_split();
  if (id == "cross") return square_cross_split();
  const std::string prefix = "annulus:";
  if (id.rfind(prefix, 0) == 0) {
    int n = 0;
    const char* first = id.data() + prefix.size();
    const char* last = id.data() + id.size();
    const auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec == std::errc{} && ptr == last && first != last) return annulus_split(n);
  }
  throw DomainError("unknown construction '" + id + "'");
}

std::vector<SplitSystem> shipped_constructions() {
  return {corner_arc_split(),  y_split(),        three_corner_arcs(), median_arc_split(),
          square_cross_split(), square_t_split(), annulus_split(4)};
}

std::optional<SplitSystem> best_construction(int m, int n) {
  std::vector<SplitSystem> candidates;
  for (auto& s : shipped_constructions()) {
    if (s.m == m && s.polygon.n() == n) candidates.push_back(std::move(s));
  }
  if (n >= 3 && m == n + 1 && n != 4) candidates.push_back(annulus_split(n));
  if (candidates.empty()) return std::nullopt;
  return *std::min_element(candidates.begin(), candidates.end(),
                           [](const SplitSystem& a, const SplitSystem& b) {
                             return a.total_length < b.total_length;
                           });
}

void attach_best_construction(BoundsReport& report) {
  if (auto best = best_construction(report.m, report.n)) {
    report.best_construction_length = best->total_length;
    if (report.conjectured_value && best->total_length < *report.conjectured_value - 1e-9) {
      report.flags.push_back("construction-below-conjecture");
    }
  }
}

}  // namespace equisplit
