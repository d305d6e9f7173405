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

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "equisplit/closed_form.hpp"
#include "equisplit/geometry.hpp"

namespace equisplit {

using Cut = std::variant<Segment, ArcSpec, CurveChain>;

double cut_length(const Cut& cut);

/// A split of a polygon: its cut primitives, one boundary loop per region,
/// and the total cut length.
struct SplitSystem {
  RegularPolygon polygon{3};
  int m = 0;
  std::vector<Cut> cuts;
  std::vector<BoundaryLoop> regions;
  double total_length = 0.0;
  std::string label;
};

/// Sum of cut lengths.
double summed_cut_length(const SplitSystem& split);

SplitSystem corner_arc_split();     ///< triangle, 2 parts: one vertex-centred arc
SplitSystem y_split();              ///< triangle, 3 parts: centroid to side midpoints
SplitSystem three_corner_arcs();    ///< triangle, 4 parts: an arc at every vertex
SplitSystem median_arc_split();     ///< triangle, 6 parts: vertex arcs + centroid spokes
SplitSystem square_cross_split();   ///< square, 4 parts
SplitSystem square_t_split();       ///< square, 3 parts: strip + bisected remainder
SplitSystem annulus_split(int n);   ///< n-gon, n+1 parts: inner n-gon + spokes

struct ValidationReport {
  std::vector<double> region_areas;
  double target_area = 0.0;
  double max_area_deviation = 0.0;
  double total_length = 0.0;
  double summed_cut_length = 0.0;
  double lower_bound = 0.0;
  bool region_count_ok = false;
  bool length_consistent = false;
  bool contained = false;
  bool loops_closed = false;
  bool above_lower_bound = false;
  bool passed = false;
  std::vector<std::string> failures;
};

/// Checks region count, equal areas (to `tol`), that every cut point lies in
/// the closed polygon, that the recorded total matches the cut lengths, and
/// that the total respects the isoperimetric lower bound.
ValidationReport validate_split(const SplitSystem& split, double tol);

/// Identifiers accepted by construction_by_id: corner-arc, y-split,
/// three-arcs, median-arc, t-split, cross, annulus:<n>.
std::vector<std::string> construction_ids();

/// Throws DomainError for an unknown id.
SplitSystem construction_by_id(const std::string& id);

/// The seven shipped constructions (annulus at n = 4).
std::vector<SplitSystem> shipped_constructions();

/// Shortest shipped construction for (m, n), if any.
std::optional<SplitSystem> best_construction(int m, int n);

void attach_best_construction(BoundsReport& report);

}  // namespace equisplit
