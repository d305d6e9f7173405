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

#include <cstdint>
#include <string>
#include <vector>

#include "equisplit/geometry.hpp"
#include "equisplit/topology.hpp"

namespace equisplit {

struct OptimizerConfig {
  int points_per_edge = 64;
  double penalty_init = 10.0;
  double penalty_growth = 2.0;
  /// Sufficient-decrease constant and step shrink of the backtracking search.
  double armijo = 1e-4;
  double backtrack_shrink = 0.5;
  /// Feasibility target, relative to the polygon area.
  double constraint_tol = 1e-8;
  /// Inner stop: infinity norm of the projected gradient.
  double gradient_tol = 1e-6;
  int max_outer_iterations = 40;
  /// Quasi-Newton steps per outer iteration.
  int max_inner_iterations = 20000;
  /// Curvature pairs kept by the quasi-Newton phase.
  int history = 12;
  /// Projected-gradient level at which the inner solve hands over to
  /// damped Newton with the exact Hessian.
  double newton_switch_tol = 1e-3;
  int max_newton_iterations = 200;
  double jitter = 1e-3;
  std::uint64_t seed = 1;
};

/// Throws DomainError unless every tolerance and count is positive.
void validate_config(const OptimizerConfig& cfg);

struct OptimizedPartition {
  /// The input topology with resolved interior counts and final positions,
  /// suitable for a warm restart.
  TopologySpec topology;
  std::vector<Point2> node_positions;
  /// Full vertex lists (endpoints included) per edge.
  std::vector<std::vector<Point2>> edge_polylines;
  double total_length = 0.0;
  std::vector<double> region_areas;
  /// area - target, per region.
  std::vector<double> constraint_residuals;
  /// Lagrange multiplier per region constraint. The last region's area is
  /// implied by the others and carries 0.
  std::vector<double> multiplier_estimates;
  /// Polygon corners passed by each boundary walk, in region and step order,
  /// fixed from the starting layout.
  std::vector<int> walk_corners;
  bool converged = false;
  int outer_iterations = 0;
  int inner_iterations = 0;

  double max_abs_residual() const;
};

/// Minimises total cut length subject to equal-area (target fraction)
/// constraints with an augmented Lagrangian. Free variables are anchor
/// parameters, junction coordinates and edge interior vertices. Returns
/// converged = false rather than throwing when the iteration budget runs
/// out. Throws DomainError for an invalid topology or config.
OptimizedPartition optimize(const TopologySpec& spec, const OptimizerConfig& cfg = {});

/// Region areas recomputed through loop_area on explicit boundary loops.
std::vector<double> region_areas_via_loops(const OptimizedPartition& result);

struct EdgeArcCheck {
  int edge = 0;
  int interior_points = 0;
  double edge_length = 0.0;
  CircleFit circle;
  double line_residual = 0.0;
  bool straight = false;
  /// Discrete (three-point) curvature along the edge.
  double curvature_mean = 0.0;
  double curvature_spread = 0.0;  ///< max |k - mean|
  bool checked = false;           ///< false when too few interior points
  bool passed = true;
};

struct ArcCheckReport {
  std::vector<EdgeArcCheck> edges;
  bool passed = true;
};

/// Fits a circle to every edge with at least 8 interior points and passes
/// when each fit residual is within tol * edge length. Edges whose line fit
/// is within 1e-6 are reported as straight.
ArcCheckReport arc_property_check(const OptimizedPartition& result, double tol);

enum class Catalog {
  kHalves,  ///< two-part triangle splits (three cases)
  kThirds,  ///< three-part triangle splits (six cases)
};

struct CatalogCase {
  std::string id;           ///< roman case label, e.g. "iii"
  std::string description;
  TopologySpec topology;
};

/// One representative topology per case of the two- and three-part
/// triangle case analyses.
std::vector<CatalogCase> case_catalog(Catalog which);

}  // namespace equisplit
