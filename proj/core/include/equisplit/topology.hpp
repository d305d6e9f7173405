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

#include "equisplit/geometry.hpp"

namespace equisplit {

/// Node that slides along one polygon side; t in [0, 1] from vertex `side`
/// towards vertex `side + 1`.
struct BoundaryAnchor {
  int side = 0;
  double t = 0.5;
  bool fixed = false;
};

/// Free interior node.
struct Junction {
  Point2 position;
};

struct TopologyNode {
  std::string name;
  std::variant<BoundaryAnchor, Junction> kind;
};

/// Polyline cut between two nodes. An edge whose endpoints coincide is a
/// closed loop through that node.
struct TopologyEdge {
  std::string name;
  int a = 0;
  int b = 0;
  /// Interior vertex count; empty means "use OptimizerConfig::points_per_edge".
  std::optional<int> interior_points;
  /// Optional starting interior vertices, resampled to the resolved count.
  std::vector<Point2> initial_points;

  bool closed() const { return a == b; }
};

/// Traverse an edge, forward (a -> b) or backward.
struct EdgeStep {
  int edge = 0;
  bool forward = true;
};

/// Counterclockwise walk along the polygon boundary between two anchors.
struct WalkStep {
  int from_node = 0;
  int to_node = 0;
};

/// The whole polygon boundary, counterclockwise from vertex 0.
struct FullBoundaryStep {};

using LoopStep = std::variant<EdgeStep, WalkStep, FullBoundaryStep>;

/// A region is bounded by one or more closed components; its area is the sum
/// of their signed areas (holes run clockwise).
struct RegionSpec {
  std::string name;
  double fraction = 0.0;
  std::vector<std::vector<LoopStep>> components;
};

struct TopologySpec {
  std::string label;
  RegularPolygon polygon{3};
  std::vector<TopologyNode> nodes;
  std::vector<TopologyEdge> edges;
  std::vector<RegionSpec> regions;
};

/// Structural checks: node references exist, walks join anchors, components
/// chain head to tail and close, every edge is used once or twice (twice
/// only in opposite directions), and fractions are positive and sum to 1
/// within 1e-12. Throws DomainError with a description of the first problem.
void validate_topology(const TopologySpec& spec);

/// Checks one region against the nodes and edges of `spec`.
void validate_region(const TopologySpec& spec, const RegionSpec& region);

int find_node(const TopologySpec& spec, const std::string& name);  ///< -1 if absent
int find_edge(const TopologySpec& spec, const std::string& name);  ///< -1 if absent

/// Position of an anchor on the polygon.
Point2 anchor_position(const RegularPolygon& poly, const BoundaryAnchor& anchor);

}  // namespace equisplit
