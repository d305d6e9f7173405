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

#include "equisplit/topology.hpp"

#include <algorithm>
#include <cmath>

#include "equisplit/errors.hpp"

namespace equisplit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool is_anchor(const TopologySpec& spec, int node) {
  return std::holds_alternative<BoundaryAnchor>(spec.nodes[static_cast<std::size_t>(node)].kind);
}

[[noreturn]] void fail(const std::string& msg) { throw DomainError("topology: " + msg); }

}  // namespace

int find_node(const TopologySpec& spec, const std::string& name) {
  for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
    if (spec.nodes[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

int find_edge(const TopologySpec& spec, const std::string& name) {
  for (std::size_t i = 0; i < spec.edges.size(); ++i) {
    if (spec.edges[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

Point2 anchor_position(const RegularPolygon& poly, const BoundaryAnchor& anchor) {
  const double t = std::clamp(anchor.t, 0.0, 1.0);
  const Point2 a = poly.vertex(anchor.side);
  return a + t * (poly.vertex(anchor.side + 1) - a);
}

void validate_region(const TopologySpec& spec, const RegionSpec& region) {
  const int node_count = static_cast<int>(spec.nodes.size());
  if (!(region.fraction > 0.0)) fail("region '" + region.name + "' has non-positive target");
  if (region.components.empty()) fail("region '" + region.name + "' has no boundary");
  for (const auto& component : region.components) {
    if (component.empty()) fail("region '" + region.name + "' has an empty component");
    // Each step has a start and end node (-1 for the full boundary).
    std::vector<std::pair<int, int>> ends;
    for (const auto& step : component) {
      std::visit(Overloaded{
                     [&](const EdgeStep& s) {
                       if (s.edge < 0 || s.edge >= static_cast<int>(spec.edges.size())) {
                         fail("region '" + region.name + "' references a missing edge");
                       }
                       const auto& e = spec.edges[static_cast<std::size_t>(s.edge)];
                       ends.emplace_back(s.forward ? e.a : e.b, s.forward ? e.b : e.a);
                     },
                     [&](const WalkStep& s) {
                       if (s.from_node < 0 || s.from_node >= node_count || s.to_node < 0 ||
                           s.to_node >= node_count) {
                         fail("region '" + region.name + "' walk references a missing node");
                       }
                       if (!is_anchor(spec, s.from_node) || !is_anchor(spec, s.to_node)) {
                         fail("region '" + region.name + "' walk must join two anchors");
                       }
                       ends.emplace_back(s.from_node, s.to_node);
                     },
                     [&](const FullBoundaryStep&) { ends.emplace_back(-1, -1); },
                 },
                 step);
    }
    for (std::size_t i = 0; i < ends.size(); ++i) {
      const auto& next = ends[(i + 1) % ends.size()];
      if (ends[i].second != next.first) {
        fail("region '" + region.name + "' component does not chain head to tail");
      }
    }
    if (ends.front().first == -1 && ends.size() != 1) {
      fail("region '" + region.name + "' full boundary must be its own component");
    }
  }
}

void validate_topology(const TopologySpec& spec) {
  const int node_count = static_cast<int>(spec.nodes.size());
  const int n = spec.polygon.n();
  for (const auto& node : spec.nodes) {
    std::visit(Overloaded{
                   [&](const BoundaryAnchor& a) {
                     if (a.side < 0 || a.side >= n) fail("anchor '" + node.name + "' side out of range");
                     if (!(a.t >= 0.0 && a.t <= 1.0)) fail("anchor '" + node.name + "' t outside [0,1]");
                   },
                   [&](const Junction& j) {
                     if (!is_finite(j.position)) fail("junction '" + node.name + "' not finite");
                   },
               },
               node.kind);
  }
  for (const auto& edge : spec.edges) {
    if (edge.a < 0 || edge.a >= node_count || edge.b < 0 || edge.b >= node_count) {
      fail("edge '" + edge.name + "' references a missing node");
    }
    if (edge.interior_points && *edge.interior_points < 0) {
      fail("edge '" + edge.name + "' has negative interior point count");
    }
    if (edge.closed() && edge.interior_points && *edge.interior_points < 2) {
      fail("closed edge '" + edge.name + "' needs at least 2 interior points");
    }
  }
  if (spec.regions.empty()) fail("no regions declared");

  std::vector<int> forward_uses(spec.edges.size(), 0);
  std::vector<int> backward_uses(spec.edges.size(), 0);
  double fraction_sum = 0.0;
  for (const auto& region : spec.regions) {
    validate_region(spec, region);
    fraction_sum += region.fraction;
    for (const auto& component : region.components) {
      for (const auto& step : component) {
        if (const auto* s = std::get_if<EdgeStep>(&step)) {
          (s->forward ? forward_uses : backward_uses)[static_cast<std::size_t>(s->edge)]++;
        }
      }
    }
  }
  if (std::abs(fraction_sum - 1.0) > 1e-12) fail("region fractions do not sum to 1");
  for (std::size_t e = 0; e < spec.edges.size(); ++e) {
    const int total = forward_uses[e] + backward_uses[e];
    if (total == 0) fail("edge '" + spec.edges[e].name + "' bounds no region");
    if (forward_uses[e] > 1 || backward_uses[e] > 1) {
      fail("edge '" + spec.edges[e].name + "' used twice in the same direction");
    }
  }
}

}  // namespace equisplit
