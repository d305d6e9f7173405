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

#include "equisplit/topology_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "equisplit/errors.hpp"

namespace equisplit {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

class Parser {
 public:
  TopologySpec run(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no_;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto tokens = split_ws(line);
      if (tokens.empty()) continue;
      dispatch(tokens);
    }
    finish();
    return std::move(spec_);
  }

 private:
  [[noreturn]] void error(const std::string& msg) const { throw SchemaError(line_no_, msg); }

  double number(const std::string& tok) const {
    double value = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
      error("expected a number, got '" + tok + "'");
    }
    return value;
  }

  int integer(const std::string& tok) const {
    int value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) error("expected an integer, got '" + tok + "'");
    return value;
  }

  double fraction(const std::string& tok) const {
    if (const auto slash = tok.find('/'); slash != std::string::npos) {
      const double num = number(tok.substr(0, slash));
      const double den = number(tok.substr(slash + 1));
      if (den == 0.0) error("zero denominator in '" + tok + "'");
      return num / den;
    }
    return number(tok);
  }

  void arity(const std::vector<std::string>& t, std::size_t lo, std::size_t hi) const {
    if (t.size() < lo || t.size() > hi) error("wrong number of fields for '" + t[0] + "'");
  }

  void require_polygon() const {
    if (!have_polygon_) error("'polygon' must be declared first");
  }

  void new_name(const std::string& name) {
    if (!names_.insert({name, line_no_}).second) error("duplicate name '" + name + "'");
  }

  int node(const std::string& name) const {
    const int idx = find_node(spec_, name);
    if (idx < 0) error("unknown node '" + name + "'");
    return idx;
  }

  void dispatch(const std::vector<std::string>& t) {
    const std::string& key = t[0];
    if (key == "topology") {
      std::string label;
      for (std::size_t i = 1; i < t.size(); ++i) label += (i > 1 ? " " : "") + t[i];
      spec_.label = label;
    } else if (key == "polygon") {
      arity(t, 2, 2);
      if (have_polygon_) error("polygon declared twice");
      const int n = integer(t[1]);
      if (n < 3) error("polygon needs n >= 3");
      spec_.polygon = RegularPolygon(n);
      have_polygon_ = true;
    } else if (key == "anchor") {
      require_polygon();
      arity(t, 4, 5);
      new_name(t[1]);
      BoundaryAnchor a;
      a.side = integer(t[2]);
      a.t = number(t[3]);
      if (a.side < 0 || a.side >= spec_.polygon.n()) error("anchor side out of range");
      if (a.t < 0.0 || a.t > 1.0) error("anchor parameter outside [0,1]");
      if (t.size() == 5) {
        if (t[4] != "fixed") error("expected 'fixed', got '" + t[4] + "'");
        a.fixed = true;
      }
      spec_.nodes.push_back({t[1], a});
    } else if (key == "junction") {
      require_polygon();
      arity(t, 4, 4);
      new_name(t[1]);
      spec_.nodes.push_back({t[1], Junction{{number(t[2]), number(t[3])}}});
    } else if (key == "edge") {
      require_polygon();
      arity(t, 4, 5);
      new_name(t[1]);
      TopologyEdge e;
      e.name = t[1];
      e.a = node(t[2]);
      e.b = node(t[3]);
      if (t.size() == 5 && t[4] != "auto") {
        const int k = integer(t[4]);
        if (k < 0) error("interior point count must be >= 0");
        if (e.closed() && k < 2) error("closed edge needs at least 2 interior points");
        e.interior_points = k;
      }
      edge_lines_.push_back(line_no_);
      spec_.edges.push_back(std::move(e));
    } else if (key == "init") {
      if (t.size() < 4 || (t.size() - 2) % 2 != 0) error("'init' needs an edge and x y pairs");
      const int idx = find_edge(spec_, t[1]);
      if (idx < 0) error("unknown edge '" + t[1] + "'");
      auto& pts = spec_.edges[static_cast<std::size_t>(idx)].initial_points;
      for (std::size_t i = 2; i < t.size(); i += 2) pts.push_back({number(t[i]), number(t[i + 1])});
    } else if (key == "region") {
      require_polygon();
      region(t);
    } else if (key == "result") {
      // Output of a previous run; carried for humans, ignored on input.
    } else {
      error("unknown keyword '" + key + "'");
    }
  }

  void region(const std::vector<std::string>& t) {
    if (t.size() < 5 || t[3] != ":") error("expected 'region <name> <fraction> : <steps>'");
    new_name(t[1]);
    RegionSpec r;
    r.name = t[1];
    r.fraction = fraction(t[2]);
    std::vector<LoopStep> component;
    for (std::size_t i = 4; i < t.size(); ++i) {
      const std::string& tok = t[i];
      if (tok == "|") {
        if (component.empty()) error("empty component before '|'");
        r.components.push_back(std::move(component));
        component.clear();
      } else if (tok == "boundary") {
        component.push_back(FullBoundaryStep{});
      } else if (tok.rfind("walk:", 0) == 0) {
        const auto colon = tok.find(':', 5);
        if (colon == std::string::npos) error("walk step must be 'walk:<from>:<to>'");
        component.push_back(WalkStep{node(tok.substr(5, colon - 5)), node(tok.substr(colon + 1))});
      } else if (tok.size() > 1 && (tok[0] == '+' || tok[0] == '-')) {
        const int idx = find_edge(spec_, tok.substr(1));
        if (idx < 0) error("unknown edge '" + tok.substr(1) + "'");
        component.push_back(EdgeStep{idx, tok[0] == '+'});
      } else {
        error("unrecognised loop step '" + tok + "'");
      }
    }
    if (component.empty()) error("region ends with an empty component");
    r.components.push_back(std::move(component));
    try {
      validate_region(spec_, r);
    } catch (const DomainError& e) {
      error(e.what());
    }
    last_region_line_ = line_no_;
    spec_.regions.push_back(std::move(r));
  }

  void finish() {
    if (!have_polygon_) throw SchemaError(line_no_, "missing 'polygon' declaration");
    if (spec_.regions.empty()) throw SchemaError(line_no_, "no regions declared");
    double sum = 0.0;
    for (const auto& r : spec_.regions) sum += r.fraction;
    if (std::abs(sum - 1.0) > 1e-12) {
      throw SchemaError(last_region_line_, "region fractions sum to " + std::to_string(sum));
    }
    for (std::size_t e = 0; e < spec_.edges.size(); ++e) {
      int fwd = 0;
      int bwd = 0;
      for (const auto& r : spec_.regions) {
        for (const auto& c : r.components) {
          for (const auto& step : c) {
            if (const auto* s = std::get_if<EdgeStep>(&step); s && s->edge == static_cast<int>(e)) {
              (s->forward ? fwd : bwd)++;
            }
          }
        }
      }
      if (fwd + bwd == 0 || fwd > 1 || bwd > 1) {
        throw SchemaError(edge_lines_[e], "edge '" + spec_.edges[e].name +
                                              "' must bound one region, or two in opposite "
                                              "directions");
      }
    }
    try {
      validate_topology(spec_);
    } catch (const DomainError& e) {
      throw SchemaError(0, e.what());
    }
  }

  TopologySpec spec_;
  bool have_polygon_ = false;
  int line_no_ = 0;
  int last_region_line_ = 0;
  std::vector<int> edge_lines_;
  std::map<std::string, int> names_;
};

std::string num(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

TopologySpec parse_topology(std::istream& in) { return Parser{}.run(in); }

TopologySpec parse_topology_string(const std::string& text) {
  std::istringstream in(text);
  return parse_topology(in);
}

TopologySpec read_topology_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(0, "cannot open topology file '" + path + "'");
  return parse_topology(in);
}

void write_topology(std::ostream& out, const TopologySpec& spec) {
  out << "# equisplit topology\n";
  if (!spec.label.empty()) out << "topology " << spec.label << "\n";
  out << "polygon " << spec.polygon.n() << "\n";
  for (const auto& node : spec.nodes) {
    std::visit(Overloaded{
                   [&](const BoundaryAnchor& a) {
                     out << "anchor " << node.name << " " << a.side << " " << num(a.t)
                         << (a.fixed ? " fixed" : "") << "\n";
                   },
                   [&](const Junction& j) {
                     out << "junction " << node.name << " " << num(j.position.x) << " "
                         << num(j.position.y) << "\n";
                   },
               },
               node.kind);
  }
  for (const auto& e : spec.edges) {
    out << "edge " << e.name << " " << spec.nodes[static_cast<std::size_t>(e.a)].name << " "
        << spec.nodes[static_cast<std::size_t>(e.b)].name << " "
        << (e.interior_points ? std::to_string(*e.interior_points) : std::string("auto")) << "\n";
    // One init line per 8 points keeps files readable.
    for (std::size_t i = 0; i < e.initial_points.size(); i += 8) {
      out << "init " << e.name;
      for (std::size_t j = i; j < std::min(i + 8, e.initial_points.size()); ++j) {
        out << " " << num(e.initial_points[j].x) << " " << num(e.initial_points[j].y);
      }
      out << "\n";
    }
  }
  for (const auto& r : spec.regions) {
    out << "region " << r.name << " " << num(r.fraction) << " :";
    for (std::size_t c = 0; c < r.components.size(); ++c) {
      if (c > 0) out << " |";
      for (const auto& step : r.components[c]) {
        std::visit(Overloaded{
                       [&](const EdgeStep& s) {
                         out << " " << (s.forward ? '+' : '-')
                             << spec.edges[static_cast<std::size_t>(s.edge)].name;
                       },
                       [&](const WalkStep& s) {
                         out << " walk:" << spec.nodes[static_cast<std::size_t>(s.from_node)].name
                             << ":" << spec.nodes[static_cast<std::size_t>(s.to_node)].name;
                       },
                       [&](const FullBoundaryStep&) { out << " boundary"; },
                   },
                   step);
      }
    }
    out << "\n";
  }
}

void write_optimized(std::ostream& out, const OptimizedPartition& result) {
  write_topology(out, result.topology);
  out << "result length " << num(result.total_length) << "\n";
  out << "result converged " << (result.converged ? 1 : 0) << "\n";
  out << "result iterations " << result.outer_iterations << " " << result.inner_iterations
      << "\n";
  for (std::size_t i = 0; i < result.topology.regions.size(); ++i) {
    out << "result region " << result.topology.regions[i].name << " "
        << num(result.region_areas[i]) << " " << num(result.constraint_residuals[i]) << " "
        << num(result.multiplier_estimates[i]) << "\n";
  }
}

}  // namespace equisplit
