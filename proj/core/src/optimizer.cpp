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

#include "equisplit/optimizer.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include <Eigen/Dense>

#include "equisplit/errors.hpp"

namespace equisplit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

using Vec = std::vector<double>;

double inf_norm(const Vec& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Where a point of the discretised split comes from.
struct PointRef {
  enum class Kind { kFixed, kAnchor, kFree };
  Kind kind = Kind::kFixed;
  Point2 fixed;
  int var = -1;
  Point2 base;  // anchor: p = base + t * dir
  Point2 dir;
};

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<Point2> resample(const std::vector<Point2>& path, int count) {
  std::vector<double> cum(path.size(), 0.0);
  for (std::size_t i = 1; i < path.size(); ++i) cum[i] = cum[i - 1] + distance(path[i - 1], path[i]);
  const double total = cum.back();
  std::vector<Point2> out;
  out.reserve(static_cast<std::size_t>(count));
  std::size_t seg = 1;
  for (int j = 1; j <= count; ++j) {
    const double target = total * j / (count + 1.0);
    while (seg + 1 < path.size() && cum[seg] < target) ++seg;
    const double len = cum[seg] - cum[seg - 1];
    const double u = len > 0.0 ? (target - cum[seg - 1]) / len : 0.0;
    out.push_back(path[seg - 1] + u * (path[seg] - path[seg - 1]));
  }
  return out;
}

class Problem {
 public:
  Problem(const TopologySpec& spec, const OptimizerConfig& cfg) : spec_(spec) {
    const auto& poly = spec.polygon;
    std::mt19937_64 rng(cfg.seed);

    node_refs_.resize(spec.nodes.size());
    node_sides_.assign(spec.nodes.size(), -1);
    for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
      std::visit(Overloaded{
                     [&](const BoundaryAnchor& a) {
                       PointRef ref;
                       node_sides_[i] = a.side;
                       if (a.fixed) {
                         ref.fixed = anchor_position(poly, a);
                       } else {
                         ref.kind = PointRef::Kind::kAnchor;
                         ref.var = add_var(a.t, true);
                         ref.base = poly.vertex(a.side);
                         ref.dir = poly.vertex(a.side + 1) - ref.base;
                       }
                       node_refs_[i] = ref;
                     },
                     [&](const Junction& j) {
                       PointRef ref;
                       ref.kind = PointRef::Kind::kFree;
                       ref.var = add_var(j.position.x, false);
                       add_var(j.position.y, false);
                       node_refs_[i] = ref;
                     },
                 },
                 spec.nodes[i].kind);
    }

    edge_refs_.resize(spec.edges.size());
    interior_counts_.resize(spec.edges.size());
    for (std::size_t e = 0; e < spec.edges.size(); ++e) {
      const auto& edge = spec.edges[e];
      const int k = edge.interior_points.value_or(cfg.points_per_edge);
      interior_counts_[e] = k;
      const Point2 pa = position(node_refs_[static_cast<std::size_t>(edge.a)]);
      const Point2 pb = position(node_refs_[static_cast<std::size_t>(edge.b)]);
      std::vector<Point2> path{pa};
      if (!edge.initial_points.empty()) {
        path.insert(path.end(), edge.initial_points.begin(), edge.initial_points.end());
      } else if (edge.closed()) {
        // Small counterclockwise circle through the node.
        const Point2 centre = pa - Point2{0.1, 0.0};
        for (int j = 1; j < 16; ++j) {
          const double ang = 2.0 * kPi * j / 16.0;
          path.push_back(centre + 0.1 * Point2{std::cos(ang), std::sin(ang)});
        }
      }
      path.push_back(pb);
      std::vector<Point2> interior;
      if (k > 0) {
        interior = (static_cast<int>(path.size()) - 2 == k)
                       ? std::vector<Point2>(path.begin() + 1, path.end() - 1)
                       : resample(path, k);
      }
      auto& refs = edge_refs_[e];
      refs.push_back(node_refs_[static_cast<std::size_t>(edge.a)]);
      for (std::size_t j = 0; j < interior.size(); ++j) {
        // Jitter along the local normal so that dense points cannot fold.
        const Point2 before = j == 0 ? pa : interior[j - 1];
        const Point2 after = j + 1 == interior.size() ? pb : interior[j + 1];
        Point2 normal{before.y - after.y, after.x - before.x};
        const double len = norm(normal);
        normal = len > 0.0 ? (1.0 / len) * normal : Point2{0.0, 1.0};
        const Point2 p = interior[j] + cfg.jitter * (2.0 * unit_uniform(rng) - 1.0) * normal;
        PointRef ref;
        ref.kind = PointRef::Kind::kFree;
        ref.var = add_var(p.x, false);
        add_var(p.y, false);
        refs.push_back(ref);
      }
      refs.push_back(node_refs_[static_cast<std::size_t>(edge.b)]);
    }

    for (const auto& region : spec.regions) {
      targets_.push_back(region.fraction * poly.area());
      std::vector<std::vector<PointRef>> rings;
      std::vector<std::vector<WalkInfo>> walks;
      for (const auto& component : region.components) {
        std::vector<PointRef> ring;
        std::vector<WalkInfo> comp_walks;
        for (const auto& step : component) {
          std::visit(Overloaded{
                         [&](const EdgeStep& s) {
                           const auto& refs = edge_refs_[static_cast<std::size_t>(s.edge)];
                           if (s.forward) {
                             ring.insert(ring.end(), refs.begin(), refs.end() - 1);
                           } else {
                             ring.insert(ring.end(), refs.rbegin(), refs.rend() - 1);
                           }
                         },
                         [&](const WalkStep& s) {
                           const int corners = walk_corner_count(s);
                           comp_walks.push_back({s.from_node, s.to_node, corners});
                           ring.push_back(node_refs_[static_cast<std::size_t>(s.from_node)]);
                           const int side = node_sides_[static_cast<std::size_t>(s.from_node)];
                           for (int c = 1; c <= corners; ++c) {
                             PointRef ref;
                             ref.fixed = poly.vertex(side + c);
                             ring.push_back(ref);
                           }
                         },
                         [&](const FullBoundaryStep&) {
                           for (const auto& v : poly.vertices()) {
                             PointRef ref;
                             ref.fixed = v;
                             ring.push_back(ref);
                           }
                         },
                     },
                     step);
        }
        rings.push_back(std::move(ring));
        walks.push_back(std::move(comp_walks));
      }
      region_rings_.push_back(std::move(rings));
      region_walks_.push_back(std::move(walks));
    }
  }

  struct WalkInfo {
    int from = 0;
    int to = 0;
    int corners = 0;
  };

  const Vec& initial() const { return x0_; }
  std::size_t size() const { return x0_.size(); }
  std::size_t region_count() const { return targets_.size(); }
  double target(std::size_t r) const { return targets_[r]; }
  int interior_count(std::size_t e) const { return interior_counts_[e]; }
  const std::vector<WalkInfo>& walks(std::size_t region, std::size_t comp) const {
    return region_walks_[region][comp];
  }

  void project(Vec& x) const {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (bounded_[i]) x[i] = std::clamp(x[i], 0.0, 1.0);
    }
  }

  // Zero the gradient components that point out of the box at active bounds.
  Vec projected_gradient(const Vec& x, const Vec& g) const {
    Vec pg = g;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!bounded_[i]) continue;
      if ((x[i] <= 0.0 && g[i] > 0.0) || (x[i] >= 1.0 && g[i] < 0.0)) pg[i] = 0.0;
    }
    return pg;
  }

  Point2 point(const PointRef& ref, const Vec& x) const {
    switch (ref.kind) {
      case PointRef::Kind::kFixed:
        return ref.fixed;
      case PointRef::Kind::kAnchor:
        return ref.base + std::clamp(x[static_cast<std::size_t>(ref.var)], 0.0, 1.0) * ref.dir;
      case PointRef::Kind::kFree:
        return {x[static_cast<std::size_t>(ref.var)], x[static_cast<std::size_t>(ref.var) + 1]};
    }
    return {};
  }

  static void accumulate(const PointRef& ref, Point2 g, double scale, Vec& grad) {
    switch (ref.kind) {
      case PointRef::Kind::kFixed:
        break;
      case PointRef::Kind::kAnchor:
        grad[static_cast<std::size_t>(ref.var)] += scale * dot(g, ref.dir);
        break;
      case PointRef::Kind::kFree:
        grad[static_cast<std::size_t>(ref.var)] += scale * g.x;
        grad[static_cast<std::size_t>(ref.var) + 1] += scale * g.y;
        break;
    }
  }

  double length(const Vec& x, Vec* grad) const {
    double total = 0.0;
    for (const auto& refs : edge_refs_) {
      Point2 prev = point(refs.front(), x);
      for (std::size_t i = 1; i < refs.size(); ++i) {
        const Point2 cur = point(refs[i], x);
        const Point2 d = cur - prev;
        const double len = norm(d);
        total += len;
        if (grad && len > 1e-300) {
          const Point2 u = (1.0 / len) * d;
          accumulate(refs[i], u, 1.0, *grad);
          accumulate(refs[i - 1], u, -1.0, *grad);
        }
        prev = cur;
      }
    }
    return total;
  }

  // Signed area of region r; adds scale * d(area)/dx into grad when given.
  double area(std::size_t r, const Vec& x, Vec* grad, double scale) const {
    double twice = 0.0;
    for (const auto& ring : region_rings_[r]) {
      const std::size_t m = ring.size();
      std::vector<Point2> pts(m);
      for (std::size_t i = 0; i < m; ++i) pts[i] = point(ring[i], x);
      for (std::size_t i = 0; i < m; ++i) twice += cross(pts[i], pts[(i + 1) % m]);
      if (grad) {
        for (std::size_t i = 0; i < m; ++i) {
          const Point2 next = pts[(i + 1) % m];
          const Point2 prev = pts[(i + m - 1) % m];
          accumulate(ring[i], {0.5 * (next.y - prev.y), 0.5 * (prev.x - next.x)}, scale, *grad);
        }
      }
    }
    return 0.5 * twice;
  }

  // Adds scale * d^2(length)/dx^2 into hess.
  void length_hessian(const Vec& x, Eigen::MatrixXd& hess) const {
    for (const auto& refs : edge_refs_) {
      Point2 prev = point(refs.front(), x);
      for (std::size_t i = 1; i < refs.size(); ++i) {
        const Point2 cur = point(refs[i], x);
        const Point2 d = cur - prev;
        const double len = norm(d);
        if (len > 1e-300) {
          // (I - u u^T) / len
          const Point2 u = (1.0 / len) * d;
          const Block m{(1.0 - u.x * u.x) / len, -u.x * u.y / len, -u.x * u.y / len,
                        (1.0 - u.y * u.y) / len};
          add_block(refs[i], refs[i], m, 1.0, hess);
          add_block(refs[i - 1], refs[i - 1], m, 1.0, hess);
          add_block(refs[i], refs[i - 1], m, -1.0, hess);
          add_block(refs[i - 1], refs[i], m, -1.0, hess);
        }
        prev = cur;
      }
    }
  }

  // Adds scale * d^2(area of region r)/dx^2 into hess. The shoelace sum is
  // bilinear, so only consecutive ring points couple.
  void area_hessian(std::size_t r, double scale, Eigen::MatrixXd& hess) const {
    const Block q{0.0, 0.5, -0.5, 0.0};
    const Block qt{0.0, -0.5, 0.5, 0.0};
    for (const auto& ring : region_rings_[r]) {
      const std::size_t m = ring.size();
      for (std::size_t i = 0; i < m; ++i) {
        add_block(ring[i], ring[(i + 1) % m], q, scale, hess);
        add_block(ring[(i + 1) % m], ring[i], qt, scale, hess);
      }
    }
  }

  bool bounded(std::size_t i) const { return bounded_[i] != 0; }

  // Re-spaces the interior points of any edge whose shortest segment has
  // fallen below a quarter of its mean; length is blind to point spacing, so
  // points can otherwise pile up at a junction. Returns true if x changed.
  bool redistribute(Vec& x) const {
    bool changed = false;
    for (std::size_t e = 0; e < edge_refs_.size(); ++e) {
      const auto& refs = edge_refs_[e];
      if (refs.size() < 3) continue;
      const std::vector<Point2> pts = edge_polyline(e, x);
      double total = 0.0;
      double shortest = std::numeric_limits<double>::infinity();
      for (std::size_t i = 1; i < pts.size(); ++i) {
        const double d = distance(pts[i - 1], pts[i]);
        total += d;
        shortest = std::min(shortest, d);
      }
      if (shortest >= 0.25 * total / static_cast<double>(pts.size() - 1)) continue;
      const auto interior = resample(pts, static_cast<int>(refs.size()) - 2);
      for (std::size_t j = 0; j < interior.size(); ++j) {
        const auto var = static_cast<std::size_t>(refs[j + 1].var);
        x[var] = interior[j].x;
        x[var + 1] = interior[j].y;
      }
      changed = true;
    }
    return changed;
  }

  Point2 node_position(std::size_t node, const Vec& x) const { return point(node_refs_[node], x); }

  std::vector<Point2> edge_polyline(std::size_t e, const Vec& x) const {
    std::vector<Point2> out;
    for (const auto& ref : edge_refs_[e]) out.push_back(point(ref, x));
    return out;
  }

 private:
  // Row-major 2x2 matrix acting on point coordinates.
  struct Block {
    double xx, xy, yx, yy;
  };

  // hess[vars(a), vars(b)] += scale * Ja^T m Jb, where J maps variables to
  // the point's coordinates.
  static void add_block(const PointRef& a, const PointRef& b, const Block& m, double scale,
                        Eigen::MatrixXd& hess) {
    if (a.kind == PointRef::Kind::kFixed || b.kind == PointRef::Kind::kFixed) return;
    auto columns = [](const PointRef& ref, std::array<Point2, 2>& cols) {
      if (ref.kind == PointRef::Kind::kAnchor) {
        cols[0] = ref.dir;
        return 1;
      }
      cols[0] = {1.0, 0.0};
      cols[1] = {0.0, 1.0};
      return 2;
    };
    std::array<Point2, 2> ca{};
    std::array<Point2, 2> cb{};
    const int na = columns(a, ca);
    const int nb = columns(b, cb);
    for (int i = 0; i < na; ++i) {
      const Point2 row{ca[static_cast<std::size_t>(i)].x * m.xx + ca[static_cast<std::size_t>(i)].y * m.yx,
                       ca[static_cast<std::size_t>(i)].x * m.xy + ca[static_cast<std::size_t>(i)].y * m.yy};
      for (int j = 0; j < nb; ++j) {
        hess(a.var + i, b.var + j) += scale * dot(row, cb[static_cast<std::size_t>(j)]);
      }
    }
  }

  int add_var(double value, bool bounded) {
    x0_.push_back(value);
    bounded_.push_back(bounded ? 1 : 0);
    return static_cast<int>(x0_.size()) - 1;
  }

  Point2 position(const PointRef& ref) const { return point(ref, x0_); }

  int walk_corner_count(const WalkStep& s) const {
    const int n = spec_.polygon.n();
    const auto& a = std::get<BoundaryAnchor>(spec_.nodes[static_cast<std::size_t>(s.from_node)].kind);
    const auto& b = std::get<BoundaryAnchor>(spec_.nodes[static_cast<std::size_t>(s.to_node)].kind);
    int steps = ((b.side - a.side) % n + n) % n;
    if (steps == 0 && b.t < a.t) steps = n;
    return steps;
  }

  const TopologySpec& spec_;
  Vec x0_;
  std::vector<char> bounded_;
  std::vector<PointRef> node_refs_;
  std::vector<int> node_sides_;
  std::vector<std::vector<PointRef>> edge_refs_;
  std::vector<int> interior_counts_;
  std::vector<double> targets_;
  std::vector<std::vector<std::vector<PointRef>>> region_rings_;
  std::vector<std::vector<std::vector<WalkInfo>>> region_walks_;
};

// Augmented Lagrangian  f + sum_i (lambda_i c_i + mu/2 c_i^2)  over the
// constrained regions, with c_i = area_i / target_i - 1 so that the penalty
// scale does not depend on the polygon or the number of parts.
struct Merit {
  const Problem& problem;
  std::size_t constrained;
  const Vec& lambda;
  double mu;

  double operator()(const Vec& x, Vec& grad) const {
    std::fill(grad.begin(), grad.end(), 0.0);
    double value = problem.length(x, &grad);
    for (std::size_t r = 0; r < constrained; ++r) {
      // Two passes keep the gradient weight exact: first the residual, then
      // its derivative scaled by lambda + mu c.
      const double t = problem.target(r);
      const double c = problem.area(r, x, nullptr, 0.0) / t - 1.0;
      value += lambda[r] * c + 0.5 * mu * c * c;
      problem.area(r, x, &grad, (lambda[r] + mu * c) / t);
    }
    return value;
  }

  void hessian(const Vec& x, Eigen::MatrixXd& hess) const {
    hess.setZero();
    problem.length_hessian(x, hess);
    Vec ga(x.size());
    for (std::size_t r = 0; r < constrained; ++r) {
      const double t = problem.target(r);
      const double c = problem.area(r, x, nullptr, 0.0) / t - 1.0;
      problem.area_hessian(r, (lambda[r] + mu * c) / t, hess);
      std::fill(ga.begin(), ga.end(), 0.0);
      problem.area(r, x, &ga, 1.0);
      const Eigen::Map<const Eigen::VectorXd> v(ga.data(), static_cast<Eigen::Index>(ga.size()));
      hess.noalias() += (mu / (t * t)) * v * v.transpose();
    }
  }
};

double dot(const Vec& a, const Vec& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

struct Phase {
  int iterations = 0;
  bool converged = false;
};

// Projected L-BFGS (two-loop recursion) with Armijo backtracking; runs until
// the projected gradient reaches `tol` or progress stalls.
Phase quasi_newton(const Merit& merit, const Problem& problem, Vec& x, const OptimizerConfig& cfg,
                   double tol) {
  const std::size_t dim = x.size();
  Vec g(dim), g_new(dim), x_new(dim), d(dim);
  double f = merit(x, g);
  std::deque<std::pair<Vec, Vec>> memory;
  Phase out;
  int stalls = 0;

  for (int it = 0; it < cfg.max_inner_iterations; ++it) {
    out.iterations = it;
    const Vec pg = problem.projected_gradient(x, g);
    if (inf_norm(pg) <= tol) {
      out.converged = true;
      return out;
    }

    d = pg;
    std::vector<double> alpha(memory.size());
    for (std::size_t i = memory.size(); i-- > 0;) {
      const auto& [s, y] = memory[i];
      alpha[i] = dot(s, d) / dot(y, s);
      for (std::size_t j = 0; j < dim; ++j) d[j] -= alpha[i] * y[j];
    }
    if (!memory.empty()) {
      const auto& [s, y] = memory.back();
      const double gamma = dot(s, y) / dot(y, y);
      for (double& v : d) v *= gamma;
    }
    for (std::size_t i = 0; i < memory.size(); ++i) {
      const auto& [s, y] = memory[i];
      const double beta = dot(y, d) / dot(y, s);
      for (std::size_t j = 0; j < dim; ++j) d[j] += (alpha[i] - beta) * s[j];
    }
    for (double& v : d) v = -v;
    if (dot(d, pg) >= 0.0) {
      memory.clear();
      for (std::size_t j = 0; j < dim; ++j) d[j] = -pg[j];
    }

    double step = memory.empty() ? std::min(1.0, 0.1 / inf_norm(pg)) : 1.0;
    bool accepted = false;
    double f_new = f;
    for (int bt = 0; bt < 60; ++bt) {
      for (std::size_t j = 0; j < dim; ++j) x_new[j] = x[j] + step * d[j];
      problem.project(x_new);
      double decrease = 0.0;
      for (std::size_t j = 0; j < dim; ++j) decrease += g[j] * (x_new[j] - x[j]);
      f_new = merit(x_new, g_new);
      if (f_new <= f + cfg.armijo * decrease) {
        accepted = true;
        break;
      }
      step *= cfg.backtrack_shrink;
    }
    if (!accepted) {
      if (!memory.empty()) {
        memory.clear();
        continue;
      }
      return out;
    }

    Vec s(dim), y(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      s[j] = x_new[j] - x[j];
      y[j] = g_new[j] - g[j];
    }
    if (cfg.history > 0 && dot(s, y) > 1e-12 * std::sqrt(dot(s, s) * dot(y, y))) {
      memory.emplace_back(std::move(s), std::move(y));
      if (static_cast<int>(memory.size()) > cfg.history) memory.pop_front();
    }

    stalls = (std::abs(f - f_new) <= 1e-16 * std::max(1.0, std::abs(f))) ? stalls + 1 : 0;
    x.swap(x_new);
    g.swap(g_new);
    f = f_new;
    if (stalls >= 20) return out;
  }
  out.iterations = cfg.max_inner_iterations;
  return out;
}

// Projected Newton with Levenberg damping and Armijo backtracking. Bounded
// variables resting on a bound with the gradient pointing outwards are held
// fixed for the step.
Phase newton(const Merit& merit, const Problem& problem, Vec& x, const OptimizerConfig& cfg) {
  const std::size_t dim = x.size();
  Vec g(dim), g_new(dim), x_new(dim);
  double f = merit(x, g);
  Eigen::MatrixXd hess(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  double damping = 0.0;
  Phase out;

  for (int it = 0; it < cfg.max_newton_iterations; ++it) {
    out.iterations = it;
    const Vec pg = problem.projected_gradient(x, g);
    if (inf_norm(pg) <= cfg.gradient_tol) {
      out.converged = true;
      return out;
    }

    std::vector<Eigen::Index> free;
    for (std::size_t i = 0; i < dim; ++i) {
      if (!problem.bounded(i) || pg[i] != 0.0 || g[i] == 0.0) free.push_back(static_cast<Eigen::Index>(i));
    }
    merit.hessian(x, hess);
    const auto nf = static_cast<Eigen::Index>(free.size());
    Eigen::MatrixXd h(nf, nf);
    Eigen::VectorXd rhs(nf);
    double scale = 1.0;
    for (Eigen::Index i = 0; i < nf; ++i) {
      rhs(i) = -g[static_cast<std::size_t>(free[static_cast<std::size_t>(i)])];
      for (Eigen::Index j = 0; j < nf; ++j) {
        h(i, j) = hess(free[static_cast<std::size_t>(i)], free[static_cast<std::size_t>(j)]);
      }
      scale = std::max(scale, std::abs(h(i, i)));
    }

    bool stepped = false;
    damping = std::max(damping * 0.1, 1e-12 * scale);
    while (!stepped && damping <= 1e6 * scale) {
      Eigen::MatrixXd shifted = h;
      shifted.diagonal().array() += damping;
      const Eigen::LLT<Eigen::MatrixXd> llt(shifted);
      if (llt.info() != Eigen::Success) {
        damping = std::max(damping * 10.0, 1e-8 * scale);
        continue;
      }
      const Eigen::VectorXd d = llt.solve(rhs);

      double step = 1.0;
      for (int bt = 0; bt < 40 && !stepped; ++bt, step *= cfg.backtrack_shrink) {
        x_new = x;
        for (Eigen::Index i = 0; i < nf; ++i) {
          x_new[static_cast<std::size_t>(free[static_cast<std::size_t>(i)])] += step * d(i);
        }
        problem.project(x_new);
        double decrease = 0.0;
        for (std::size_t j = 0; j < dim; ++j) decrease += g[j] * (x_new[j] - x[j]);
        const double f_new = merit(x_new, g_new);
        bool accept = f_new <= f + cfg.armijo * decrease;
        // Near the optimum the merit change drops below rounding; accept a
        // step that still shrinks the projected gradient.
        if (!accept && std::abs(f_new - f) <= 1e-14 * std::max(1.0, std::abs(f))) {
          accept = inf_norm(problem.projected_gradient(x_new, g_new)) < 0.5 * inf_norm(pg);
        }
        if (accept) {
          x.swap(x_new);
          g.swap(g_new);
          f = f_new;
          stepped = true;
        }
      }
      if (!stepped) damping = std::max(damping * 10.0, 1e-8 * scale);
    }
    if (!stepped) return out;
  }
  out.iterations = cfg.max_newton_iterations;
  return out;
}

struct InnerResult {
  int iterations = 0;
  bool converged = false;
};

// Quasi-Newton brings the iterate into the basin; Newton finishes it.
InnerResult minimise(const Merit& merit, const Problem& problem, Vec& x,
                     const OptimizerConfig& cfg) {
  const Phase coarse =
      quasi_newton(merit, problem, x, cfg, std::max(cfg.newton_switch_tol, cfg.gradient_tol));
  const Phase fine = newton(merit, problem, x, cfg);
  return {coarse.iterations + fine.iterations, fine.converged};
}

}  // namespace

void validate_config(const OptimizerConfig& cfg) {
  auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (cfg.points_per_edge < 0) throw DomainError("points_per_edge must be >= 0");
  if (!positive(cfg.penalty_init) || !(cfg.penalty_growth >= 1.0)) {
    throw DomainError("penalty_init must be positive and penalty_growth >= 1");
  }
  if (!positive(cfg.armijo) || cfg.armijo >= 1.0) throw DomainError("armijo must lie in (0,1)");
  if (!positive(cfg.backtrack_shrink) || cfg.backtrack_shrink >= 1.0) {
    throw DomainError("backtrack_shrink must lie in (0,1)");
  }
  if (!positive(cfg.constraint_tol) || !positive(cfg.gradient_tol)) {
    throw DomainError("tolerances must be positive");
  }
  if (cfg.max_outer_iterations < 1 || cfg.max_inner_iterations < 1) {
    throw DomainError("iteration limits must be positive");
  }
  if (cfg.history < 0 || !(cfg.jitter >= 0.0)) throw DomainError("history and jitter must be >= 0");
  if (cfg.max_newton_iterations < 1 || !positive(cfg.newton_switch_tol)) {
    throw DomainError("newton settings must be positive");
  }
}

double OptimizedPartition::max_abs_residual() const {
  double m = 0.0;
  for (double r : constraint_residuals) m = std::max(m, std::abs(r));
  return m;
}

OptimizedPartition optimize(const TopologySpec& spec, const OptimizerConfig& cfg) {
  validate_config(cfg);
  validate_topology(spec);
  for (const auto& e : spec.edges) {
    if (e.closed() && e.interior_points.value_or(cfg.points_per_edge) < 2) {
      throw DomainError("closed edge '" + e.name + "' needs at least 2 interior points");
    }
  }

  const Problem problem(spec, cfg);
  const std::size_t regions = problem.region_count();
  // The regions tile the polygon, so the last area follows from the others.
  const std::size_t constrained = regions > 1 ? regions - 1 : regions;
  const double tol = cfg.constraint_tol * spec.polygon.area();

  Vec x = problem.initial();
  problem.project(x);
  Vec lambda(constrained, 0.0);
  double mu = cfg.penalty_init;

  OptimizedPartition out;
  bool inner_ok = false;
  for (int outer = 1; outer <= cfg.max_outer_iterations; ++outer) {
    if (outer > 1) problem.redistribute(x);
    const Merit merit{problem, constrained, lambda, mu};
    const InnerResult inner = minimise(merit, problem, x, cfg);
    out.inner_iterations += inner.iterations;
    out.outer_iterations = outer;
    inner_ok = inner.converged;

    double worst = 0.0;
    for (std::size_t r = 0; r < regions; ++r) {
      const double c = problem.area(r, x, nullptr, 0.0) - problem.target(r);
      if (r < constrained) lambda[r] += mu * c / problem.target(r);
      worst = std::max(worst, std::abs(c));
    }
    if (worst <= tol && inner_ok) break;
    mu *= cfg.penalty_growth;
  }

  // Results and a warm-start copy of the topology.
  out.topology = spec;
  out.total_length = problem.length(x, nullptr);
  for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
    const Point2 p = problem.node_position(i, x);
    out.node_positions.push_back(p);
    std::visit(Overloaded{
                   [&](BoundaryAnchor& a) {
                     const Point2 base = spec.polygon.vertex(a.side);
                     const Point2 dir = spec.polygon.vertex(a.side + 1) - base;
                     a.t = std::clamp(dot(p - base, dir) / dot(dir, dir), 0.0, 1.0);
                   },
                   [&](Junction& j) { j.position = p; },
               },
               out.topology.nodes[i].kind);
  }
  for (std::size_t e = 0; e < spec.edges.size(); ++e) {
    auto poly = problem.edge_polyline(e, x);
    auto& edge = out.topology.edges[e];
    edge.interior_points = problem.interior_count(e);
    edge.initial_points.assign(poly.begin() + 1, poly.end() - 1);
    out.edge_polylines.push_back(std::move(poly));
  }
  for (std::size_t r = 0; r < regions; ++r) {
    const double a = problem.area(r, x, nullptr, 0.0);
    out.region_areas.push_back(a);
    out.constraint_residuals.push_back(a - problem.target(r));
    // Back to length per unit area, the scale of d(length)/d(area).
    out.multiplier_estimates.push_back(r < constrained ? lambda[r] / problem.target(r) : 0.0);
  }
  for (std::size_t r = 0; r < regions; ++r) {
    for (std::size_t c = 0; c < spec.regions[r].components.size(); ++c) {
      for (const auto& w : problem.walks(r, c)) out.walk_corners.push_back(w.corners);
    }
  }
  out.converged = inner_ok && out.max_abs_residual() <= tol;
  return out;
}

std::vector<double> region_areas_via_loops(const OptimizedPartition& result) {
  const auto& spec = result.topology;
  const auto& poly = spec.polygon;
  const int n = poly.n();
  auto param = [&](int node) {
    const auto& a = std::get<BoundaryAnchor>(spec.nodes[static_cast<std::size_t>(node)].kind);
    return a.side + a.t;
  };
  std::vector<double> areas;
  std::size_t walk_index = 0;
  for (const auto& region : spec.regions) {
    double total = 0.0;
    for (const auto& component : region.components) {
      BoundaryLoop loop;
      for (const auto& step : component) {
        std::visit(
            Overloaded{
                [&](const EdgeStep& s) {
                  auto pts = result.edge_polylines[static_cast<std::size_t>(s.edge)];
                  if (!s.forward) std::reverse(pts.begin(), pts.end());
                  loop.pieces.push_back(CurveChain{std::move(pts)});
                },
                [&](const WalkStep& s) {
                  const auto& from =
                      std::get<BoundaryAnchor>(spec.nodes[static_cast<std::size_t>(s.from_node)].kind);
                  const auto& to =
                      std::get<BoundaryAnchor>(spec.nodes[static_cast<std::size_t>(s.to_node)].kind);
                  int steps = 0;
                  if (walk_index < result.walk_corners.size()) {
                    steps = result.walk_corners[walk_index++];
                  } else {
                    steps = ((to.side - from.side) % n + n) % n;
                    if (steps == 0 && to.t < from.t) steps = n;
                  }
                  loop.pieces.push_back(
                      PolygonWalk{poly, param(s.from_node), from.side + steps + to.t});
                },
                [&](const FullBoundaryStep&) {
                  loop.pieces.push_back(PolygonWalk{poly, 0.0, static_cast<double>(n)});
                },
            },
            step);
      }
      total += loop_area(loop);
    }
    areas.push_back(total);
  }
  return areas;
}

ArcCheckReport arc_property_check(const OptimizedPartition& result, double tol) {
  ArcCheckReport report;
  for (std::size_t e = 0; e < result.edge_polylines.size(); ++e) {
    const auto& pts = result.edge_polylines[e];
    EdgeArcCheck check;
    check.edge = static_cast<int>(e);
    check.interior_points = static_cast<int>(pts.size()) - 2;
    for (std::size_t i = 1; i < pts.size(); ++i) check.edge_length += distance(pts[i - 1], pts[i]);
    // A closed edge repeats its node; drop the duplicate for fitting.
    std::vector<Point2> fit_pts = pts;
    if (fit_pts.size() > 2 && fit_pts.front() == fit_pts.back()) fit_pts.pop_back();
    check.line_residual = fit_pts.size() >= 2 ? line_fit(fit_pts).residual : 0.0;
    check.straight = check.line_residual < 1e-6;

    std::vector<double> kappa;
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
      const Point2 a = pts[i - 1], b = pts[i], c = pts[i + 1];
      const double denom = distance(a, b) * distance(b, c) * distance(a, c);
      if (denom > 0.0) kappa.push_back(2.0 * cross(b - a, c - b) / denom);
    }
    if (!kappa.empty()) {
      check.curvature_mean = std::accumulate(kappa.begin(), kappa.end(), 0.0) / kappa.size();
      for (double k : kappa) {
        check.curvature_spread = std::max(check.curvature_spread, std::abs(k - check.curvature_mean));
      }
    }

    if (check.interior_points >= 8) {
      check.checked = true;
      check.circle = circle_fit(fit_pts);
      check.passed = check.circle.residual <= tol * check.edge_length;
    }
    report.passed = report.passed && check.passed;
    report.edges.push_back(check);
  }
  return report;
}

}  // namespace equisplit
