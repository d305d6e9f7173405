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

#include "equisplit/geometry.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <limits>
#include <sstream>

#include "equisplit/errors.hpp"

namespace equisplit {

RegularPolygon::RegularPolygon(int n) : n_(n) {
  if (n < 3) {
    throw DomainError("regular polygon needs n >= 3, got " + std::to_string(n));
  }
  const double half = kPi / n;
  circumradius_ = 0.5 / std::sin(half);
  apothem_ = 0.5 / std::tan(half);
  area_ = 0.25 * n / std::tan(half);
  vertices_.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = -0.5 * kPi - half + 2.0 * kPi * k / n;
    vertices_.push_back({circumradius_ * std::cos(angle), circumradius_ * std::sin(angle)});
  }
  // Pin side 0 exactly: both endpoints at y = -apothem, x = -/+ 1/2.
  vertices_[0] = {-0.5, -apothem_};
  vertices_[1] = {0.5, -apothem_};
}

Point2 RegularPolygon::vertex(int k) const {
  const int i = ((k % n_) + n_) % n_;
  return vertices_[static_cast<std::size_t>(i)];
}

Point2 RegularPolygon::side_direction(int k) const {
  const double angle = 2.0 * kPi * (((k % n_) + n_) % n_) / n_;
  return {std::cos(angle), std::sin(angle)};
}

Point2 RegularPolygon::side_midpoint(int k) const {
  return 0.5 * (vertex(k) + vertex(k + 1));
}

Point2 RegularPolygon::boundary_point(double s) const {
  const double side = std::floor(s);
  const double t = s - side;
  const int k = static_cast<int>(side);
  if (t == 0.0) return vertex(k);
  return vertex(k) + t * (vertex(k + 1) - vertex(k));
}

double RegularPolygon::inner_distance(Point2 p, int k) const {
  const Point2 a = vertex(k);
  const Point2 dir = side_direction(k);
  return cross(dir, p - a);
}

RegularPolygon build_polygon(int n) { return RegularPolygon(n); }

ArcSpec make_arc(Point2 center, double radius, double start_angle, double end_angle) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("arc radius must be positive and finite");
  }
  const double sweep = end_angle - start_angle;
  if (!(sweep > 0.0) || sweep > 2.0 * kPi + 1e-15) {
    throw DomainError("arc sweep must lie in (0, 2pi]");
  }
  if (!is_finite(center)) throw DomainError("arc center must be finite");
  return ArcSpec{center, radius, start_angle, end_angle};
}

double CurveChain::length() const {
  double total = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) total += distance(points[i - 1], points[i]);
  return total;
}

CurveChain make_chain(std::vector<Point2> points) {
  if (points.size() < 2) throw DomainError("curve chain needs at least two points");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i] == points[i - 1]) {
      throw DomainError("curve chain has repeated consecutive point at index " +
                        std::to_string(i));
    }
  }
  for (const auto& p : points) {
    if (!is_finite(p)) throw DomainError("curve chain point is not finite");
  }
  return CurveChain{std::move(points)};
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Polygon vertices strictly between the endpoints of a walk, in walk order.
std::vector<Point2> walk_corners(const PolygonWalk& w) {
  std::vector<Point2> out;
  if (w.to > w.from) {
    for (double k = std::floor(w.from) + 1.0; k < w.to; k += 1.0) {
      out.push_back(w.polygon.vertex(static_cast<int>(k)));
    }
  } else if (w.to < w.from) {
    for (double k = std::ceil(w.from) - 1.0; k > w.to; k -= 1.0) {
      out.push_back(w.polygon.vertex(static_cast<int>(k)));
    }
  }
  return out;
}

}  // namespace

Point2 start_point(const LoopPiece& piece) {
  return std::visit(
      Overloaded{
          [](const Segment& s) { return s.a; },
          [](const ArcPiece& a) { return a.reversed ? a.arc.end_point() : a.arc.start_point(); },
          [](const CurveChain& c) { return c.points.front(); },
          [](const PolygonWalk& w) { return w.polygon.boundary_point(w.from); },
      },
      piece);
}

Point2 end_point(const LoopPiece& piece) {
  return std::visit(
      Overloaded{
          [](const Segment& s) { return s.b; },
          [](const ArcPiece& a) { return a.reversed ? a.arc.start_point() : a.arc.end_point(); },
          [](const CurveChain& c) { return c.points.back(); },
          [](const PolygonWalk& w) { return w.polygon.boundary_point(w.to); },
      },
      piece);
}

double piece_length(const LoopPiece& piece) {
  return std::visit(
      Overloaded{
          [](const Segment& s) { return s.length(); },
          [](const ArcPiece& a) { return a.arc.length(); },
          [](const CurveChain& c) { return c.length(); },
          [](const PolygonWalk& w) { return std::abs(w.to - w.from); },
      },
      piece);
}

double closure_gap(const BoundaryLoop& loop) {
  const auto& pieces = loop.pieces;
  if (pieces.empty()) return 0.0;
  double gap = 0.0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& next = pieces[(i + 1) % pieces.size()];
    gap = std::max(gap, distance(end_point(pieces[i]), start_point(next)));
  }
  return gap;
}

double loop_area(const BoundaryLoop& loop, double closure_tol) {
  if (loop.pieces.empty()) throw ValidationError("boundary loop has no pieces", 0.0);
  const double gap = closure_gap(loop);
  if (!(gap <= closure_tol)) {
    std::ostringstream msg;
    msg << "boundary loop does not close: gap " << gap << " exceeds " << closure_tol;
    throw ValidationError(msg.str(), gap);
  }
  // Twice the signed area, accumulated piece by piece over the directed path.
  double twice = 0.0;
  auto edge = [&twice](Point2 a, Point2 b) { twice += cross(a, b); };
  for (const auto& piece : loop.pieces) {
    std::visit(Overloaded{
                   [&](const Segment& s) { edge(s.a, s.b); },
                   [&](const ArcPiece& a) {
                     const Point2 p = a.reversed ? a.arc.end_point() : a.arc.start_point();
                     const Point2 q = a.reversed ? a.arc.start_point() : a.arc.end_point();
                     edge(p, q);
                     const double sweep = a.arc.sweep();
                     const double seg = a.arc.radius * a.arc.radius * (sweep - std::sin(sweep));
                     twice += a.reversed ? -seg : seg;
                   },
                   [&](const CurveChain& c) {
                     for (std::size_t i = 1; i < c.points.size(); ++i) {
                       edge(c.points[i - 1], c.points[i]);
                     }
                   },
                   [&](const PolygonWalk& w) {
                     Point2 prev = w.polygon.boundary_point(w.from);
                     for (Point2 corner : walk_corners(w)) {
                       edge(prev, corner);
                       prev = corner;
                     }
                     edge(prev, w.polygon.boundary_point(w.to));
                   },
               },
               piece);
  }
  // Consecutive piece endpoints may differ by up to closure_tol; bridge them.
  for (std::size_t i = 0; i < loop.pieces.size(); ++i) {
    const auto& next = loop.pieces[(i + 1) % loop.pieces.size()];
    edge(end_point(loop.pieces[i]), start_point(next));
  }
  return 0.5 * twice;
}

double segment_area(double r, double d) {
  if (!(r >= 0.0) || !(d >= 0.0) || d > r || !std::isfinite(r)) {
    throw DomainError("segment_area requires 0 <= d <= r");
  }
  if (r == 0.0) return 0.0;
  return r * r * std::asin(d / r) - d * std::sqrt(std::max(0.0, r * r - d * d));
}

double shoelace_area(std::span<const Point2> ring) {
  if (ring.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    twice += cross(ring[i], ring[(i + 1) % ring.size()]);
  }
  return 0.5 * twice;
}

LineFit line_fit(std::span<const Point2> points) {
  if (points.size() < 2) throw DomainError("line_fit needs at least two points");
  Point2 c{};
  for (auto p : points) c = c + p;
  c = (1.0 / static_cast<double>(points.size())) * c;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (auto p : points) {
    const Point2 d = p - c;
    sxx += d.x * d.x;
    sxy += d.x * d.y;
    syy += d.y * d.y;
  }
  // Principal axis of the 2x2 scatter matrix.
  const double angle = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
  const Point2 dir{std::cos(angle), std::sin(angle)};
  double residual = 0.0;
  for (auto p : points) residual = std::max(residual, std::abs(cross(dir, p - c)));
  return {c, dir, residual};
}

CircleFit circle_fit(std::span<const Point2> points) {
  if (points.size() < 3) throw DomainError("circle_fit needs at least three points");
  const LineFit line = line_fit(points);
  double extent = 0.0;
  for (auto p : points) extent = std::max(extent, distance(p, line.centroid));
  if (line.residual <= 1e-12 * std::max(1.0, extent)) {
    return {line.centroid, std::numeric_limits<double>::infinity(), line.residual, true};
  }

  // Kasa fit on centred, scaled coordinates:
  //   u^2 + v^2 + D u + E v + F = 0  solved in the least-squares sense.
  const double scale = extent > 0.0 ? extent : 1.0;
  const auto rows = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd design(rows, 3);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Point2 q = (1.0 / scale) * (points[static_cast<std::size_t>(i)] - line.centroid);
    design(i, 0) = q.x;
    design(i, 1) = q.y;
    design(i, 2) = 1.0;
    rhs(i) = -(q.x * q.x + q.y * q.y);
  }
  const Eigen::Vector3d sol = design.colPivHouseholderQr().solve(rhs);
  const Point2 center_local{-0.5 * sol(0), -0.5 * sol(1)};
  const double r2 = dot(center_local, center_local) - sol(2);
  if (!(r2 > 0.0)) {
    return {line.centroid, std::numeric_limits<double>::infinity(), line.residual, true};
  }
  CircleFit fit;
  fit.center = line.centroid + scale * center_local;
  fit.radius = scale * std::sqrt(r2);
  for (auto p : points) {
    fit.residual = std::max(fit.residual, std::abs(distance(p, fit.center) - fit.radius));
  }
  return fit;
}

Location point_in_polygon(Point2 p, const RegularPolygon& poly) {
  const int n = poly.n();
  for (int k = 0; k < n; ++k) {
    const Point2 a = poly.vertex(k);
    const Point2 b = poly.vertex(k + 1);
    const Point2 ab = b - a;
    const double t = std::clamp(dot(p - a, ab) / dot(ab, ab), 0.0, 1.0);
    if (distance(p, a + t * ab) <= kBoundaryTol) return Location::kBoundary;
  }
  bool inside = false;
  for (int k = 0; k < n; ++k) {
    const Point2 a = poly.vertex(k);
    const Point2 b = poly.vertex(k + 1);
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside ? Location::kInside : Location::kOutside;
}

}  // namespace equisplit
