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

#include <cmath>
#include <span>
#include <variant>
#include <vector>

namespace equisplit {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Tolerance for head-to-tail chaining of loop pieces.
inline constexpr double kLoopClosureTol = 1e-9;
/// Tolerance for classifying a point as lying on the polygon boundary.
inline constexpr double kBoundaryTol = 1e-12;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend constexpr Point2 operator*(Point2 p, double s) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point2 a, Point2 b) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(b - a); }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Unit-side regular n-gon in canonical pose: centroid at the origin, side 0
/// horizontal at the bottom, vertices counterclockwise. Side k runs from
/// vertex k to vertex k+1 (indices mod n).
class RegularPolygon {
 public:
  explicit RegularPolygon(int n);

  int n() const noexcept { return n_; }
  const std::vector<Point2>& vertices() const noexcept { return vertices_; }
  double area() const noexcept { return area_; }
  double apothem() const noexcept { return apothem_; }
  double circumradius() const noexcept { return circumradius_; }
  double perimeter() const noexcept { return static_cast<double>(n_); }

  /// Vertex k, index taken mod n.
  Point2 vertex(int k) const;
  /// Unit direction of side k.
  Point2 side_direction(int k) const;
  /// Midpoint of side k.
  Point2 side_midpoint(int k) const;

  /// Point at boundary parameter s: floor(s) selects the side (mod n),
  /// the fractional part is the position along it. Arc length equals s.
  Point2 boundary_point(double s) const;

  /// Signed distance from p to the supporting line of side k, positive inside.
  double inner_distance(Point2 p, int k) const;

 private:
  int n_;
  std::vector<Point2> vertices_;
  double area_;
  double apothem_;
  double circumradius_;
};

RegularPolygon build_polygon(int n);

/// Circular arc swept counterclockwise from start_angle to end_angle.
struct ArcSpec {
  Point2 center;
  double radius = 0.0;
  double start_angle = 0.0;
  double end_angle = 0.0;

  double sweep() const { return end_angle - start_angle; }
  double length() const { return radius * sweep(); }
  Point2 point_at(double angle) const {
    return {center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)};
  }
  Point2 start_point() const { return point_at(start_angle); }
  Point2 end_point() const { return point_at(end_angle); }
};

/// Throws DomainError unless radius > 0 and 0 < sweep <= 2*pi.
ArcSpec make_arc(Point2 center, double radius, double start_angle, double end_angle);

struct Segment {
  Point2 a;
  Point2 b;

  double length() const { return distance(a, b); }
};

/// Polyline stand-in for a smooth curve.
struct CurveChain {
  std::vector<Point2> points;

  double length() const;
};

/// Throws DomainError if fewer than two points or a repeated consecutive point.
CurveChain make_chain(std::vector<Point2> points);

/// An arc traversed either along its sweep or against it.
struct ArcPiece {
  ArcSpec arc;
  bool reversed = false;
};

/// Portion of the polygon boundary from parameter `from` to `to`; the walk is
/// counterclockwise when to > from. Parameters are unwrapped, so (0, n) is
/// the full boundary.
struct PolygonWalk {
  RegularPolygon polygon;
  double from = 0.0;
  double to = 0.0;
};

using LoopPiece = std::variant<Segment, ArcPiece, CurveChain, PolygonWalk>;

struct BoundaryLoop {
  std::vector<LoopPiece> pieces;
};

Point2 start_point(const LoopPiece& piece);
Point2 end_point(const LoopPiece& piece);
double piece_length(const LoopPiece& piece);

/// Largest head-to-tail gap between consecutive pieces (including the
/// closing gap from the last piece back to the first).
double closure_gap(const BoundaryLoop& loop);

/// Signed area (positive for counterclockwise loops). Shoelace over piece
/// vertices plus the exact circular-segment term of every arc. Throws
/// ValidationError when the loop does not close within `closure_tol`.
double loop_area(const BoundaryLoop& loop, double closure_tol = kLoopClosureTol);

/// Area between a chord of half-length d and the minor arc of radius r.
double segment_area(double r, double d);

double shoelace_area(std::span<const Point2> ring);

struct CircleFit {
  Point2 center;
  /// +infinity when the points are collinear.
  double radius = 0.0;
  /// max | |p - center| - radius |, or the max distance to the best-fit line
  /// in the collinear case.
  double residual = 0.0;
  bool collinear = false;
};

/// Algebraic least-squares circle through at least three points.
CircleFit circle_fit(std::span<const Point2> points);

struct LineFit {
  Point2 centroid;
  Point2 direction;
  double residual = 0.0;  // max orthogonal distance
};

LineFit line_fit(std::span<const Point2> points);

enum class Location { kInside, kBoundary, kOutside };

Location point_in_polygon(Point2 p, const RegularPolygon& poly);

}  // namespace equisplit
