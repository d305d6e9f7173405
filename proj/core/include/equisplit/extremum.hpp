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

#include <array>

namespace equisplit {

/// Stationary point of the corner-sector problem: a cut of length f bounding,
/// together with the two sides of a pi/3 corner (lengths a and b from the
/// vertex), a region of area A. The cut is an arc of radius r over the chord
/// joining the two side points.
struct SectorExtremum {
  double a = 0.0;
  double b = 0.0;
  double r = 0.0;
  double lambda = 0.0;
  double residual = 0.0;  ///< max |equation| at the returned point
  int iterations = 0;
};

/// Gradient of the Lagrangian and the area constraint at x = (a, b, r, lambda).
std::array<double, 4> sector_stationarity(double area, const std::array<double, 4>& x);

/// Damped Newton on the four stationarity equations, started from
/// a = b = r = sqrt(A), lambda = -1/sqrt(A). Throws DomainError for A <= 0 and
/// ConvergenceError (with the iterate history) when Newton fails.
SectorExtremum sector_extremum_solve(double area);
SectorExtremum sector_extremum_solve(double area, const std::array<double, 4>& start);

/// Stationary point of the chord-and-arc problem: an arc of radius r over a
/// free chord of half-length d enclosing area A, with minimal arc length.
struct SegmentExtremum {
  double r = 0.0;
  double d = 0.0;
  double alpha = 0.0;  ///< half the subtended angle; d = r sin(alpha)
  double lambda = 0.0;
  double residual = 0.0;
  int iterations = 0;

  double arc_length() const { return 2.0 * r * alpha; }
};

/// Equations in (r, alpha, lambda): arc length 2 r alpha, area
/// r^2 (alpha - sin(alpha) cos(alpha)).
std::array<double, 3> segment_stationarity(double area, const std::array<double, 3>& x);

/// Started from r = d = sqrt(A). Same error behaviour as the sector solver.
SegmentExtremum segment_extremum_solve(double area);
SegmentExtremum segment_extremum_solve(double area, const std::array<double, 3>& start);

}  // namespace equisplit
