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
#include <vector>

namespace equisplit {

/// Area (n/4)·cot(pi/n) of the unit-side regular n-gon.
double polygon_area(int n);

/// Proven infimum of the equal-area split length, when known: the two- and
/// three-part splits of the triangle, and 0 for m = 1. Throws DomainError for
/// m < 1 or n < 3.
std::optional<double> exact_infimum(int m, int n);

/// Isoperimetric lower bound max(0, (sqrt(m n pi cot(pi/n)) - n) / 2).
double lower_bound(int m, int n);

struct AsymptoticBracket {
  double lower_const = 0.0;  ///< (1/2) sqrt(n pi cot(pi/n))
  double upper_const = 0.0;  ///< sqrt((sqrt3/2) n cot(pi/n))
};

/// Per-sqrt(m) constants bracketing the large-m split length.
AsymptoticBracket asymptotic_bracket(int n);

struct SectorMinimum {
  double radius = 0.0;
  double length = 0.0;
};

/// Shortest curve cutting area A from a pi/3 corner: the vertex-centred arc.
SectorMinimum sector_minimum(double area);

struct ChordSegmentMinimum {
  double r = 0.0;
  double d = 0.0;  ///< half chord
  double length = 0.0;
};

/// Shortest arc that, together with a free chord, encloses area A: the
/// semicircle r = d.
ChordSegmentMinimum chord_segment_minimum(double area);

/// Perimeter 2 sqrt(pi A) of the circle of area A.
double circle_isoperimetric_length(double area);

struct SimplexSpec {
  int dim = 2;
  double edge = 1.0;
};

/// Sum of distances from any interior point of a regular simplex to its
/// facets: sqrt((n+1)/(2n)) * edge.
double simplex_distance_sum(const SimplexSpec& spec);

struct ConjectureEntry {
  int m = 0;
  int n = 0;
  double value = 0.0;
  std::string formula_id;
  std::string note;  ///< empty unless the value carries a caveat
};

/// Conjectured (not proven) split lengths, including the annulus family
/// l_{n+1,n} for n in [family_n_min, family_n_max].
std::vector<ConjectureEntry> conjecture_table(int family_n_min = 3, int family_n_max = 12);

/// Alternative closed form printed for the six-part triangle split; it
/// disagrees with the table value and is kept only for reporting.
double six_part_triangle_alternative();

struct BoundsReport {
  int m = 0;
  int n = 0;
  double lower_bound = 0.0;
  double asymptotic_lower_const = 0.0;
  double asymptotic_upper_const = 0.0;
  std::optional<double> exact_value;
  std::optional<double> conjectured_value;
  std::optional<double> best_construction_length;
  std::vector<std::string> flags;
};

/// Everything the closed forms know about (m, n). The construction length is
/// left empty; see attach_best_construction().
BoundsReport make_bounds_report(int m, int n);

}  // namespace equisplit
