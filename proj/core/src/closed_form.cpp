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

#include "equisplit/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "equisplit/errors.hpp"
#include "equisplit/geometry.hpp"

namespace equisplit {

namespace {

double cot(double x) { return std::cos(x) / std::sin(x); }

void require_mn(int m, int n) {
  if (m < 1) throw DomainError("part count m must be >= 1, got " + std::to_string(m));
  if (n < 3) throw DomainError("polygon side count n must be >= 3, got " + std::to_string(n));
}

void require_positive_area(double area) {
  if (!(area > 0.0) || !std::isfinite(area)) {
    throw DomainError("area must be positive and finite");
  }
}

const double kSqrt3 = std::sqrt(3.0);

double annulus_family(int n) {
  const double inner = std::sqrt(1.0 / (n + 1));
  const double half = kPi / n;
  return n * inner + 0.5 * n * (std::cos(half) - inner) / std::sin(half);
}

}  // namespace

double polygon_area(int n) {
  if (n < 3) throw DomainError("polygon side count n must be >= 3");
  return 0.25 * n * cot(kPi / n);
}

std::optional<double> exact_infimum(int m, int n) {
  require_mn(m, n);
  if (m == 1) return 0.0;
  if (n == 3 && m == 2) return std::sqrt(kSqrt3 * kPi / 12.0);
  if (n == 3 && m == 3) return kSqrt3 / 2.0;
  return std::nullopt;
}

double lower_bound(int m, int n) {
  require_mn(m, n);
  const double raw = 0.5 * (std::sqrt(m * n * kPi * cot(kPi / n)) - n);
  return std::max(0.0, raw);
}

AsymptoticBracket asymptotic_bracket(int n) {
  if (n < 3) throw DomainError("polygon side count n must be >= 3");
  const double c = n * cot(kPi / n);
  return {0.5 * std::sqrt(kPi * c), std::sqrt(0.5 * kSqrt3 * c)};
}

SectorMinimum sector_minimum(double area) {
  require_positive_area(area);
  const double radius = std::sqrt(6.0 * area / kPi);
  return {radius, kPi / 3.0 * radius};
}

ChordSegmentMinimum chord_segment_minimum(double area) {
  require_positive_area(area);
  const double r = std::sqrt(2.0 * area / kPi);
  return {r, r, kPi * r};
}

double circle_isoperimetric_length(double area) {
  require_positive_area(area);
  return 2.0 * std::sqrt(kPi * area);
}

double simplex_distance_sum(const SimplexSpec& spec) {
  if (spec.dim < 1) throw DomainError("simplex dimension must be >= 1");
  if (!(spec.edge > 0.0) || !std::isfinite(spec.edge)) {
    throw DomainError("simplex edge must be positive");
  }
  return std::sqrt((spec.dim + 1.0) / (2.0 * spec.dim)) * spec.edge;
}

std::vector<ConjectureEntry> conjecture_table(int family_n_min, int family_n_max) {
  if (family_n_min < 3) throw DomainError("annulus family starts at n = 3");
  std::vector<ConjectureEntry> out;
  out.push_back({4, 3, std::sqrt(3.0 * kSqrt3 * kPi / 8.0), "three-corner-arcs", ""});
  out.push_back({6, 3,
                 0.5 * std::sqrt(kSqrt3 * kPi) + 1.5 * (kSqrt3 - std::sqrt(kSqrt3 / kPi)),
                 "six-part-triangle",
                 "upper-bound expression; a second printed form gives a smaller value"});
  out.push_back({3, 4, 5.0 / 3.0, "square-t-split", ""});
  out.push_back({4, 4, 2.0, "square-cross", ""});
  for (int n = family_n_min; n <= family_n_max; ++n) {
    out.push_back({n + 1, n, annulus_family(n), "annulus-family", ""});
  }
  return out;
}

double six_part_triangle_alternative() {
  return 0.5 * std::sqrt(3.0 * kPi) + kSqrt3 - 0.5 * std::sqrt(3.0 * kSqrt3 / kPi);
}

BoundsReport make_bounds_report(int m, int n) {
  require_mn(m, n);
  BoundsReport report;
  report.m = m;
  report.n = n;
  report.lower_bound = lower_bound(m, n);
  const auto bracket = asymptotic_bracket(n);
  report.asymptotic_lower_const = bracket.lower_const;
  report.asymptotic_upper_const = bracket.upper_const;
  report.exact_value = exact_infimum(m, n);
  if (!report.exact_value) {
    // Smallest conjectured value for this (m, n); entries are never proven.
    for (const auto& entry : conjecture_table(3, std::max(3, n))) {
      if (entry.m != m || entry.n != n) continue;
      if (!report.conjectured_value || entry.value < *report.conjectured_value) {
        report.conjectured_value = entry.value;
      }
      if (!entry.note.empty()) report.flags.push_back("conjecture-disputed");
    }
    if (report.conjectured_value) report.flags.push_back("conjectured-not-proven");
  }
  return report;
}

}  // namespace equisplit
