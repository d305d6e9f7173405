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

#include <gtest/gtest.h>

#include <cmath>

#include "equisplit/closed_form.hpp"
#include "equisplit/errors.hpp"
#include "equisplit/extremum.hpp"
#include "equisplit/geometry.hpp"

namespace equisplit {
namespace {

constexpr double kSectorRadius = 0.64303706857874378;  // A = sqrt3/8
constexpr double kChordR12 = 0.30313058116423249;      // A = sqrt3/12

const double kSqrt3 = std::sqrt(3.0);

TEST(SectorExtremum, ReferenceAreas) {
  for (double area : {kSqrt3 / 8.0, kSqrt3 / 12.0, kPi / 6.0, 1.0}) {
    const auto s = sector_extremum_solve(area);
    const double r = std::sqrt(6.0 * area / kPi);
    EXPECT_NEAR(s.a, r, 1e-10) << area;
    EXPECT_NEAR(s.b, r, 1e-10) << area;
    EXPECT_NEAR(s.r, r, 1e-10) << area;
    EXPECT_NEAR(1.0 + s.lambda * s.r, 0.0, 1e-10) << area;
    for (double f : sector_stationarity(area, {s.a, s.b, s.r, s.lambda})) EXPECT_LT(std::abs(f), 1e-10);
  }
  EXPECT_NEAR(sector_extremum_solve(kSqrt3 / 8.0).r, kSectorRadius, 1e-10);
  EXPECT_NEAR(sector_extremum_solve(kPi / 6.0).r, 1.0, 1e-10);
}

TEST(SegmentExtremum, ReferenceAreas) {
  for (double area : {kSqrt3 / 8.0, kSqrt3 / 12.0, kPi / 6.0, 1.0}) {
    const auto s = segment_extremum_solve(area);
    const double r = std::sqrt(2.0 * area / kPi);
    EXPECT_NEAR(s.r, r, 1e-10) << area;
    EXPECT_NEAR(s.d, r, 1e-10) << area;
    EXPECT_NEAR(s.arc_length(), std::sqrt(2.0 * area * kPi), 1e-10) << area;
    for (double f : segment_stationarity(area, {s.r, s.alpha, s.lambda})) EXPECT_LT(std::abs(f), 1e-10);
  }
  EXPECT_NEAR(segment_extremum_solve(kSqrt3 / 12.0).r, kChordR12, 1e-10);
  const auto unit = segment_extremum_solve(kPi / 2.0);
  EXPECT_NEAR(unit.r, 1.0, 1e-10);
  EXPECT_NEAR(unit.d, 1.0, 1e-10);
}

TEST(Extremum, SolutionsMatchClosedForms) {
  for (double area : {0.01, 0.3, 2.0, 10.0}) {
    EXPECT_NEAR(sector_extremum_solve(area).r, sector_minimum(area).radius, 1e-10 * std::sqrt(area));
    EXPECT_NEAR(segment_extremum_solve(area).arc_length(), chord_segment_minimum(area).length,
                1e-10 * std::sqrt(area));
  }
}

TEST(Extremum, RejectsBadInput) {
  EXPECT_THROW(sector_extremum_solve(0.0), DomainError);
  EXPECT_THROW(segment_extremum_solve(-1.0), DomainError);
  EXPECT_THROW(sector_extremum_solve(1.0, {-1.0, 1.0, 1.0, -1.0}), DomainError);
  EXPECT_THROW(segment_extremum_solve(1.0, {1.0, 4.0, -1.0}), DomainError);
}

TEST(Extremum, ConvergesFromOffsetStarts) {
  const double area = kSqrt3 / 8.0;
  const double r = std::sqrt(6.0 * area / kPi);
  for (double scale : {0.7, 0.9, 1.2, 1.5}) {
    const auto s = sector_extremum_solve(area, {scale * r, r / scale, r, -1.0});
    EXPECT_NEAR(s.r, r, 1e-10) << scale;
  }
}

}  // namespace
}  // namespace equisplit
