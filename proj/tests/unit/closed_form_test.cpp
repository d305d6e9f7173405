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
#include "equisplit/geometry.hpp"

namespace equisplit {
namespace {

// Reference values from tests/oracles/closed_form_oracle.py (50 digits).
constexpr double kExact23 = 0.67338684354429918;
constexpr double kExact33 = 0.86602540378443865;
constexpr double kLower23 = 0.14945416618690159;
constexpr double kLower33 = 0.52016053063289754;
constexpr double kLower43 = 0.83268045233432124;
constexpr double kLower63 = 1.356938420591872;
constexpr double kLower34 = 1.0699801238394655;
constexpr double kLower44 = 1.5449077018110321;
constexpr double kBracketLo3 = 1.1663402261671606;
constexpr double kBracketHi3 = 1.224744871391589;
constexpr double kBracketLo4 = 1.772453850905516;
constexpr double kBracketHi4 = 1.8612097182041992;
constexpr double kSectorRadius = 0.64303706857874378;    // A = sqrt3/8
constexpr double kSectorLen24 = 0.38878007538905354;     // A = sqrt3/24
constexpr double kChordLen12 = 0.95231280686395735;      // A = sqrt3/12
constexpr double kChordR12 = 0.30313058116423249;
constexpr double kChordLen4 = 1.6494541661869016;        // A = sqrt3/4
constexpr double kChordR4 = 0.52503756790433199;
constexpr double kCircleLen8 = 1.6494541661869016;       // A = sqrt3/8
constexpr double kCircleLen12 = 1.3467736870885984;      // A = sqrt3/12
constexpr double kSimplex3 = 0.81649658092772603;
constexpr double kConj43 = 1.428469210295936;
constexpr double kConj63 = 2.6506435635919399;
constexpr double kConj63Alt = 2.6240038009098662;
constexpr double kFamily54 = 2.52394331793248;
constexpr double kFamily65 = 3.7458125620401316;
constexpr double kFamily76 = 5.1961524227066319;

const double kSqrt3 = std::sqrt(3.0);

TEST(ExactInfimum, KnownValues) {
  EXPECT_NEAR(*exact_infimum(2, 3), kExact23, 1e-15);
  EXPECT_NEAR(*exact_infimum(3, 3), kExact33, 1e-15);
  EXPECT_EQ(*exact_infimum(1, 5), 0.0);
  EXPECT_FALSE(exact_infimum(4, 3).has_value());
  EXPECT_FALSE(exact_infimum(2, 4).has_value());
}

TEST(ExactInfimum, DomainErrors) {
  EXPECT_THROW(exact_infimum(0, 3), DomainError);
  EXPECT_THROW(exact_infimum(2, 2), DomainError);
}

TEST(LowerBound, ReferenceValues) {
  EXPECT_NEAR(lower_bound(2, 3), kLower23, 1e-14);
  EXPECT_NEAR(lower_bound(3, 3), kLower33, 1e-14);
  EXPECT_NEAR(lower_bound(4, 3), kLower43, 1e-14);
  EXPECT_NEAR(lower_bound(6, 3), kLower63, 1e-14);
  EXPECT_NEAR(lower_bound(3, 4), kLower34, 1e-14);
  EXPECT_NEAR(lower_bound(4, 4), kLower44, 1e-14);
  EXPECT_EQ(lower_bound(1, 3), 0.0) << "raw expression is negative";
  EXPECT_THROW(lower_bound(0, 3), DomainError);
  EXPECT_THROW(lower_bound(3, 1), DomainError);
}

TEST(AsymptoticBracket, ReferenceValues) {
  EXPECT_NEAR(asymptotic_bracket(6).upper_const, 3.0, 1e-12);
  EXPECT_NEAR(asymptotic_bracket(3).lower_const, kBracketLo3, 1e-14);
  EXPECT_NEAR(asymptotic_bracket(3).upper_const, kBracketHi3, 1e-14);
  EXPECT_NEAR(asymptotic_bracket(4).lower_const, kBracketLo4, 1e-14);
  EXPECT_NEAR(asymptotic_bracket(4).upper_const, kBracketHi4, 1e-14);
  EXPECT_THROW(asymptotic_bracket(2), DomainError);
}

TEST(SectorMinimum, ReferenceValues) {
  const auto s = sector_minimum(kSqrt3 / 8.0);
  EXPECT_NEAR(s.radius, kSectorRadius, 1e-14);
  EXPECT_NEAR(s.length, kExact23, 1e-14);
  const auto unit = sector_minimum(kPi / 6.0);
  EXPECT_NEAR(unit.radius, 1.0, 1e-15);
  EXPECT_NEAR(unit.length, kPi / 3.0, 1e-15);
  EXPECT_NEAR(sector_minimum(kSqrt3 / 24.0).length, kSectorLen24, 1e-14);
  EXPECT_NEAR(3.0 * sector_minimum(kSqrt3 / 24.0).length, kBracketLo3, 1e-14);
  EXPECT_THROW(sector_minimum(0.0), DomainError);
  EXPECT_THROW(sector_minimum(-1.0), DomainError);
}

TEST(ChordSegmentMinimum, ReferenceValues) {
  const auto c = chord_segment_minimum(kSqrt3 / 12.0);
  EXPECT_NEAR(c.length, kChordLen12, 1e-14);
  EXPECT_NEAR(c.r, kChordR12, 1e-14);
  EXPECT_EQ(c.r, c.d);
  EXPECT_GT(c.length, kExact33);
  const auto unit = chord_segment_minimum(kPi / 2.0);
  EXPECT_NEAR(unit.r, 1.0, 1e-15);
  EXPECT_NEAR(unit.length, kPi, 1e-15);
  const auto quarter = chord_segment_minimum(kSqrt3 / 4.0);
  EXPECT_NEAR(quarter.r, kChordR4, 1e-14);
  EXPECT_NEAR(quarter.length, kChordLen4, 1e-14);
  EXPECT_THROW(chord_segment_minimum(0.0), DomainError);
}

TEST(CircleLength, ReferenceValues) {
  EXPECT_NEAR(circle_isoperimetric_length(kPi), 2.0 * kPi, 1e-14);
  EXPECT_NEAR(circle_isoperimetric_length(kSqrt3 / 8.0), kCircleLen8, 1e-14);
  EXPECT_NEAR(circle_isoperimetric_length(kSqrt3 / 8.0), std::sqrt(kSqrt3 * kPi / 2.0), 1e-14);
  EXPECT_NEAR(circle_isoperimetric_length(kSqrt3 / 12.0), kCircleLen12, 1e-14);
  EXPECT_THROW(circle_isoperimetric_length(0.0), DomainError);
}

TEST(SimplexDistanceSum, ReferenceValues) {
  EXPECT_NEAR(simplex_distance_sum({2, 1.0}), kSqrt3 / 2.0, 1e-15);
  EXPECT_NEAR(simplex_distance_sum({3, 1.0}), kSimplex3, 1e-15);
  EXPECT_NEAR(simplex_distance_sum({2, 2.0}), kSqrt3, 1e-15);
  EXPECT_NEAR(simplex_distance_sum({1, 1.0}), 1.0, 1e-15);
  EXPECT_THROW(simplex_distance_sum({0, 1.0}), DomainError);
  EXPECT_THROW(simplex_distance_sum({2, 0.0}), DomainError);
}

TEST(ConjectureTable, Entries) {
  const auto table = conjecture_table(3, 6);
  auto find = [&](int m, int n, const std::string& id) -> const ConjectureEntry* {
    for (const auto& e : table) {
      if (e.m == m && e.n == n && e.formula_id == id) return &e;
    }
    return nullptr;
  };
  ASSERT_NE(find(4, 3, "three-corner-arcs"), nullptr);
  EXPECT_NEAR(find(4, 3, "three-corner-arcs")->value, kConj43, 1e-14);
  ASSERT_NE(find(6, 3, "six-part-triangle"), nullptr);
  EXPECT_NEAR(find(6, 3, "six-part-triangle")->value, kConj63, 1e-14);
  EXPECT_FALSE(find(6, 3, "six-part-triangle")->note.empty());
  EXPECT_NEAR(six_part_triangle_alternative(), kConj63Alt, 1e-14);
  EXPECT_NEAR(find(3, 4, "square-t-split")->value, 5.0 / 3.0, 1e-15);
  EXPECT_NEAR(find(4, 4, "square-cross")->value, 2.0, 1e-15);
  EXPECT_NEAR(find(4, 3, "annulus-family")->value, 1.5, 1e-14);
  EXPECT_NEAR(find(5, 4, "annulus-family")->value, kFamily54, 1e-13);
  EXPECT_NEAR(find(6, 5, "annulus-family")->value, kFamily65, 1e-13);
  EXPECT_NEAR(find(7, 6, "annulus-family")->value, kFamily76, 1e-13);
  EXPECT_EQ(find(8, 7, "annulus-family"), nullptr);
  EXPECT_THROW(conjecture_table(2, 5), DomainError);
}

TEST(BoundsReport, PopulatesFields) {
  const auto r23 = make_bounds_report(2, 3);
  EXPECT_NEAR(*r23.exact_value, kExact23, 1e-15);
  EXPECT_FALSE(r23.conjectured_value.has_value());
  EXPECT_TRUE(r23.flags.empty());

  const auto r44 = make_bounds_report(4, 4);
  EXPECT_NEAR(r44.lower_bound, kLower44, 1e-14);
  EXPECT_NEAR(*r44.conjectured_value, 2.0, 1e-15);
  EXPECT_FALSE(r44.exact_value.has_value());

  const auto r43 = make_bounds_report(4, 3);
  EXPECT_NEAR(*r43.conjectured_value, kConj43, 1e-14) << "smaller of the two (4,3) entries";

  const auto r63 = make_bounds_report(6, 3);
  EXPECT_NE(std::find(r63.flags.begin(), r63.flags.end(), "conjecture-disputed"), r63.flags.end());
}

// ----------------------------------------------------------- properties

TEST(ClosedFormProperty, LowerBoundBelowEveryKnownValue) {
  const auto table = conjecture_table(3, 12);
  for (int n = 3; n <= 12; ++n) {
    for (int m = 1; m <= 64; ++m) {
      const double lb = lower_bound(m, n);
      ASSERT_GE(lb, 0.0);
      if (const auto e = exact_infimum(m, n)) ASSERT_LE(lb, *e + 1e-12) << m << "," << n;
      for (const auto& c : table) {
        if (c.m == m && c.n == n) ASSERT_LE(lb, c.value + 1e-12) << m << "," << n;
      }
      const auto report = make_bounds_report(m, n);
      ASSERT_FALSE(report.exact_value && report.conjectured_value);
      if (report.conjectured_value) ASSERT_LE(report.lower_bound, *report.conjectured_value + 1e-12);
    }
  }
}

TEST(ClosedFormProperty, BracketRatioIsConstant) {
  const double expected = std::sqrt(kPi / (2.0 * kSqrt3));
  for (int n = 3; n <= 500; ++n) {
    const auto b = asymptotic_bracket(n);
    ASSERT_LT(b.lower_const, b.upper_const);
    ASSERT_NEAR(b.lower_const / b.upper_const, expected, 1e-12) << "n=" << n;
  }
}

TEST(ClosedFormProperty, SectorAndChordLengthsScale) {
  for (int i = 1; i <= 200; ++i) {
    const double area = 0.01 * i * i;
    const double s = sector_minimum(area).length;
    const double c = chord_segment_minimum(area).length;
    ASSERT_NEAR(3.0 * s * s, c * c, 1e-12 * c * c) << "A=" << area;
    ASSERT_NEAR(sector_minimum(area).length, kPi / 3.0 * sector_minimum(area).radius, 1e-12);
    ASSERT_NEAR(c, kPi * chord_segment_minimum(area).r, 1e-12);
  }
}

TEST(ClosedFormProperty, SimplexSumIsLinearInEdge) {
  for (int dim = 1; dim <= 10; ++dim) {
    const double unit = simplex_distance_sum({dim, 1.0});
    for (double edge : {0.5, 2.0, 7.25}) {
      ASSERT_NEAR(simplex_distance_sum({dim, edge}), edge * unit, 1e-14 * edge);
    }
  }
}

}  // namespace
}  // namespace equisplit
