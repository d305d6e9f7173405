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

#include <algorithm>
#include <cmath>

#include "equisplit/closed_form.hpp"
#include "equisplit/errors.hpp"
#include "equisplit/hexpack.hpp"

namespace equisplit {
namespace {

const double kSqrt3 = std::sqrt(3.0);

// Counts and union perimeters from tests/oracles/hexpack_oracle.py (shapely
// containment plus single-use edge counting).
struct Frozen {
  int n;
  std::int64_t m;
  std::int64_t c;
  double perimeter_B;
};
constexpr Frozen kFrozen[] = {
    {3, 1, 0, 0.0},
    {4, 1, 0, 0.0},
    {4, 100, 77, 4.34282267581},
    {4, 1000, 941, 4.82624276847},
    {3, 500, 460, 3.83405790254},
    {5, 300, 259, 5.73188866624},
    {6, 10000, 9703, 7.86},
    {4, 10000, 9897, 4.92600172085},
};

TEST(HexPack, MatchesIndependentPacking) {
  for (const auto& f : kFrozen) {
    const auto r = pack_hexagons(f.n, f.m);
    EXPECT_EQ(r.embedded_count, f.c) << "n=" << f.n << " m=" << f.m;
    EXPECT_EQ(r.t, f.m - f.c);
    EXPECT_NEAR(r.perimeter_B, f.perimeter_B, 1e-9) << "n=" << f.n << " m=" << f.m;
  }
}

TEST(HexPack, SideAndCellArea) {
  const auto r = pack_hexagons(4, 100);
  EXPECT_NEAR(r.hex_side, 0.062040323940139973, 1e-15);
  EXPECT_NEAR(1.5 * kSqrt3 * r.hex_side * r.hex_side, 0.01, 1e-15);
}

TEST(HexPack, SingleCellCannotFitTriangle) {
  const auto r = pack_hexagons(3, 1);
  EXPECT_EQ(r.embedded_count, 0);
  EXPECT_EQ(r.t, 1);
}

TEST(HexPack, Errors) {
  EXPECT_THROW(pack_hexagons(2, 10), DomainError);
  EXPECT_THROW(pack_hexagons(4, 0), DomainError);
  try {
    pack_hexagons(4, kMaxHexCount + 1);
    FAIL();
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.limit(), kMaxHexCount);
  }
  EXPECT_THROW(ratio_series(4, {}), DomainError);
  EXPECT_THROW(ratio_series(4, {100, 100}), DomainError);
  EXPECT_THROW(ratio_series(4, {1000, 100}), DomainError);
}

TEST(HexPack, RasterLowerBoundOnCount) {
  // Cells whose centre is at least one circumradius h plus clearance inside
  // every side fit; a raster over the square minus a 2h margin bounds c below.
  const auto r = pack_hexagons(4, 10000);
  const double h = r.hex_side;
  const double inner = 1.0 - 4.0 * h;
  const double estimate = inner * inner / (1.5 * kSqrt3 * h * h);
  EXPECT_GE(static_cast<double>(r.embedded_count), 0.95 * estimate);
  EXPECT_GE(static_cast<double>(r.embedded_count) / 10000.0, 0.80);
}

TEST(HexPack, OffsetScanNeverLosesCells) {
  HexPackOptions scan;
  scan.offset_scan = true;
  for (int n : {3, 4, 5, 7}) {
    for (std::int64_t m : {10, 37, 200, 1500}) {
      const auto plain = pack_hexagons(n, m);
      const auto best = pack_hexagons(n, m, scan);
      EXPECT_GE(best.embedded_count, plain.embedded_count) << n << "," << m;
      EXPECT_EQ(embedded_centers(n, m, scan).size(), static_cast<std::size_t>(best.embedded_count));
    }
  }
}

TEST(HexPack, SeriesKeepsOrderAndMatchesSingleRuns) {
  const std::vector<std::int64_t> ms{100, 1000, 10000, 100000};
  const auto serial = ratio_series(4, ms, {}, 1);
  const auto threaded = ratio_series(4, ms, {}, 4);
  ASSERT_EQ(serial.size(), ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    EXPECT_EQ(serial[i].m, ms[i]);
    EXPECT_EQ(threaded[i].m, ms[i]);
    EXPECT_EQ(serial[i].ratio, threaded[i].ratio);
    EXPECT_EQ(serial[i].embedded_count, pack_hexagons(4, ms[i]).embedded_count);
  }
}

// ----------------------------------------------------------- properties

TEST(HexPackProperty, ResultIdentities) {
  for (int n = 3; n <= 9; ++n) {
    const double area = polygon_area(n);
    for (std::int64_t m : {1, 2, 7, 50, 333, 4000}) {
      const auto r = pack_hexagons(n, m);
      ASSERT_GE(r.embedded_count, 0);
      ASSERT_LE(r.embedded_count, m);
      ASSERT_NEAR(r.hex_side, std::sqrt(n / std::tan(kPi / n) / (6.0 * kSqrt3 * m)), 1e-12);
      ASSERT_NEAR(1.5 * kSqrt3 * r.hex_side * r.hex_side, area / m, 1e-12);
      ASSERT_NEAR(r.l_t, r.t * 2.0 * r.hex_side, 1e-12);
      ASSERT_NEAR(r.perimeter_B1, 6.0 * r.hex_side, 1e-15);
      ASSERT_NEAR(r.total_length,
                  r.l_t + 0.5 * r.embedded_count * 6.0 * r.hex_side + 0.5 * r.perimeter_B, 1e-12);
      ASSERT_NEAR(r.ratio, r.total_length / std::sqrt(static_cast<double>(m)), 1e-12);
    }
  }
}

TEST(HexPackProperty, CellsAreDisjointAndInside) {
  for (int n : {3, 4, 6}) {
    for (std::int64_t m : {50, 400, 1200}) {
      const auto r = pack_hexagons(n, m);
      const auto centers = embedded_centers(n, m);
      const RegularPolygon poly(n);
      const double h = r.hex_side;
      for (std::size_t i = 0; i < centers.size(); ++i) {
        for (int k = 0; k < 6; ++k) {
          const Point2 v = centers[i] + h * Point2{std::cos(k * kPi / 3), std::sin(k * kPi / 3)};
          for (int s = 0; s < n; ++s) ASSERT_GE(poly.inner_distance(v, s), 1e-9);
        }
        for (std::size_t j = i + 1; j < centers.size(); ++j) {
          ASSERT_GE(distance(centers[i], centers[j]), kSqrt3 * h - 1e-12);
        }
      }
    }
  }
}

TEST(HexPackProperty, RingAreaIsThin) {
  for (int n : {3, 4, 6}) {
    for (std::int64_t m : {10000, 40000}) {
      const auto r = pack_hexagons(n, m);
      const double area = polygon_area(n);
      const double cell = 1.5 * kSqrt3 * r.hex_side * r.hex_side;
      const double ring = area - static_cast<double>(r.embedded_count) * cell;
      ASSERT_NEAR(ring, area - r.embedded_count * (area / m), 1e-9 * area);
      ASSERT_LE(ring, n * 2.0 * r.hex_side * 1.5) << n << "," << m;
    }
  }
}

TEST(HexPackProperty, FillFractionGrowsTowardOne) {
  for (int n : {3, 4, 6}) {
    double previous = 0.0;
    for (std::int64_t m = 100; m <= 25600; m *= 4) {
      const double fill = static_cast<double>(pack_hexagons(n, m).embedded_count) / m;
      ASSERT_GE(fill, previous) << n << "," << m;
      ASSERT_LE(fill, 1.0);
      previous = fill;
    }
  }
}

TEST(HexPackProperty, RatiosStayAboveLowerConstant) {
  for (int n : {3, 4, 5, 6, 8}) {
    const auto series = ratio_series(n, {100, 1000, 10000, 100000});
    const double lower = asymptotic_bracket(n).lower_const;
    double lt_prev = INFINITY;
    for (const auto& r : series) {
      EXPECT_GE(r.ratio, lower - 0.05) << n << "," << r.m;
      const double lt = r.l_t / static_cast<double>(r.m);
      EXPECT_LT(lt, lt_prev) << n << "," << r.m;
      lt_prev = lt;
    }
  }
}

}  // namespace
}  // namespace equisplit
