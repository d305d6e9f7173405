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

#include <cstdint>
#include <vector>

#include "equisplit/geometry.hpp"

namespace equisplit {

/// Largest m accepted by pack_hexagons; the lattice scan is linear in m.
inline constexpr std::int64_t kMaxHexCount = 100'000'000;

struct HexPackOptions {
  /// Try a 5x5 grid of sub-cell lattice shifts and keep the one embedding the
  /// most cells (first wins on ties). Off: one cell is centred on the centroid.
  bool offset_scan = false;
  /// Minimum distance from every hexagon vertex to every polygon side.
  double clearance = 1e-9;
};

struct HexPackResult {
  int n = 0;
  std::int64_t m = 0;
  double hex_side = 0.0;
  std::int64_t embedded_count = 0;  ///< c = m - t
  std::int64_t t = 0;
  double l_t = 0.0;                 ///< connector bound t * 2h
  double perimeter_B = 0.0;         ///< outer boundary length of the union
  double perimeter_B1 = 0.0;        ///< 6h
  double total_length = 0.0;        ///< l_t + c * 3h + perimeter_B / 2
  double ratio = 0.0;               ///< total_length / sqrt(m)
  Point2 offset;                    ///< lattice shift of the reported packing
};

/// Side of the regular hexagon with area polygon_area(n) / m.
double hex_side_for(int n, std::int64_t m);

/// Packs area-(T/m) flat-top hexagons on a lattice anchored at the centroid
/// and measures the resulting split length estimate. Throws DomainError for
/// n < 3 or m < 1, ResourceError when m exceeds kMaxHexCount.
HexPackResult pack_hexagons(int n, std::int64_t m, const HexPackOptions& options = {});

/// Centres of the embedded cells of the reported packing, for inspection.
std::vector<Point2> embedded_centers(int n, std::int64_t m, const HexPackOptions& options = {});

/// One result per m, in input order. `m_list` must be nonempty and strictly
/// ascending. Entries are evaluated on up to `threads` workers.
std::vector<HexPackResult> ratio_series(int n, const std::vector<std::int64_t>& m_list,
                                        const HexPackOptions& options = {}, int threads = 1);

}  // namespace equisplit
