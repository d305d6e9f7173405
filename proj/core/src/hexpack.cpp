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

#include "equisplit/hexpack.hpp"

#include <array>
#include <cmath>
#include <string>

#include "equisplit/closed_form.hpp"
#include "equisplit/errors.hpp"
#include "equisplit/parallel.hpp"

namespace equisplit {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;

// Axial neighbour offsets of a flat-top lattice.
constexpr std::array<std::array<int, 2>, 6> kNeighbours{
    {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}};

class Lattice {
 public:
  Lattice(const RegularPolygon& poly, double h, Point2 offset, double clearance)
      : poly_(poly), h_(h), offset_(offset), clearance_(clearance) {
    const double reach = poly.circumradius() + 2.0 * h;
    q_max_ = static_cast<int>(std::ceil(reach / (1.5 * h))) + 1;
    r_span_ = static_cast<int>(std::ceil(reach / (kSqrt3 * h))) + 1;
    for (int k = 0; k < 6; ++k) {
      corners_[static_cast<std::size_t>(k)] = h * Point2{std::cos(k * kPi / 3.0), std::sin(k * kPi / 3.0)};
    }
  }

  Point2 center(int q, int r) const {
    return offset_ + Point2{1.5 * h_ * q, kSqrt3 * h_ * (r + 0.5 * q)};
  }

  bool embedded(int q, int r) const {
    const Point2 c = center(q, r);
    // A centre beyond the circumradius cannot carry an embedded cell.
    if (norm(c) > poly_.circumradius()) return false;
    for (const auto& corner : corners_) {
      const Point2 v = c + corner;
      for (int k = 0; k < poly_.n(); ++k) {
        if (poly_.inner_distance(v, k) < clearance_) return false;
      }
    }
    return true;
  }

  // Visits every embedded cell with its count of non-embedded neighbours.
  template <class Visit>
  void scan(Visit&& visit) const {
    for (int q = -q_max_; q <= q_max_; ++q) {
      const int r_mid = -static_cast<int>(std::lround(0.5 * q));
      for (int r = r_mid - r_span_; r <= r_mid + r_span_; ++r) {
        if (!embedded(q, r)) continue;
        int open = 0;
        for (const auto& d : kNeighbours) open += embedded(q + d[0], r + d[1]) ? 0 : 1;
        visit(q, r, open);
      }
    }
  }

 private:
  const RegularPolygon& poly_;
  double h_;
  Point2 offset_;
  double clearance_;
  int q_max_ = 0;
  int r_span_ = 0;
  std::array<Point2, 6> corners_{};
};

void check_args(int n, std::int64_t m) {
  if (n < 3) throw DomainError("hexpack needs n >= 3");
  if (m < 1) throw DomainError("hexpack needs m >= 1");
  if (m > kMaxHexCount) {
    throw ResourceError("m = " + std::to_string(m) + " exceeds the lattice scan limit",
                        kMaxHexCount);
  }
}

struct Packing {
  Point2 offset;
  std::int64_t cells = 0;
  std::int64_t open_edges = 0;
};

Packing measure(const RegularPolygon& poly, double h, Point2 offset, double clearance) {
  Packing p{offset, 0, 0};
  Lattice(poly, h, offset, clearance).scan([&](int, int, int open) {
    ++p.cells;
    p.open_edges += open;
  });
  return p;
}

Packing best_packing(const RegularPolygon& poly, double h, const HexPackOptions& options) {
  Packing best = measure(poly, h, {}, options.clearance);
  if (!options.offset_scan) return best;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      if (i == 0 && j == 0) continue;
      const Point2 shift{1.5 * h * i / 5.0, kSqrt3 * h * j / 5.0};
      const Packing p = measure(poly, h, shift, options.clearance);
      if (p.cells > best.cells) best = p;
    }
  }
  return best;
}

}  // namespace

double hex_side_for(int n, std::int64_t m) {
  if (n < 3 || m < 1) throw DomainError("hex_side_for needs n >= 3 and m >= 1");
  // (3 sqrt3 / 2) h^2 = (n/4) cot(pi/n) / m
  return std::sqrt(n / std::tan(kPi / n) / (6.0 * kSqrt3 * static_cast<double>(m)));
}

HexPackResult pack_hexagons(int n, std::int64_t m, const HexPackOptions& options) {
  check_args(n, m);
  const RegularPolygon poly(n);
  const double h = hex_side_for(n, m);
  const Packing p = best_packing(poly, h, options);
  if (p.cells > m) throw InternalError("embedded more hexagons than the area allows");

  HexPackResult out;
  out.n = n;
  out.m = m;
  out.hex_side = h;
  out.embedded_count = p.cells;
  out.t = m - p.cells;
  out.l_t = static_cast<double>(out.t) * 2.0 * h;
  out.perimeter_B = static_cast<double>(p.open_edges) * h;
  out.perimeter_B1 = 6.0 * h;
  out.total_length = out.l_t + 0.5 * static_cast<double>(p.cells) * out.perimeter_B1 + 0.5 * out.perimeter_B;
  out.ratio = out.total_length / std::sqrt(static_cast<double>(m));
  out.offset = p.offset;
  return out;
}

std::vector<Point2> embedded_centers(int n, std::int64_t m, const HexPackOptions& options) {
  check_args(n, m);
  const RegularPolygon poly(n);
  const double h = hex_side_for(n, m);
  const Packing p = best_packing(poly, h, options);
  const Lattice lattice(poly, h, p.offset, options.clearance);
  std::vector<Point2> out;
  out.reserve(static_cast<std::size_t>(p.cells));
  lattice.scan([&](int q, int r, int) { out.push_back(lattice.center(q, r)); });
  return out;
}

std::vector<HexPackResult> ratio_series(int n, const std::vector<std::int64_t>& m_list,
                                        const HexPackOptions& options, int threads) {
  if (m_list.empty()) throw DomainError("ratio_series needs at least one m");
  for (std::size_t i = 1; i < m_list.size(); ++i) {
    if (m_list[i] <= m_list[i - 1]) throw DomainError("ratio_series needs ascending m values");
  }
  if (n < 3) throw DomainError("hexpack needs n >= 3");
  return parallel_map(m_list, [&](std::int64_t m) { return pack_hexagons(n, m, options); }, threads);
}

}  // namespace equisplit
