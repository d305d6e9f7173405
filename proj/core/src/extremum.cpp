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

#include "equisplit/extremum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "equisplit/errors.hpp"
#include "equisplit/geometry.hpp"

namespace equisplit {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;

template <std::size_t N>
double max_abs(const std::array<double, N>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

template <std::size_t N>
bool all_finite(const std::array<double, N>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

template <std::size_t N>
std::string format_iterate(int it, const std::array<double, N>& x, double res) {
  std::string line = "iter " + std::to_string(it) + ":";
  char buf[40];
  for (double v : x) {
    std::snprintf(buf, sizeof buf, " %.17g", v);
    line += buf;
  }
  std::snprintf(buf, sizeof buf, " |F|=%.3e", res);
  return line + buf;
}

struct NewtonOutcome {
  int iterations = 0;
  double residual = 0.0;
};

// Damped Newton with a central-difference Jacobian. `admissible` rejects
// iterates outside the equations' domain.
template <std::size_t N, class F, class Admissible>
NewtonOutcome newton(std::array<double, N>& x, F&& residual, Admissible&& admissible,
                     const char* name) {
  using Mat = Eigen::Matrix<double, static_cast<int>(N), static_cast<int>(N)>;
  using Vec = Eigen::Matrix<double, static_cast<int>(N), 1>;
  std::vector<std::string> trace;
  auto fx = residual(x);
  double res = max_abs(fx);
  trace.push_back(format_iterate(0, x, res));
  for (int it = 1; it <= 100; ++it) {
    if (res <= 1e-14) return {it - 1, res};
    Mat jac;
    for (std::size_t j = 0; j < N; ++j) {
      const double h = 1e-6 * std::max(1.0, std::abs(x[j]));
      auto xp = x;
      auto xm = x;
      xp[j] += h;
      xm[j] -= h;
      const auto fp = residual(xp);
      const auto fm = residual(xm);
      for (std::size_t i = 0; i < N; ++i) jac(static_cast<int>(i), static_cast<int>(j)) = (fp[i] - fm[i]) / (2.0 * h);
    }
    Vec rhs;
    for (std::size_t i = 0; i < N; ++i) rhs(static_cast<int>(i)) = -fx[i];
    const Vec step = jac.colPivHouseholderQr().solve(rhs);

    double damping = 1.0;
    bool accepted = false;
    for (int k = 0; k < 40; ++k, damping *= 0.5) {
      auto trial = x;
      for (std::size_t i = 0; i < N; ++i) trial[i] += damping * step(static_cast<int>(i));
      if (!all_finite(trial) || !admissible(trial)) continue;
      const auto ft = residual(trial);
      if (!all_finite(ft)) continue;
      const double rt = max_abs(ft);
      if (rt < res || (rt <= 1e-13 && rt <= 2.0 * res)) {
        x = trial;
        fx = ft;
        res = rt;
        accepted = true;
        break;
      }
    }
    trace.push_back(format_iterate(it, x, res));
    if (!accepted) {
      if (res <= 1e-12) return {it, res};
      throw ConvergenceError(std::string(name) + ": line search failed", trace);
    }
  }
  if (res <= 1e-12) return {100, res};
  throw ConvergenceError(std::string(name) + ": no convergence in 100 iterations", trace);
}

void require_positive_area(double area) {
  if (!(area > 0.0) || !std::isfinite(area)) throw DomainError("area must be positive and finite");
}

}  // namespace

std::array<double, 4> sector_stationarity(double area, const std::array<double, 4>& x) {
  const auto [a, b, r, lambda] = x;
  // Chord across the pi/3 corner and the arc over it.
  const double c = std::sqrt(a * a + b * b - a * b);
  const double w = std::sqrt(4.0 * r * r - c * c);
  const double s = std::asin(c / (2.0 * r));
  const double df_dr = 2.0 * s - 2.0 * c / w;
  const double dg_dr = r * df_dr;
  const double df_dc = 2.0 * r / w;
  const double dg_dc = c * c / (2.0 * w);
  const double dc_da = (2.0 * a - b) / (2.0 * c);
  const double dc_db = (2.0 * b - a) / (2.0 * c);
  const double g = kSqrt3 / 4.0 * a * b + r * r * s - c * w / 4.0;
  return {
      df_dc * dc_da + lambda * (kSqrt3 / 4.0 * b + dg_dc * dc_da),
      df_dc * dc_db + lambda * (kSqrt3 / 4.0 * a + dg_dc * dc_db),
      df_dr + lambda * dg_dr,
      g - area,
  };
}

SectorExtremum sector_extremum_solve(double area) {
  require_positive_area(area);
  const double s = std::sqrt(area);
  return sector_extremum_solve(area, {s, s, s, -1.0 / s});
}

SectorExtremum sector_extremum_solve(double area, const std::array<double, 4>& start) {
  require_positive_area(area);
  auto x = start;
  const auto admissible = [](const std::array<double, 4>& v) {
    const double c2 = v[0] * v[0] + v[1] * v[1] - v[0] * v[1];
    return v[0] > 0.0 && v[1] > 0.0 && v[2] > 0.0 && c2 > 0.0 && c2 < 4.0 * v[2] * v[2];
  };
  if (!admissible(x)) throw DomainError("sector start outside the admissible region");
  const auto out = newton(x, [&](const auto& v) { return sector_stationarity(area, v); },
                          admissible, "sector_extremum_solve");
  return {x[0], x[1], x[2], x[3], out.residual, out.iterations};
}

std::array<double, 3> segment_stationarity(double area, const std::array<double, 3>& x) {
  const auto [r, alpha, lambda] = x;
  const double sc = std::sin(alpha) * std::cos(alpha);
  const double sin2 = std::sin(alpha) * std::sin(alpha);
  return {
      2.0 * alpha + lambda * 2.0 * r * (alpha - sc),
      2.0 * r + lambda * 2.0 * r * r * sin2,
      r * r * (alpha - sc) - area,
  };
}

SegmentExtremum segment_extremum_solve(double area) {
  require_positive_area(area);
  const double r = std::sqrt(area);
  const double d = r;
  return segment_extremum_solve(area, {r, std::asin(std::min(1.0, d / r)), -1.0 / r});
}

SegmentExtremum segment_extremum_solve(double area, const std::array<double, 3>& start) {
  require_positive_area(area);
  auto x = start;
  const auto admissible = [](const std::array<double, 3>& v) {
    return v[0] > 0.0 && v[1] > 0.0 && v[1] < kPi;
  };
  if (!admissible(x)) throw DomainError("segment start outside the admissible region");
  const auto out = newton(x, [&](const auto& v) { return segment_stationarity(area, v); },
                          admissible, "segment_extremum_solve");
  return {x[0], x[0] * std::sin(x[1]), x[1], x[2], out.residual, out.iterations};
}

}  // namespace equisplit
