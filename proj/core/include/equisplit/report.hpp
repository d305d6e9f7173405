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

#include "equisplit/closed_form.hpp"
#include "equisplit/hexpack.hpp"

namespace equisplit {

struct ReportRow {
  int m = 0;
  int n = 0;
  double lower_bound = 0.0;
  std::optional<double> exact;
  std::optional<double> conjectured;
  std::optional<double> construction_length;
  std::optional<double> optimizer_length;
  std::vector<std::string> flags;
};

/// Closed-form values plus the best shipped construction for (m, n).
ReportRow make_report_row(int m, int n);

/// Ten significant digits, '.' separator, independent of the global locale.
std::string format_number(double value);

std::string rows_to_csv(const std::vector<ReportRow>& rows);
std::string rows_to_text(const std::vector<ReportRow>& rows);

/// Columns m, h, c, t, l_t, perimeter_B, L, ratio, lower_const, upper_const.
std::string hexpack_csv(const std::vector<HexPackResult>& results);

}  // namespace equisplit
