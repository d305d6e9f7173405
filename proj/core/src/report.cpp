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

#include "equisplit/report.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "equisplit/constructions.hpp"

namespace equisplit {

namespace {

std::string optional_number(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

std::string join_flags(const std::vector<std::string>& flags) {
  std::string out;
  for (std::size_t i = 0; i < flags.size(); ++i) out += (i ? ";" : "") + flags[i];
  return out;
}

std::vector<std::string> cells(const ReportRow& row) {
  return {std::to_string(row.m),
          std::to_string(row.n),
          format_number(row.lower_bound),
          optional_number(row.exact),
          optional_number(row.conjectured),
          optional_number(row.construction_length),
          optional_number(row.optimizer_length),
          join_flags(row.flags)};
}

const std::vector<std::string> kColumns{"m",           "n",        "lower_bound",
                                        "exact",       "conjectured", "construction_length",
                                        "optimizer_length", "flags"};

}  // namespace

ReportRow make_report_row(int m, int n) {
  BoundsReport report = make_bounds_report(m, n);
  attach_best_construction(report);
  ReportRow row;
  row.m = m;
  row.n = n;
  row.lower_bound = report.lower_bound;
  row.exact = report.exact_value;
  row.conjectured = report.conjectured_value;
  row.construction_length = report.best_construction_length;
  row.flags = report.flags;
  return row;
}

std::string format_number(double value) {
  char buf[64];
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 10);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string rows_to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  for (std::size_t i = 0; i < kColumns.size(); ++i) out << (i ? "," : "") << kColumns[i];
  out << "\n";
  for (const auto& row : rows) {
    const auto c = cells(row);
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
    out << "\n";
  }
  return out.str();
}

std::string rows_to_text(const std::vector<ReportRow>& rows) {
  std::vector<std::vector<std::string>> table{kColumns};
  for (const auto& row : rows) {
    auto c = cells(row);
    for (auto& s : c) {
      if (s.empty()) s = "-";
    }
    table.push_back(std::move(c));
  }
  std::vector<std::size_t> width(kColumns.size(), 0);
  for (const auto& r : table) {
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream out;
  for (const auto& r : table) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << line << "\n";
  }
  return out.str();
}

std::string hexpack_csv(const std::vector<HexPackResult>& results) {
  std::ostringstream out;
  out << "m,h,c,t,l_t,perimeter_B,L,ratio,lower_const,upper_const\n";
  for (const auto& r : results) {
    const AsymptoticBracket b = asymptotic_bracket(r.n);
    out << r.m << "," << format_number(r.hex_side) << "," << r.embedded_count << "," << r.t << ","
        << format_number(r.l_t) << "," << format_number(r.perimeter_B) << ","
        << format_number(r.total_length) << "," << format_number(r.ratio) << ","
        << format_number(b.lower_const) << "," << format_number(b.upper_const) << "\n";
  }
  return out.str();
}

}  // namespace equisplit
