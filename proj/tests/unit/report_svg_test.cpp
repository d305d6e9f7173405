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

#include <clocale>
#include <locale>
#include <regex>
#include <sstream>

#include "equisplit/constructions.hpp"
#include "equisplit/errors.hpp"
#include "equisplit/optimizer.hpp"
#include "equisplit/report.hpp"
#include "equisplit/svg.hpp"

namespace equisplit {
namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(FormatNumber, TenSignificantDigits) {
  EXPECT_EQ(format_number(0.67338684354429918), "0.6733868435");
  EXPECT_EQ(format_number(2.0), "2");
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-1.25), "-1.25");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.3333333333");
  EXPECT_EQ(format_number(123456789012.0), "1.23456789e+11");
}

TEST(FormatNumber, IgnoresGlobalLocale) {
  const std::string before = format_number(1.5);
  const char* chosen = nullptr;
  for (const char* name : {"de_DE.UTF-8", "de_DE.utf8", "fr_FR.UTF-8", "C.UTF-8"}) {
    if (std::setlocale(LC_ALL, name)) {
      chosen = name;
      break;
    }
  }
  const std::string during = format_number(1.5);
  std::setlocale(LC_ALL, "C");
  EXPECT_EQ(before, "1.5");
  EXPECT_EQ(during, "1.5") << (chosen ? chosen : "no alternative locale installed");
}

TEST(Report, BoundsRows) {
  const auto r23 = make_report_row(2, 3);
  EXPECT_NEAR(r23.lower_bound, 0.14945416618690159, 1e-14);
  EXPECT_NEAR(*r23.exact, 0.67338684354429918, 1e-14);
  EXPECT_NEAR(*r23.construction_length, *r23.exact, 1e-12);
  const auto r44 = make_report_row(4, 4);
  EXPECT_NEAR(*r44.conjectured, 2.0, 1e-15);
  EXPECT_FALSE(r44.exact.has_value());
  EXPECT_EQ(*make_report_row(1, 7).exact, 0.0);

  const auto csv = lines(rows_to_csv({r23, r44}));
  ASSERT_EQ(csv.size(), 3u);
  EXPECT_EQ(csv[0], "m,n,lower_bound,exact,conjectured,construction_length,optimizer_length,flags");
  EXPECT_EQ(csv[1], "2,3,0.1494541662,0.6733868435,,0.6733868435,,");
  EXPECT_EQ(csv[2], "4,4,1.544907702,,2,2,,conjectured-not-proven");

  const auto text = lines(rows_to_text({r23}));
  ASSERT_EQ(text.size(), 2u);
  EXPECT_NE(text[1].find("0.6733868435"), std::string::npos);
  EXPECT_NE(text[1].find(" - "), std::string::npos) << "empty cells print as '-'";
}

TEST(Report, HexpackCsv) {
  const auto csv = lines(hexpack_csv({pack_hexagons(4, 100)}));
  ASSERT_EQ(csv.size(), 2u);
  EXPECT_EQ(csv[0], "m,h,c,t,l_t,perimeter_B,L,ratio,lower_const,upper_const");
  EXPECT_EQ(csv[1].substr(0, 24), "100,0.06204032394,77,23,");
  EXPECT_NE(csv[1].find(",1.772453851,1.861209718"), std::string::npos);
}

TEST(Svg, ConstructionDocument) {
  const std::string svg = render_svg(corner_arc_split());
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  EXPECT_NE(svg.find("500.000 units per polygon side"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  // One native arc command for the single cut.
  const std::regex arc(" A [0-9.]+ [0-9.]+ 0 [01] [01] ");
  EXPECT_EQ(std::distance(std::sregex_iterator(svg.begin(), svg.end(), arc), std::sregex_iterator()), 1);
  // Arc radius scaled to drawing units.
  EXPECT_NE(svg.find(" A 321.519 321.519 "), std::string::npos);
}

TEST(Svg, YAxisPointsDown) {
  // The bottom side of the square lies at the larger y coordinate.
  const std::string svg = render_svg(square_cross_split());
  EXPECT_NE(svg.find("M 20.000 520.000 L 520.000 520.000"), std::string::npos);
}

TEST(Svg, FullCircleUsesTwoArcs) {
  OptimizerConfig cfg;
  cfg.points_per_edge = 8;
  const auto result = optimize(case_catalog(Catalog::kHalves)[0].topology, cfg);
  const std::string svg = render_svg(result);
  // One sampled path per optimized edge.
  const std::regex path("<path d=\"M [^\"]* L ");
  EXPECT_GE(std::distance(std::sregex_iterator(svg.begin(), svg.end(), path), std::sregex_iterator()), 1);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);

  SplitSystem disc;
  disc.polygon = RegularPolygon(4);
  disc.m = 2;
  disc.cuts = {make_arc({0, 0}, 0.2, 0.0, 2.0 * kPi)};
  const std::string d = render_svg(disc);
  const std::regex arc(" A ");
  EXPECT_EQ(std::distance(std::sregex_iterator(d.begin(), d.end(), arc), std::sregex_iterator()), 2);
}

TEST(Svg, UnwritablePathThrowsIoError) {
  EXPECT_THROW(write_text_file("/nonexistent/dir/out.svg", "x"), IoError);
}

}  // namespace
}  // namespace equisplit
