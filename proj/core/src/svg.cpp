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

#include "equisplit/svg.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "equisplit/errors.hpp"

namespace equisplit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kMargin = 20.0;

std::string fixed3(double v) {
  char buf[64];
  if (std::abs(v) < 5e-4) v = 0.0;  // avoid "-0.000"
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 3);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("0");
}

class Canvas {
 public:
  explicit Canvas(const RegularPolygon& poly) {
    for (const auto& v : poly.vertices()) {
      xmin_ = std::min(xmin_, v.x);
      xmax_ = std::max(xmax_, v.x);
      ymin_ = std::min(ymin_, v.y);
      ymax_ = std::max(ymax_, v.y);
    }
  }

  double width() const { return 2.0 * kMargin + kSvgScale * (xmax_ - xmin_); }
  double height() const { return 2.0 * kMargin + kSvgScale * (ymax_ - ymin_); }

  std::string xy(Point2 p) const {
    return fixed3(kMargin + kSvgScale * (p.x - xmin_)) + " " +
           fixed3(kMargin + kSvgScale * (ymax_ - p.y));
  }

 private:
  double xmin_ = std::numeric_limits<double>::infinity();
  double xmax_ = -std::numeric_limits<double>::infinity();
  double ymin_ = std::numeric_limits<double>::infinity();
  double ymax_ = -std::numeric_limits<double>::infinity();
};

void header(std::ostringstream& out, const Canvas& canvas, const std::string& title) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<!-- " << title << "; " << fixed3(kSvgScale)
      << " units per polygon side, y axis flipped -->\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << fixed3(canvas.width()) << "\" height=\"" << fixed3(canvas.height())
      << "\" viewBox=\"0 0 " << fixed3(canvas.width()) << " " << fixed3(canvas.height())
      << "\">\n";
}

void outline(std::ostringstream& out, const Canvas& canvas, const RegularPolygon& poly) {
  out << "  <path d=\"";
  for (std::size_t i = 0; i < poly.vertices().size(); ++i) {
    out << (i == 0 ? "M " : " L ") << canvas.xy(poly.vertices()[i]);
  }
  out << " Z\" fill=\"#f4f4f4\" stroke=\"#222\" stroke-width=\"2\"/>\n";
}

std::string polyline_d(const Canvas& canvas, const std::vector<Point2>& pts) {
  std::string d;
  for (std::size_t i = 0; i < pts.size(); ++i) d += (i == 0 ? "M " : " L ") + canvas.xy(pts[i]);
  return d;
}

// Counterclockwise in model space is clockwise on screen, hence sweep flag 0.
std::string arc_d(const Canvas& canvas, const ArcSpec& arc) {
  const std::string r = fixed3(kSvgScale * arc.radius);
  auto piece = [&](double from, double to) {
    const int large = (to - from) > kPi ? 1 : 0;
    return " A " + r + " " + r + " 0 " + std::to_string(large) + " 0 " + canvas.xy(arc.point_at(to));
  };
  std::string d = "M " + canvas.xy(arc.start_point());
  if (arc.sweep() >= 2.0 * kPi - 1e-12) {
    const double mid = arc.start_angle + 0.5 * arc.sweep();
    d += piece(arc.start_angle, mid) + piece(mid, arc.end_angle);
  } else {
    d += piece(arc.start_angle, arc.end_angle);
  }
  return d;
}

}  // namespace

std::string render_svg(const SplitSystem& split) {
  const Canvas canvas(split.polygon);
  std::ostringstream out;
  header(out, canvas, split.label.empty() ? std::string("split") : split.label);
  outline(out, canvas, split.polygon);
  for (const auto& cut : split.cuts) {
    const std::string d = std::visit(
        Overloaded{
            [&](const Segment& s) { return "M " + canvas.xy(s.a) + " L " + canvas.xy(s.b); },
            [&](const ArcSpec& a) { return arc_d(canvas, a); },
            [&](const CurveChain& c) { return polyline_d(canvas, c.points); },
        },
        cut);
    out << "  <path d=\"" << d << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_svg(const OptimizedPartition& result) {
  const auto& poly = result.topology.polygon;
  const Canvas canvas(poly);
  std::ostringstream out;
  header(out, canvas, result.topology.label.empty() ? std::string("optimized split") : result.topology.label);
  outline(out, canvas, poly);
  for (const auto& edge : result.edge_polylines) {
    out << "  <path d=\"" << polyline_d(canvas, edge)
        << "\" fill=\"none\" stroke=\"#2c6fbb\" stroke-width=\"2\"/>\n";
  }
  for (const auto& p : result.node_positions) {
    const std::string xy = canvas.xy(p);
    const auto space = xy.find(' ');
    out << "  <circle cx=\"" << xy.substr(0, space) << "\" cy=\"" << xy.substr(space + 1)
        << "\" r=\"4\" fill=\"#222\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace equisplit
