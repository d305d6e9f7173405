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

#include <string>

#include "equisplit/constructions.hpp"
#include "equisplit/optimizer.hpp"

namespace equisplit {

/// Drawing units per polygon side.
inline constexpr double kSvgScale = 500.0;

/// SVG 1.1 document: polygon outline plus cut paths, arcs as native arc
/// commands. The y axis is flipped to screen convention.
std::string render_svg(const SplitSystem& split);

/// Polygon outline, optimized edge polylines and node markers.
std::string render_svg(const OptimizedPartition& result);

/// Writes `content` to `path`; throws IoError on failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace equisplit
