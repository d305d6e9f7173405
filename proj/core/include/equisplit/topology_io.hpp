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

#include <iosfwd>
#include <string>

#include "equisplit/optimizer.hpp"
#include "equisplit/topology.hpp"

namespace equisplit {

/// Parses the line-oriented topology schema (see docs/topology_format.md).
/// Throws SchemaError carrying the offending 1-based line number.
TopologySpec parse_topology(std::istream& in);
TopologySpec parse_topology_string(const std::string& text);
/// Throws SchemaError(0, ...) when the file cannot be opened.
TopologySpec read_topology_file(const std::string& path);

void write_topology(std::ostream& out, const TopologySpec& spec);

/// Writes the optimized topology (final positions as the new starting
/// layout) followed by `result` lines. The output parses as a topology.
void write_optimized(std::ostream& out, const OptimizedPartition& result);

}  // namespace equisplit
