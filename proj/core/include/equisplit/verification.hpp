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
#include <vector>

namespace equisplit {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  ///< measured values against their thresholds
  double seconds = 0.0;
};

struct VerifyOptions {
  int threads = 1;  ///< workers for catalog runs
};

CriterionResult check_closed_form();
CriterionResult check_two_part_catalog(const VerifyOptions& options = {});
CriterionResult check_three_part_catalog(const VerifyOptions& options = {});
CriterionResult check_arc_emergence();
CriterionResult check_extremum_systems();
CriterionResult check_simplex_identity();
CriterionResult check_constructions();
CriterionResult check_hexpack_asymptotics(const VerifyOptions& options = {});

/// All eight acceptance checks in order.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options = {});

/// "PASS [k] name (1.23 s): detail"
std::string format_result(const CriterionResult& result);

}  // namespace equisplit
