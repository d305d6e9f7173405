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

#include "equisplit/optimizer.hpp"
#include "equisplit/topology_io.hpp"

namespace equisplit {

namespace {

struct RawCase {
  const char* id;
  const char* description;
  const char* text;
};

constexpr RawCase kHalves[] = {
    {"i", "closed curve inside the triangle",
     R"(topology halves-i
polygon 3
junction J 0.1 0
edge c J J
region inside 1/2 : +c
region outside 1/2 : boundary | -c
)"},
    {"ii", "curve with both ends on one side",
     R"(topology halves-ii
polygon 3
anchor A 0 0.3
anchor B 0 0.7
edge e A B
init e -0.1 -0.1 0.1 -0.1
region cap 1/2 : walk:A:B -e
region rest 1/2 : +e walk:B:A
)"},
    {"iii", "curve joining two sides",
     R"(topology halves-iii
polygon 3
anchor A 0 0.6
anchor B 2 0.4
edge e A B
region corner 1/2 : walk:B:A +e
region rest 1/2 : walk:A:B -e
)"},
};

constexpr RawCase kThirds[] = {
    {"i", "two closed curves",
     R"(topology thirds-i
polygon 3
junction J1 -0.05 -0.05
junction J2 0.25 -0.05
edge c1 J1 J1
edge c2 J2 J2
region left 1/3 : +c1
region right 1/3 : +c2
region rest 1/3 : boundary | -c1 | -c2
)"},
    {"ii", "corner curve and a closed curve",
     R"(topology thirds-ii
polygon 3
anchor A 0 0.5
anchor B 2 0.5
junction J 0.2 0
edge e A B
edge c J J
region corner 1/3 : walk:B:A +e
region disc 1/3 : +c
region rest 1/3 : walk:A:B -e | -c
)"},
    {"iii", "triple junction, two ends on one side",
     R"(topology thirds-iii
polygon 3
anchor A 0 0.3
anchor B 0 0.7
anchor C 1 0.5
junction D 0.05 -0.1
edge eA A D
edge eB B D
edge eC C D
region r1 1/3 : walk:A:B +eB -eA
region r2 1/3 : walk:B:C +eC -eB
region r3 1/3 : walk:C:A +eA -eC
)"},
    {"iv", "triple junction, three ends on one side",
     R"(topology thirds-iv
polygon 3
anchor A 0 0.15
anchor B 0 0.5
anchor C 0 0.85
junction D 0 -0.05
edge eA A D
edge eB B D
edge eC C D
region r1 1/3 : walk:A:B +eB -eA
region r2 1/3 : walk:B:C +eC -eB
region r3 1/3 : walk:C:A +eA -eC
)"},
    {"v", "triple junction, one end per side",
     R"(topology thirds-v
polygon 3
anchor A 0 0.35
anchor B 1 0.6
anchor C 2 0.45
junction D 0.05 -0.03
edge eA A D 0
edge eB B D 0
edge eC C D 0
region r1 1/3 : walk:A:B +eB -eA
region r2 1/3 : walk:B:C +eC -eB
region r3 1/3 : walk:C:A +eA -eC
)"},
    {"vi", "two corner curves",
     R"(topology thirds-vi
polygon 3
anchor A 0 0.35
anchor B 2 0.65
anchor C 1 0.35
anchor D 0 0.65
edge e1 A B
edge e2 C D
region left 1/3 : walk:B:A +e1
region right 1/3 : walk:D:C +e2
region middle 1/3 : walk:A:D -e2 walk:C:B -e1
)"},
};

}  // namespace

std::vector<CatalogCase> case_catalog(Catalog which) {
  std::vector<CatalogCase> out;
  auto add = [&](const auto& table) {
    for (const auto& raw : table) out.push_back({raw.id, raw.description, parse_topology_string(raw.text)});
  };
  if (which == Catalog::kHalves) {
    add(kHalves);
  } else {
    add(kThirds);
  }
  return out;
}

}  // namespace equisplit
