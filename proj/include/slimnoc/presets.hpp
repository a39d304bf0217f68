/*
 * Copyright 2026 The slimnoc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SLIMNOC_PRESETS_HPP
#define SLIMNOC_PRESETS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "slimnoc/layout.hpp"
#include "slimnoc/routing.hpp"
#include "slimnoc/topology.hpp"

namespace slimnoc {

/// A ready-to-simulate configuration from the evaluation matrix: topology,
/// placement, routing tables, VC policy and the per-topology router cycle
/// time used to scale reported latencies to nanoseconds.
struct Preset {
  std::string name;
  Topology topo;
  Layout layout;
  RoutingTable table;
  VcPolicy policy;
  double cycle_time_ns = 0.5;
};

/// Known preset names for a size class (200 covers the N in {192,200}
/// networks, 1296 the large ones): t2d3/t2d4/t2d8/t2d9, cm3/cm4/cm8/cm9,
/// fbf3/fbf4/fbf8/fbf9, pfbf3/pfbf4/pfbf8/pfbf9 and the four Slim NoC
/// layouts sn_basic/sn_subgr/sn_gr/sn_rand.
std::vector<std::string> preset_names(int size_class);

/// Builds a preset by name. vc is the VC count for the policy; seed feeds
/// sn_rand. Throws Error(unknown_preset) for unknown names or size classes.
Preset make_preset(const std::string& name, int size_class = 200, int vc = 2, uint64_t seed = 1);

}  // namespace slimnoc

#endif
