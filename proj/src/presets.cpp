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

#include "slimnoc/presets.hpp"

#include "slimnoc/errors.hpp"

namespace slimnoc {

std::vector<std::string> preset_names(int size_class) {
  if (size_class == 200) {
    return {"t2d3", "t2d4", "cm3", "cm4", "fbf3", "fbf4", "pfbf3", "pfbf4",
            "sn_basic", "sn_subgr", "sn_gr", "sn_rand"};
  }
  if (size_class == 1296) {
    return {"t2d8", "t2d9", "cm8", "cm9", "fbf8", "fbf9", "pfbf8", "pfbf9",
            "sn_basic", "sn_subgr", "sn_gr", "sn_rand"};
  }
  throw Error(errc::unknown_preset, "unknown size class: " + std::to_string(size_class));
}

Preset make_preset(const std::string& name, int size_class, int vc, uint64_t seed) {
  if (size_class != 200 && size_class != 1296) {
    throw Error(errc::unknown_preset, "unknown size class: " + std::to_string(size_class));
  }
  bool small = size_class == 200;
  Preset p;
  p.name = name;
  // Router cycle times account for crossbar size: 0.4 ns for the low-radix
  // grids, 0.5 ns for SN and PFBF, 0.6 ns for the full FBF.
  if (name.rfind("sn_", 0) == 0) {
    int q = small ? 5 : 9;
    int conc = small ? 4 : 8;
    p.topo = build_sn(q, conc);
    p.layout = make_layout(p.topo, layout_kind_from(name), seed);
    p.cycle_time_ns = 0.5;
  } else if (name == "t2d3") {
    p.topo = build_torus(8, 8, 3);
  } else if (name == "t2d4") {
    p.topo = build_torus(10, 5, 4);
  } else if (name == "t2d8") {
    p.topo = build_torus(18, 9, 8);
  } else if (name == "t2d9") {
    p.topo = build_torus(12, 12, 9);
  } else if (name == "cm3") {
    p.topo = build_cmesh(8, 8, 3);
  } else if (name == "cm4") {
    p.topo = build_cmesh(10, 5, 4);
  } else if (name == "cm8") {
    p.topo = build_cmesh(18, 9, 8);
  } else if (name == "cm9") {
    p.topo = build_cmesh(12, 12, 9);
  } else if (name == "fbf3") {
    p.topo = build_fbf(8, 8, 3);
  } else if (name == "fbf4") {
    p.topo = build_fbf(10, 5, 4);
  } else if (name == "fbf8") {
    p.topo = build_fbf(18, 9, 8);
  } else if (name == "fbf9") {
    p.topo = build_fbf(12, 12, 9);
  } else if (name == "pfbf3") {
    p.topo = build_pfbf(2, 2, 4, 4, 3);
  } else if (name == "pfbf4") {
    p.topo = build_pfbf(2, 1, 5, 5, 4);
  } else if (name == "pfbf8") {
    p.topo = build_pfbf(2, 1, 9, 9, 8);
  } else if (name == "pfbf9") {
    p.topo = build_pfbf(2, 2, 6, 6, 9);
  } else {
    throw Error(errc::unknown_preset, "unknown preset: " + name);
  }
  if (name.rfind("sn_", 0) != 0) {
    bool torus_or_mesh = name[0] == 't' || name[0] == 'c';
    bool fbf_full = name.rfind("fbf", 0) == 0;
    p.cycle_time_ns = torus_or_mesh ? 0.4 : (fbf_full ? 0.6 : 0.5);
    p.layout = layout_grid(p.topo);
  }
  p.table = build_tables_for(p.topo);
  p.policy = assign_vcs(p.topo, p.table, vc);
  return p;
}

}  // namespace slimnoc
