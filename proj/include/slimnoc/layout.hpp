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

#ifndef SLIMNOC_LAYOUT_HPP
#define SLIMNOC_LAYOUT_HPP

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "slimnoc/topology.hpp"

namespace slimnoc {

enum class LayoutKind { basic, subgr, gr, rand, grid };

const char* layout_kind_name(LayoutKind k);
LayoutKind layout_kind_from(const std::string& name);

/// Die-grid placement: one router (plus its attached nodes) per cell,
/// 1-based coordinates within extent_x x extent_y.
struct Layout {
  LayoutKind kind = LayoutKind::grid;
  int extent_x = 0;
  int extent_y = 0;
  uint64_t seed = 0;  // rand only
  std::vector<int> x;
  std::vector<int> y;

  int dist(int i, int j) const { return std::abs(x[i] - x[j]) + std::abs(y[i] - y[j]); }
  int n() const { return static_cast<int>(x.size()); }
};

/// Basic layout: [G|a,b] -> (b, a + G q); subgroups of equal type stacked
/// together, extent q x 2q.
Layout layout_basic(const Topology& t);

/// Subgroup layout: [G|a,b] -> (b, 2a - (1 - G)); subgroup pairs interleaved
/// row by row, extent q x 2q.
Layout layout_subgr(const Topology& t);

/// Group layout: merged subgroup pairs tiled in near-square blocks of
/// ceil(sqrt(2q)) columns, ceil(sqrt(q)) groups per block row. Coordinates
/// are shifted to be 1-based and the extent is the bounding box; cells with
/// no router are permitted. Throws Error(collision_detected) if two routers
/// map to one cell.
Layout layout_gr(const Topology& t);

/// Uniform random permutation of the q x 2q grid, deterministic per seed.
Layout layout_rand(const Topology& t, uint64_t seed);

/// Canonical placement for the grid baselines; tori are folded so wrap links
/// stay short.
Layout layout_grid(const Topology& t);

Layout make_layout(const Topology& t, LayoutKind kind, uint64_t seed = 0);

}  // namespace slimnoc

#endif
