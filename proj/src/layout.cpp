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

#include "slimnoc/layout.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "slimnoc/errors.hpp"

namespace slimnoc {

const char* layout_kind_name(LayoutKind k) {
  switch (k) {
    case LayoutKind::basic: return "sn_basic";
    case LayoutKind::subgr: return "sn_subgr";
    case LayoutKind::gr: return "sn_gr";
    case LayoutKind::rand: return "sn_rand";
    case LayoutKind::grid: return "grid";
  }
  return "grid";
}

LayoutKind layout_kind_from(const std::string& name) {
  if (name == "sn_basic" || name == "basic") return LayoutKind::basic;
  if (name == "sn_subgr" || name == "subgr") return LayoutKind::subgr;
  if (name == "sn_gr" || name == "gr") return LayoutKind::gr;
  if (name == "sn_rand" || name == "rand") return LayoutKind::rand;
  if (name == "grid") return LayoutKind::grid;
  throw Error(errc::bad_input, "unknown layout kind: " + name);
}

namespace {

void require_sn(const Topology& t) {
  if (t.kind != TopoKind::slim_noc || t.labels.empty()) {
    throw Error(errc::not_slim_noc, "layout requires a labeled Slim NoC topology");
  }
}

void check_collisions(const Layout& l) {
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < l.n(); ++i) {
    if (!seen.insert({l.x[i], l.y[i]}).second) {
      throw Error(errc::collision_detected, "two routers share grid cell (" + std::to_string(l.x[i]) +
                                                "," + std::to_string(l.y[i]) + ")");
    }
  }
}

int ceil_sqrt(int v) {
  int r = static_cast<int>(std::sqrt(static_cast<double>(v)));
  while (r * r < v) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= v) --r;
  return r;
}

}  // namespace

Layout layout_basic(const Topology& t) {
  require_sn(t);
  int q = t.q;
  Layout l;
  l.kind = LayoutKind::basic;
  l.extent_x = q;
  l.extent_y = 2 * q;
  l.x.resize(t.n_routers);
  l.y.resize(t.n_routers);
  for (int i = 0; i < t.n_routers; ++i) {
    const RouterLabel& lb = t.labels[i];
    l.x[i] = lb.b;
    l.y[i] = lb.a + lb.g * q;
  }
  check_collisions(l);
  return l;
}

Layout layout_subgr(const Topology& t) {
  require_sn(t);
  int q = t.q;
  Layout l;
  l.kind = LayoutKind::subgr;
  l.extent_x = q;
  l.extent_y = 2 * q;
  l.x.resize(t.n_routers);
  l.y.resize(t.n_routers);
  for (int i = 0; i < t.n_routers; ++i) {
    const RouterLabel& lb = t.labels[i];
    l.x[i] = lb.b;
    l.y[i] = 2 * lb.a - (1 - lb.g);
  }
  check_collisions(l);
  return l;
}

Layout layout_gr(const Topology& t) {
  require_sn(t);
  int q = t.q;
  // c1 columns per group block, c2 group blocks per row.
  int c1 = ceil_sqrt(2 * q);
  int c2 = ceil_sqrt(q);
  int block_h = (2 * q + c1 - 1) / c1;
  Layout l;
  l.kind = LayoutKind::gr;
  l.x.resize(t.n_routers);
  l.y.resize(t.n_routers);
  for (int i = 0; i < t.n_routers; ++i) {
    const RouterLabel& lb = t.labels[i];
    int tpos = lb.b + lb.g * q;  // 1..2q slot inside the merged group
    l.x[i] = ((lb.a - 1) * c1) % (c1 * c2) + tpos % c1;
    l.y[i] = ((lb.a - 1) / c2) * block_h + (tpos + c1 - 1) / c1;
  }
  // The raw formula can emit x = 0 (whenever the in-block slot is a multiple
  // of c1); shift to 1-based coordinates and take the bounding box as extent.
  int min_x = *std::min_element(l.x.begin(), l.x.end());
  int min_y = *std::min_element(l.y.begin(), l.y.end());
  for (int i = 0; i < t.n_routers; ++i) {
    l.x[i] += 1 - min_x;
    l.y[i] += 1 - min_y;
  }
  l.extent_x = *std::max_element(l.x.begin(), l.x.end());
  l.extent_y = *std::max_element(l.y.begin(), l.y.end());
  check_collisions(l);
  return l;
}

Layout layout_rand(const Topology& t, uint64_t seed) {
  require_sn(t);
  int q = t.q;
  Layout l;
  l.kind = LayoutKind::rand;
  l.seed = seed;
  l.extent_x = q;
  l.extent_y = 2 * q;
  std::vector<std::pair<int, int>> cells;
  cells.reserve(static_cast<size_t>(q) * 2 * q);
  for (int x = 1; x <= q; ++x) {
    for (int y = 1; y <= 2 * q; ++y) cells.emplace_back(x, y);
  }
  // Fisher-Yates with explicit modular draws so the permutation is stable
  // across standard library implementations.
  std::mt19937_64 rng(seed);
  for (size_t i = cells.size() - 1; i > 0; --i) {
    size_t j = static_cast<size_t>(rng() % (i + 1));
    std::swap(cells[i], cells[j]);
  }
  l.x.resize(t.n_routers);
  l.y.resize(t.n_routers);
  for (int i = 0; i < t.n_routers; ++i) {
    l.x[i] = cells[i].first;
    l.y[i] = cells[i].second;
  }
  check_collisions(l);
  return l;
}

Layout layout_grid(const Topology& t) {
  if (t.grid.rows <= 0 || t.grid.cols <= 0) {
    throw Error(errc::bad_input, "topology has no grid shape");
  }
  int rows = t.grid.rows, cols = t.grid.cols;
  Layout l;
  l.kind = LayoutKind::grid;
  l.extent_x = cols;
  l.extent_y = rows;
  l.x.resize(t.n_routers);
  l.y.resize(t.n_routers);
  // Folded placement for tori keeps every ring link within two grid cells:
  // ring index i goes to slot 2i while it fits, then back down the odd slots.
  std::vector<int> row_slot(rows), col_slot(cols);
  auto fill_slots = [](std::vector<int>& slot, bool folded) {
    int n = static_cast<int>(slot.size());
    for (int i = 0; i < n; ++i) {
      if (!folded) {
        slot[i] = i;
      } else {
        slot[i] = (2 * i < n) ? 2 * i : 2 * (n - 1 - i) + 1;
      }
    }
  };
  bool folded = t.kind == TopoKind::torus;
  fill_slots(row_slot, folded);
  fill_slots(col_slot, folded);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int i = r * cols + c;
      l.x[i] = col_slot[c] + 1;
      l.y[i] = row_slot[r] + 1;
    }
  }
  check_collisions(l);
  return l;
}

Layout make_layout(const Topology& t, LayoutKind kind, uint64_t seed) {
  switch (kind) {
    case LayoutKind::basic: return layout_basic(t);
    case LayoutKind::subgr: return layout_subgr(t);
    case LayoutKind::gr: return layout_gr(t);
    case LayoutKind::rand: return layout_rand(t, seed);
    case LayoutKind::grid: return layout_grid(t);
  }
  throw Error(errc::bad_input, "unknown layout kind");
}

}  // namespace slimnoc
