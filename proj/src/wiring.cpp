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

#include "slimnoc/wiring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "slimnoc/errors.hpp"

namespace slimnoc {

TechProfile tech_profile(int node_nm) {
  switch (node_nm) {
    case 45: return {45, 3500.0, 2.0};
    case 22: return {22, 7000.0, 1.0};
    case 11: return {11, 14000.0, 0.5};
    default:
      throw Error(errc::bad_input, "unsupported technology node: " + std::to_string(node_nm) + " nm");
  }
}

int Polyline::manhattan_len() const {
  int len = 0;
  for (int i = 1; i < n; ++i) {
    len += std::abs(pts[i].x - pts[i - 1].x) + std::abs(pts[i].y - pts[i - 1].y);
  }
  return len;
}

Polyline place_wire(int i, int j, const Layout& l) {
  if (i == j) throw Error(errc::bad_input, "place_wire needs two distinct routers");
  if (i > j) std::swap(i, j);  // one physical wire per link, origin at the smaller index
  GridPoint a{l.x[i], l.y[i]}, b{l.x[j], l.y[j]};
  Polyline p;
  if (a.x == b.x || a.y == b.y) {
    p.pts[0] = a;
    p.pts[1] = b;
    p.n = 2;
    return p;
  }
  if (std::abs(a.x - b.x) > std::abs(a.y - b.y)) {
    // larger along X: first segment vertical, bend at (x_i, y_j)
    p.pts[0] = a;
    p.pts[1] = {a.x, b.y};
    p.pts[2] = b;
  } else {
    // first segment horizontal, bend at (x_j, y_i)
    p.pts[0] = a;
    p.pts[1] = {b.x, a.y};
    p.pts[2] = b;
  }
  p.n = 3;
  return p;
}

std::vector<GridPoint> covered_cells(const Polyline& p) {
  std::vector<GridPoint> cells;
  cells.push_back(p.pts[0]);
  for (int s = 1; s < p.n; ++s) {
    GridPoint from = p.pts[s - 1], to = p.pts[s];
    int dx = (to.x > from.x) - (to.x < from.x);
    int dy = (to.y > from.y) - (to.y < from.y);
    GridPoint cur = from;
    while (!(cur == to)) {
      cur.x += dx;
      cur.y += dy;
      cells.push_back(cur);
    }
  }
  return cells;
}

CrossingGrid crossing_counts(const Topology& t, const Layout& l) {
  CrossingGrid g;
  g.extent_x = l.extent_x;
  g.extent_y = l.extent_y;
  g.count.assign(static_cast<size_t>(l.extent_x) * l.extent_y, 0);
  for (const auto& [i, j] : t.edges()) {
    Polyline p = place_wire(i, j, l);
    for (const GridPoint& c : covered_cells(p)) g.at(c.x, c.y) += 1;
  }
  return g;
}

int CrossingGrid::max_count() const {
  int m = 0;
  for (int c : count) m = std::max(m, c);
  return m;
}

long long CrossingGrid::total() const {
  long long s = 0;
  for (int c : count) s += c;
  return s;
}

ConstraintReport check_constraint(const CrossingGrid& g, const TechProfile& tech, int link_width,
                                  bool count_wires) {
  ConstraintReport r;
  r.w_limit = tech.max_wires();
  r.link_width = link_width;
  r.count_wires = count_wires;
  double scale = count_wires ? static_cast<double>(link_width) : 1.0;
  for (int y = 1; y <= g.extent_y; ++y) {
    for (int x = 1; x <= g.extent_x; ++x) {
      int links = g.at(x, y);
      double wires = links * scale;
      if (links > r.max_links) r.max_links = links;
      if (wires > r.max_wires) r.max_wires = wires;
      if (wires > r.w_limit) {
        r.pass = false;
        r.violations.push_back({x, y, links, wires});
      }
    }
  }
  return r;
}

}  // namespace slimnoc
