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

#include "slimnoc/routing.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <deque>

#include "slimnoc/errors.hpp"

namespace slimnoc {

int RoutingTable::max_path_len() const {
  int m = 0;
  for (int v : path_len_tab) m = std::max(m, v);
  return m;
}

std::vector<int> RoutingTable::path(int src, int dst) const {
  std::vector<int> p{src};
  int cur = src;
  while (cur != dst) {
    cur = next_hop(cur, dst);
    p.push_back(cur);
    assert(static_cast<int>(p.size()) <= n + 1);
  }
  return p;
}

RoutingTable build_tables(const Topology& t) {
  RoutingTable tab;
  tab.n = t.n_routers;
  tab.next_hop_tab.assign(static_cast<size_t>(tab.n) * tab.n, -1);
  tab.path_len_tab.assign(static_cast<size_t>(tab.n) * tab.n, 0);
  // One BFS per destination; the next hop at `cur` is the smallest-index
  // neighbor one step closer to the destination.
  for (int dst = 0; dst < tab.n; ++dst) {
    std::vector<int> dist = bfs_distances(t, dst);
    for (int cur = 0; cur < tab.n; ++cur) {
      if (cur == dst) continue;
      if (dist[cur] < 0) throw Error(errc::disconnected, "graph is disconnected");
      tab.path_len_tab[cur * tab.n + dst] = dist[cur];
      for (int nb : t.adj[cur]) {
        if (dist[nb] == dist[cur] - 1) {
          tab.next_hop_tab[cur * tab.n + dst] = nb;
          break;  // neighbor lists are sorted, first hit is the smallest index
        }
      }
    }
  }
  return tab;
}

namespace {

RoutingTable tables_from_step(const Topology& t, int (*step)(const Topology&, int, int)) {
  RoutingTable tab;
  tab.n = t.n_routers;
  tab.next_hop_tab.assign(static_cast<size_t>(tab.n) * tab.n, -1);
  tab.path_len_tab.assign(static_cast<size_t>(tab.n) * tab.n, 0);
  for (int src = 0; src < tab.n; ++src) {
    for (int dst = 0; dst < tab.n; ++dst) {
      if (src == dst) continue;
      int cur = src, len = 0;
      while (cur != dst) {
        int nxt = step(t, cur, dst);
        if (tab.next_hop_tab[cur * tab.n + dst] < 0) tab.next_hop_tab[cur * tab.n + dst] = nxt;
        cur = nxt;
        ++len;
        if (len > tab.n) throw Error(errc::setup_error, "routing step function loops");
      }
      tab.path_len_tab[src * tab.n + dst] = len;
    }
  }
  return tab;
}

int xy_step(const Topology& t, int cur, int dst) {
  int cols = t.grid.cols;
  int cr = cur / cols, cc = cur % cols;
  int dr = dst / cols, dc = dst % cols;
  bool wrap = t.kind == TopoKind::torus;
  auto step_dim = [&](int pos, int want, int size) {
    if (!wrap) return pos < want ? pos + 1 : pos - 1;
    int fwd = (want - pos + size) % size;
    int bwd = (pos - want + size) % size;
    // shorter wrap direction; ties go forward
    return fwd <= bwd ? (pos + 1) % size : (pos - 1 + size) % size;
  };
  if (cc != dc) return cr * cols + step_dim(cc, dc, cols);
  return step_dim(cr, dr, t.grid.rows) * cols + cc;
}

int pfbf_step(const Topology& t, int cur, int dst) {
  const GridInfo& g = t.grid;
  int cols = g.cols;
  int cr = cur / cols, cc = cur % cols;
  int dr = dst / cols, dc = dst % cols;
  int cpx = cc / g.sub_cols, cpy = cr / g.sub_rows;
  int dpx = dc / g.sub_cols, dpy = dr / g.sub_rows;
  if (cpx != dpx) {
    int nc = cpx < dpx ? cc + g.sub_cols : cc - g.sub_cols;
    return cr * cols + nc;
  }
  if (cpy != dpy) {
    int nr = cpy < dpy ? cr + g.sub_rows : cr - g.sub_rows;
    return nr * cols + cc;
  }
  // inside the target partition: row link fixes the column, then the column
  // link fixes the row
  if (cc != dc) return cr * cols + dc;
  return dr * cols + cc;
}

}  // namespace

RoutingTable build_tables_xy(const Topology& t) {
  if (t.kind != TopoKind::mesh && t.kind != TopoKind::torus) {
    throw Error(errc::bad_input, "xy routing needs a mesh or torus");
  }
  return tables_from_step(t, xy_step);
}

RoutingTable build_tables_pfbf(const Topology& t) {
  if (t.kind != TopoKind::pfbf) throw Error(errc::bad_input, "pfbf routing needs a pfbf topology");
  return tables_from_step(t, pfbf_step);
}

RoutingTable build_tables_for(const Topology& t) {
  switch (t.kind) {
    case TopoKind::mesh:
    case TopoKind::torus:
      return build_tables_xy(t);
    case TopoKind::pfbf:
      return build_tables_pfbf(t);
    default:
      return build_tables(t);
  }
}

const char* vc_policy_kind_name(VcPolicyKind k) {
  switch (k) {
    case VcPolicyKind::hop_index: return "hop_index";
    case VcPolicyKind::xy: return "xy";
    case VcPolicyKind::dateline: return "dateline";
    case VcPolicyKind::partition_cross: return "partition_cross";
  }
  return "hop_index";
}

namespace {

bool is_wrap_edge(int a, int b, int size) { return size > 2 && std::abs(a - b) == size - 1; }

}  // namespace

int VcPolicy::vc_for(const Topology& t, const std::vector<int>& path, int hop) const {
  switch (kind) {
    case VcPolicyKind::hop_index:
      return vc_of_hop[hop];
    case VcPolicyKind::xy:
      return 0;
    case VcPolicyKind::dateline: {
      // VC1 after the ring's wrap edge, independently per dimension.
      int cols = t.grid.cols;
      int fr = path[hop] / cols, fc = path[hop] % cols;
      int tr = path[hop + 1] / cols, tc = path[hop + 1] % cols;
      bool col_dim = fr == tr;
      for (int h2 = 0; h2 <= hop; ++h2) {
        int ar = path[h2] / cols, ac = path[h2] % cols;
        int br = path[h2 + 1] / cols, bc = path[h2 + 1] % cols;
        if (col_dim && ar == br && is_wrap_edge(ac, bc, cols)) return 1;
        if (!col_dim && ac == bc && is_wrap_edge(ar, br, t.grid.rows)) return 1;
      }
      return 0;
    }
    case VcPolicyKind::partition_cross: {
      const GridInfo& g = t.grid;
      int cols = g.cols;
      int crossings = 0;
      for (int h2 = 0; h2 < hop; ++h2) {
        int ar = path[h2] / cols, ac = path[h2] % cols;
        int br = path[h2 + 1] / cols, bc = path[h2 + 1] % cols;
        if (ar / g.sub_rows != br / g.sub_rows || ac / g.sub_cols != bc / g.sub_cols) ++crossings;
      }
      return std::min(crossings, vc_count - 1);
    }
  }
  return 0;
}

VcPolicy assign_vcs_hop_indexed(const Topology& t, const RoutingTable& tab, int vc_count) {
  (void)t;
  int need = tab.max_path_len();
  if (vc_count < need) {
    throw Error(errc::insufficient_vcs, "hop-indexed policy needs " + std::to_string(need) +
                                            " VCs, got " + std::to_string(vc_count));
  }
  VcPolicy p;
  p.kind = VcPolicyKind::hop_index;
  p.vc_count = vc_count;
  p.vc_of_hop.resize(need);
  for (int h = 0; h < need; ++h) p.vc_of_hop[h] = h;
  return p;
}

VcPolicy assign_vcs(const Topology& t, const RoutingTable& tab, int vc_count) {
  VcPolicy p;
  p.vc_count = vc_count;
  switch (t.kind) {
    case TopoKind::mesh:
      p.kind = VcPolicyKind::xy;
      return p;
    case TopoKind::torus:
      if (vc_count < 2) throw Error(errc::insufficient_vcs, "dateline policy needs 2 VCs");
      p.kind = VcPolicyKind::dateline;
      return p;
    case TopoKind::pfbf:
      if (vc_count < 2) throw Error(errc::insufficient_vcs, "partition policy needs 2 VCs");
      p.kind = VcPolicyKind::partition_cross;
      return p;
    default:
      return assign_vcs_hop_indexed(t, tab, vc_count);
  }
}

bool check_deadlock_free(const Topology& t, const RoutingTable& tab, const VcPolicy& policy) {
  LinkIndex links(t);
  int n_nodes = links.n_links() * policy.vc_count;
  std::vector<std::vector<int>> dep(n_nodes);
  auto cdg_node = [&](int from, int to, int vc) {
    int port = links.port_of(from, to);
    assert(port >= 0);
    return links.id(from, port) * policy.vc_count + vc;
  };
  for (int src = 0; src < t.n_routers; ++src) {
    for (int dst = 0; dst < t.n_routers; ++dst) {
      if (src == dst) continue;
      std::vector<int> path = tab.path(src, dst);
      int hops = static_cast<int>(path.size()) - 1;
      int prev = -1;
      for (int h = 0; h < hops; ++h) {
        int vc = policy.vc_for(t, path, h);
        int node = cdg_node(path[h], path[h + 1], vc);
        if (prev >= 0) dep[prev].push_back(node);
        prev = node;
      }
    }
  }
  for (auto& d : dep) {
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
  }
  // iterative three-color DFS cycle search
  std::vector<int> color(n_nodes, 0);
  std::vector<std::pair<int, size_t>> stack;
  for (int s = 0; s < n_nodes; ++s) {
    if (color[s] != 0) continue;
    stack.push_back({s, 0});
    color[s] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < dep[v].size()) {
        int w = dep[v][idx++];
        if (color[w] == 1) return false;
        if (color[w] == 0) {
          color[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

}  // namespace slimnoc
