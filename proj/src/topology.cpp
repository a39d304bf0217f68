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

#include "slimnoc/topology.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <set>

#include "slimnoc/errors.hpp"

namespace slimnoc {

SnConfig sn_params(int q, int p) {
  SnConfig c;
  if (!is_prime_power(q)) {
    throw Error(errc::invalid_q, "q = " + std::to_string(q) + " is not a prime power");
  }
  if (p < 1) throw Error(errc::bad_input, "concentration p must be >= 1");
  c.q = q;
  c.p = p;
  if (q == 2) {
    // Listed in the configuration table (k' = 3, N_r = 8) although 2 = 4w + u
    // has no admissible (w, u). Accept with u = 0 and flag it.
    c.u = 0;
    c.w = 0;
    c.q2_special = true;
  } else {
    bool found = false;
    for (int u : {1, -1, 0}) {
      if ((q - u) % 4 == 0 && (q - u) / 4 >= 1) {
        c.u = u;
        c.w = (q - u) / 4;
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(errc::invalid_u,
                  "q = " + std::to_string(q) + " does not satisfy q = 4w + u, u in {-1,0,+1}");
    }
  }
  c.k_net = (3 * q - c.u) / 2;
  c.k = c.k_net + p;
  c.n_routers = 2 * q * q;
  c.n_nodes = static_cast<long long>(c.n_routers) * p;
  c.kappa = p - c.k_net / 2;
  return c;
}

int label_index(const RouterLabel& l, int q) { return l.g * q * q + (l.a - 1) * q + (l.b - 1); }

RouterLabel label_of(int index, int q) {
  RouterLabel l;
  l.g = index / (q * q);
  int r = index % (q * q);
  l.a = r / q + 1;
  l.b = r % q + 1;
  return l;
}

const char* topo_kind_name(TopoKind k) {
  switch (k) {
    case TopoKind::slim_noc: return "slim_noc";
    case TopoKind::torus: return "torus";
    case TopoKind::mesh: return "mesh";
    case TopoKind::fbf: return "fbf";
    case TopoKind::pfbf: return "pfbf";
    case TopoKind::custom: return "custom";
  }
  return "custom";
}

TopoKind topo_kind_from(const std::string& name) {
  if (name == "slim_noc") return TopoKind::slim_noc;
  if (name == "torus") return TopoKind::torus;
  if (name == "mesh") return TopoKind::mesh;
  if (name == "fbf") return TopoKind::fbf;
  if (name == "pfbf") return TopoKind::pfbf;
  return TopoKind::custom;
}

bool Topology::has_edge(int i, int j) const {
  return std::binary_search(adj[i].begin(), adj[i].end(), j);
}

long long Topology::n_edges() const {
  long long d = 0;
  for (const auto& a : adj) d += static_cast<long long>(a.size());
  return d / 2;
}

std::vector<std::pair<int, int>> Topology::edges() const {
  std::vector<std::pair<int, int>> e;
  e.reserve(static_cast<size_t>(n_edges()));
  for (int i = 0; i < n_routers; ++i) {
    for (int j : adj[i]) {
      if (j > i) e.emplace_back(i, j);
    }
  }
  return e;
}

int Topology::k_net() const {
  int k = 0;
  for (const auto& a : adj) k = std::max(k, static_cast<int>(a.size()));
  return k;
}

namespace {

struct EdgeSetBuilder {
  explicit EdgeSetBuilder(int n) : adj(n) {}
  void link(int i, int j) {
    if (i == j) return;
    adj[i].insert(j);
    adj[j].insert(i);
  }
  std::vector<std::vector<int>> take() {
    std::vector<std::vector<int>> out(adj.size());
    for (size_t i = 0; i < adj.size(); ++i) out[i].assign(adj[i].begin(), adj[i].end());
    return out;
  }
  std::vector<std::set<int>> adj;
};

}  // namespace

Topology build_sn(const SnConfig& cfg, const FieldTable& field, const GeneratorSets& gens) {
  const int q = cfg.q;
  if (field.q != q) throw Error(errc::bad_input, "field order does not match config q");
  Topology t;
  t.name = "sn_q" + std::to_string(q);
  t.kind = TopoKind::slim_noc;
  t.n_routers = cfg.n_routers;
  t.p = cfg.p;
  t.q = q;
  t.labels.resize(t.n_routers);
  for (int i = 0; i < t.n_routers; ++i) t.labels[i] = label_of(i, q);

  auto in_x = [&](int e) { return std::binary_search(gens.x.begin(), gens.x.end(), e); };
  auto in_xp = [&](int e) { return std::binary_search(gens.x_prime.begin(), gens.x_prime.end(), e); };

  EdgeSetBuilder b(t.n_routers);
  // Intra-subgroup rings: difference of positions in X (type 0) or X' (type 1).
  for (int a = 0; a < q; ++a) {
    for (int b1 = 0; b1 < q; ++b1) {
      for (int b2 = b1 + 1; b2 < q; ++b2) {
        int diff = field.sub(b1, b2);
        if (in_x(diff)) b.link(a * q + b1, a * q + b2);
        if (in_xp(diff)) b.link(q * q + a * q + b1, q * q + a * q + b2);
      }
    }
  }
  // Inter-subgroup: [0|a,b] ~ [1|m,c] iff b = m*a + c.
  for (int a = 0; a < q; ++a) {
    for (int m = 0; m < q; ++m) {
      for (int cc = 0; cc < q; ++cc) {
        int bb = field.add(field.mul(m, a), cc);
        b.link(a * q + bb, q * q + m * q + cc);
      }
    }
  }
  t.adj = b.take();

  for (int i = 0; i < t.n_routers; ++i) {
    if (t.degree(i) != cfg.k_net) {
      throw Error(errc::construction_invalid,
                  "router " + std::to_string(i) + " has degree " + std::to_string(t.degree(i)) +
                      ", expected k' = " + std::to_string(cfg.k_net) +
                      " (wrong generator sets for u = " + std::to_string(cfg.u) + "?)");
    }
  }
  if (diameter(t) != 2) {
    throw Error(errc::construction_invalid,
                "graph diameter is not 2 (wrong generator sets for u = " + std::to_string(cfg.u) + "?)");
  }
  return t;
}

Topology build_sn(int q, int p) {
  SnConfig cfg = sn_params(q, p);
  FieldTable f = make_field(q);
  int xi = find_generator(f);
  GeneratorSets g = generator_sets(f, xi, cfg.u);
  return build_sn(cfg, f, g);
}

Topology build_torus(int rows, int cols, int p) {
  if (rows < 1 || cols < 1 || p < 1) throw Error(errc::bad_input, "bad torus dimensions");
  Topology t;
  t.name = "torus_" + std::to_string(rows) + "x" + std::to_string(cols);
  t.kind = TopoKind::torus;
  t.n_routers = rows * cols;
  t.p = p;
  t.grid.rows = rows;
  t.grid.cols = cols;
  EdgeSetBuilder b(t.n_routers);
  auto id = [&](int r, int c) { return r * cols + c; };
  // Wraparound neighbors; dimensions of size <= 2 collapse the parallel
  // wrap edge into the single existing edge.
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (cols > 1) b.link(id(r, c), id(r, (c + 1) % cols));
      if (rows > 1) b.link(id(r, c), id((r + 1) % rows, c));
    }
  }
  t.adj = b.take();
  return t;
}

Topology build_cmesh(int rows, int cols, int p) {
  if (rows < 1 || cols < 1 || p < 1) throw Error(errc::bad_input, "bad mesh dimensions");
  Topology t;
  t.name = "cmesh_" + std::to_string(rows) + "x" + std::to_string(cols);
  t.kind = TopoKind::mesh;
  t.n_routers = rows * cols;
  t.p = p;
  t.grid.rows = rows;
  t.grid.cols = cols;
  EdgeSetBuilder b(t.n_routers);
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) b.link(id(r, c), id(r, c + 1));
      if (r + 1 < rows) b.link(id(r, c), id(r + 1, c));
    }
  }
  t.adj = b.take();
  return t;
}

Topology build_fbf(int rows, int cols, int p) {
  if (rows < 2 || cols < 2 || p < 1) throw Error(errc::bad_input, "fbf needs rows, cols >= 2");
  Topology t;
  t.name = "fbf_" + std::to_string(rows) + "x" + std::to_string(cols);
  t.kind = TopoKind::fbf;
  t.n_routers = rows * cols;
  t.p = p;
  t.grid.rows = rows;
  t.grid.cols = cols;
  EdgeSetBuilder b(t.n_routers);
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      for (int c2 = c + 1; c2 < cols; ++c2) b.link(id(r, c), id(r, c2));
      for (int r2 = r + 1; r2 < rows; ++r2) b.link(id(r, c), id(r2, c));
    }
  }
  t.adj = b.take();
  return t;
}

Topology build_pfbf(int part_x, int part_y, int sub_rows, int sub_cols, int p) {
  if (part_x < 1 || part_y < 1 || sub_rows < 2 || sub_cols < 2 || p < 1) {
    throw Error(errc::bad_input, "bad pfbf dimensions");
  }
  Topology t;
  t.name = "pfbf_" + std::to_string(part_x) + "x" + std::to_string(part_y) + "_of_" +
           std::to_string(sub_rows) + "x" + std::to_string(sub_cols);
  t.kind = TopoKind::pfbf;
  int rows = part_y * sub_rows, cols = part_x * sub_cols;
  t.n_routers = rows * cols;
  t.p = p;
  t.grid.rows = rows;
  t.grid.cols = cols;
  t.grid.part_x = part_x;
  t.grid.part_y = part_y;
  t.grid.sub_rows = sub_rows;
  t.grid.sub_cols = sub_cols;
  EdgeSetBuilder b(t.n_routers);
  auto id = [&](int r, int c) { return r * cols + c; };
  // Disjoint sub-FBFs.
  for (int py = 0; py < part_y; ++py) {
    for (int px = 0; px < part_x; ++px) {
      int r0 = py * sub_rows, c0 = px * sub_cols;
      for (int r = 0; r < sub_rows; ++r) {
        for (int c = 0; c < sub_cols; ++c) {
          for (int c2 = c + 1; c2 < sub_cols; ++c2) b.link(id(r0 + r, c0 + c), id(r0 + r, c0 + c2));
          for (int r2 = r + 1; r2 < sub_rows; ++r2) b.link(id(r0 + r, c0 + c), id(r0 + r2, c0 + c));
        }
      }
    }
  }
  // One port per dimension toward the facing partition, wired position to
  // position.
  for (int py = 0; py < part_y; ++py) {
    for (int px = 0; px < part_x; ++px) {
      for (int r = 0; r < sub_rows; ++r) {
        for (int c = 0; c < sub_cols; ++c) {
          int gr = py * sub_rows + r, gc = px * sub_cols + c;
          if (px + 1 < part_x) b.link(id(gr, gc), id(gr, gc + sub_cols));
          if (py + 1 < part_y) b.link(id(gr, gc), id(gr + sub_rows, gc));
        }
      }
    }
  }
  t.adj = b.take();
  return t;
}

std::vector<int> bfs_distances(const Topology& t, int src) {
  std::vector<int> dist(t.n_routers, -1);
  std::deque<int> dq;
  dist[src] = 0;
  dq.push_back(src);
  while (!dq.empty()) {
    int v = dq.front();
    dq.pop_front();
    for (int w : t.adj[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        dq.push_back(w);
      }
    }
  }
  return dist;
}

int diameter(const Topology& t) {
  int d = 0;
  for (int s = 0; s < t.n_routers; ++s) {
    auto dist = bfs_distances(t, s);
    for (int v = 0; v < t.n_routers; ++v) {
      if (dist[v] < 0) throw Error(errc::disconnected, "graph is disconnected");
      d = std::max(d, dist[v]);
    }
  }
  return d;
}

int girth(const Topology& t) {
  // BFS from every vertex; a non-tree edge at (v,w) bounds the girth by
  // dist(v) + dist(w) + 1, and the minimum over all roots is exact.
  int best = 0;
  for (int s = 0; s < t.n_routers; ++s) {
    std::vector<int> dist(t.n_routers, -1), parent(t.n_routers, -1);
    std::deque<int> dq;
    dist[s] = 0;
    dq.push_back(s);
    while (!dq.empty()) {
      int v = dq.front();
      dq.pop_front();
      for (int w : t.adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          dq.push_back(w);
        } else if (w != parent[v]) {
          int cyc = dist[v] + dist[w] + 1;
          if (best == 0 || cyc < best) best = cyc;
        }
      }
    }
  }
  return best;
}

double moore_ratio(const Topology& t) {
  int k = t.k_net();
  return static_cast<double>(t.n_routers) / (1.0 + static_cast<double>(k) * k);
}

int inter_subgroup_edges(const Topology& t, int g1, int a1, int g2, int a2) {
  if (t.kind != TopoKind::slim_noc) throw Error(errc::not_slim_noc, "needs a Slim NoC topology");
  int q = t.q, n = 0;
  for (int b1 = 1; b1 <= q; ++b1) {
    int i = label_index({g1, a1, b1}, q);
    for (int j : t.adj[i]) {
      const RouterLabel& l = t.labels[j];
      if (l.g == g2 && l.a == a2) ++n;
    }
  }
  if (g1 == g2 && a1 == a2) n /= 2;
  return n;
}

int inter_group_edges(const Topology& t, int a1, int a2) {
  if (t.kind != TopoKind::slim_noc) throw Error(errc::not_slim_noc, "needs a Slim NoC topology");
  if (a1 == a2) return 0;
  int n = 0;
  for (int g1 = 0; g1 <= 1; ++g1) {
    for (int g2 = 0; g2 <= 1; ++g2) n += inter_subgroup_edges(t, g1, a1, g2, a2);
  }
  return n;
}

LinkIndex::LinkIndex(const Topology& t) : topo(&t) {
  base.resize(t.n_routers + 1, 0);
  for (int i = 0; i < t.n_routers; ++i) base[i + 1] = base[i] + t.degree(i);
  total = base[t.n_routers];
}

int LinkIndex::port_of(int from, int to) const {
  const auto& nb = topo->adj[from];
  auto it = std::lower_bound(nb.begin(), nb.end(), to);
  if (it == nb.end() || *it != to) return -1;
  return static_cast<int>(it - nb.begin());
}

int LinkIndex::from_of(int link) const {
  int lo = 0, hi = topo->n_routers - 1;
  while (lo < hi) {
    int mid = (lo + hi + 1) / 2;
    if (base[mid] <= link) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

int LinkIndex::to_of(int link) const {
  int from = from_of(link);
  return topo->adj[from][link - base[from]];
}

namespace {

// Oversubscription band of the published configuration table:
// ceil(2/3 * ceil(k'/2)) <= p <= floor(4/3 * ceil(k'/2)).
bool p_in_table_band(int k_net, int p) {
  int ideal = (k_net + 1) / 2;
  int lo = (2 * ideal + 2) / 3;
  int hi = 4 * ideal / 3;
  return p >= lo && p <= hi;
}

}  // namespace

std::vector<FixedNCandidate> fixed_n_candidates(long long n, int q_max) {
  std::vector<FixedNCandidate> out;
  for (int q = 2; q <= q_max; ++q) {
    if (!is_prime_power(q)) continue;
    long long nr = 2LL * q * q;
    if (nr > n || n % nr != 0) continue;
    long long p = n / nr;
    if (p > 1 << 20) continue;
    SnConfig cfg = sn_params(q, static_cast<int>(p));
    if (!p_in_table_band(cfg.k_net, cfg.p)) continue;
    out.push_back({cfg});
  }
  return out;
}

std::pair<long long, long long> nearest_feasible_n(long long n, int q_max) {
  long long below = -1, above = -1;
  for (int q = 2; q <= q_max; ++q) {
    if (!is_prime_power(q)) continue;
    SnConfig probe = sn_params(q, 1);
    int ideal = (probe.k_net + 1) / 2;
    int lo = (2 * ideal + 2) / 3, hi = 4 * ideal / 3;
    for (int p = lo; p <= hi; ++p) {
      long long cand = 2LL * q * q * p;
      if (cand < n && (below < 0 || n - cand < n - below)) below = cand;
      if (cand > n && (above < 0 || cand - n < above - n)) above = cand;
    }
  }
  return {below, above};
}

}  // namespace slimnoc
