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

#ifndef SLIMNOC_TOPOLOGY_HPP
#define SLIMNOC_TOPOLOGY_HPP

#include <string>
#include <utility>
#include <vector>

#include "slimnoc/field.hpp"

namespace slimnoc {

/// Derived Slim NoC parameters for a prime power q and concentration p.
struct SnConfig {
  int q = 0;
  int u = 0;        // q = 4w + u, u in {-1, 0, +1}
  int w = 0;
  int k_net = 0;    // network radix k' = (3q - u) / 2
  int p = 0;        // nodes per router
  int k = 0;        // router radix k' + p
  int n_routers = 0;  // 2 q^2
  long long n_nodes = 0;
  int kappa = 0;    // p - floor(k'/2)
  bool q2_special = false;  // q = 2 does not satisfy q = 4w + u; flagged, not rejected
};

/// Computes the SnConfig for (q, p). Throws Error(invalid_q) for non prime
/// powers and Error(invalid_u) when no u in {-1,0,+1} gives an integer w
/// (q = 2 is special-cased with q2_special set instead).
SnConfig sn_params(int q, int p);

/// Router label in the subgroup view: subgroup type g (0 or 1), subgroup id
/// a in 1..q, position b in 1..q.
struct RouterLabel {
  int g = 0;
  int a = 1;
  int b = 1;
};

/// 0-based router index of a label; the 1-based form G q^2 + (a-1) q + b is a
/// bijection onto 1..N_r.
int label_index(const RouterLabel& l, int q);
RouterLabel label_of(int index, int q);

enum class TopoKind { slim_noc, torus, mesh, fbf, pfbf, custom };

const char* topo_kind_name(TopoKind k);
TopoKind topo_kind_from(const std::string& name);

/// Grid shape metadata for the mesh/torus/FBF/PFBF baselines.
struct GridInfo {
  int rows = 0;
  int cols = 0;
  int part_x = 1;  // PFBF partition grid
  int part_y = 1;
  int sub_rows = 0;  // PFBF sub-FBF shape
  int sub_cols = 0;
};

/// A router-level topology. Nodes 0..N-1 attach in blocks of p: node n sits
/// at router n / p.
struct Topology {
  std::string name;
  TopoKind kind = TopoKind::custom;
  int n_routers = 0;
  int p = 1;
  int q = 0;                        // Slim NoC only
  std::vector<RouterLabel> labels;  // Slim NoC only
  std::vector<std::vector<int>> adj;  // sorted neighbor lists, symmetric, irreflexive
  GridInfo grid;

  long long n_nodes() const { return static_cast<long long>(n_routers) * p; }
  int node_router(int node) const { return node / p; }
  bool has_edge(int i, int j) const;
  int degree(int i) const { return static_cast<int>(adj[i].size()); }
  long long n_edges() const;
  std::vector<std::pair<int, int>> edges() const;  // i < j, lexicographic
  /// Network radix: max router degree (the degree for regular graphs).
  int k_net() const;
};

/// Builds the Slim NoC graph on 2q^2 routers.
///
/// Intra-subgroup wiring: [0|a,b] ~ [0|a,b'] iff b - b' is in X, and
/// [1|m,c] ~ [1|m,c'] iff c - c' is in X'. Inter-subgroup wiring:
/// [0|a,b] ~ [1|m,c] iff b = m*a + c. All arithmetic runs through the field
/// tables; label values v in 1..q stand for element id v-1.
/// The result is checked to be k'-regular with diameter 2 and throws
/// Error(construction_invalid) otherwise (q = 2 is exempt from the check
/// being derived from the 4w+u family, but its graph happens to satisfy both).
Topology build_sn(const SnConfig& cfg, const FieldTable& field, const GeneratorSets& gens);

/// Convenience: field + generator + sets + graph in one step.
Topology build_sn(int q, int p);

Topology build_torus(int rows, int cols, int p);
Topology build_cmesh(int rows, int cols, int p);

/// Flattened butterfly on a rows x cols grid: routers sharing a row or a
/// column are adjacent.
Topology build_fbf(int rows, int cols, int p);

/// Partitioned FBF: a part_x x part_y grid of disjoint sub_rows x sub_cols
/// FBFs. A router is linked to the router at the same local position in each
/// facing partition, one port per dimension.
Topology build_pfbf(int part_x, int part_y, int sub_rows, int sub_cols, int p);

std::vector<int> bfs_distances(const Topology& t, int src);

/// Max shortest-path distance over all router pairs. Throws
/// Error(disconnected) if some pair is unreachable.
int diameter(const Topology& t);

/// Length of the shortest cycle (returns 0 for forests).
int girth(const Topology& t);

/// N_r / (1 + k'^2), the fraction of the diameter-2 Moore bound attained.
double moore_ratio(const Topology& t);

/// Number of edges between two subgroups (g1,a1) and (g2,a2), 1-based ids.
int inter_subgroup_edges(const Topology& t, int g1, int a1, int g2, int a2);

/// Number of edges between group a1 and group a2 where group a merges
/// subgroups [0|a,*] and [1|a,*].
int inter_group_edges(const Topology& t, int a1, int a2);

/// Dense ids for directed links. The out-port order at a router follows its
/// sorted neighbor list, so ids are stable for a given adjacency.
struct LinkIndex {
  std::vector<int> base;  // per router, id of its first out link
  const Topology* topo = nullptr;

  explicit LinkIndex(const Topology& t);
  int n_links() const { return total; }
  int id(int router, int port) const { return base[router] + port; }
  int port_of(int from, int to) const;   // index of `to` in adj[from], -1 if absent
  int from_of(int link) const;
  int to_of(int link) const;

 private:
  int total = 0;
};

/// Feasible (q, p) splits of a fixed network size N = 2 q^2 p, restricted to
/// the oversubscription band 2/3 <= p / ceil(k'/2) <= 4/3 used by the
/// published configuration table.
struct FixedNCandidate {
  SnConfig cfg;
};
std::vector<FixedNCandidate> fixed_n_candidates(long long n, int q_max = 256);

/// Feasible N values nearest to n (below and above) for q <= q_max.
std::pair<long long, long long> nearest_feasible_n(long long n, int q_max = 11);

}  // namespace slimnoc

#endif
