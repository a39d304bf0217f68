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

#ifndef SLIMNOC_ROUTING_HPP
#define SLIMNOC_ROUTING_HPP

#include <string>
#include <vector>

#include "slimnoc/topology.hpp"

namespace slimnoc {

/// Deterministic minimal routing: next hop and hop count per (current,
/// destination) pair.
struct RoutingTable {
  int n = 0;
  std::vector<int> next_hop_tab;  // n*n, row = current, -1 on the diagonal
  std::vector<int> path_len_tab;  // n*n

  int next_hop(int cur, int dst) const { return next_hop_tab[cur * n + dst]; }
  int path_len(int src, int dst) const { return path_len_tab[src * n + dst]; }
  int max_path_len() const;
  /// Router sequence src..dst, endpoints included.
  std::vector<int> path(int src, int dst) const;
};

/// Shortest paths by BFS with a deterministic tie-break: among equal-length
/// candidates the neighbor with the smallest router index wins. Throws
/// Error(disconnected) on unreachable pairs.
RoutingTable build_tables(const Topology& t);

/// Dimension-ordered minimal routing for mesh and torus grids: the column
/// (X) offset is resolved before the row (Y) offset; tori take the shorter
/// wrap direction, preferring +1 on ties.
RoutingTable build_tables_xy(const Topology& t);

/// Partition-ordered minimal routing for PFBF: cross partitions along X,
/// then along Y, then fix the local row link, then the local column.
RoutingTable build_tables_pfbf(const Topology& t);

/// Picks the canonical table builder for the topology kind.
RoutingTable build_tables_for(const Topology& t);

enum class VcPolicyKind { hop_index, xy, dateline, partition_cross };

const char* vc_policy_kind_name(VcPolicyKind k);

/// Maps each hop of a routed path to a virtual channel class.
struct VcPolicy {
  VcPolicyKind kind = VcPolicyKind::hop_index;
  int vc_count = 2;
  std::vector<int> vc_of_hop;  // hop_index kind: identity table

  /// VC for hop `hop` (0-based) of the router sequence `path`.
  int vc_for(const Topology& t, const std::vector<int>& path, int hop) const;
};

/// Hop-indexed policy (hop 0 -> VC0, hop 1 -> VC1, ...). Throws
/// Error(insufficient_vcs) when vc_count is below the table's longest path.
VcPolicy assign_vcs_hop_indexed(const Topology& t, const RoutingTable& tab, int vc_count);

/// Deadlock-free policy for the topology kind: hop-indexed for diameter-2
/// networks, XY for meshes, dateline classes for tori, and
/// increment-on-partition-crossing for PFBF.
VcPolicy assign_vcs(const Topology& t, const RoutingTable& tab, int vc_count);

/// Builds the channel dependency graph over (directed link, VC) pairs
/// induced by all routed paths and reports whether it is acyclic.
bool check_deadlock_free(const Topology& t, const RoutingTable& tab, const VcPolicy& policy);

}  // namespace slimnoc

#endif
