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

#ifndef SLIMNOC_COST_HPP
#define SLIMNOC_COST_HPP

#include <vector>

#include "slimnoc/layout.hpp"
#include "slimnoc/topology.hpp"

namespace slimnoc {

/// Buffer model knobs. b_over_l is the link bandwidth in flits per cycle
/// (b/L); the canonical unit is 1 flit per cycle.
struct BufferParams {
  double b_over_l = 1.0;
  int vc = 2;       // virtual channels per physical link
  int h = 1;        // grid hops traversed per link cycle (9 with SMART wires)
  int cb_size = 20; // central buffer capacity in flits
};

/// Round trip time of the link between placed routers i and j:
/// 2 ceil(dist/H) + 3 cycles (two router cycles plus one of serialization).
int rtt(int i, int j, const Layout& l, int h);
int rtt_for_distance(int dist, int h);

/// Edge buffer size delta_ij = T_ij * (b/L) * |VC|, rounded up to whole flits.
int edge_buffer_size(int i, int j, const Layout& l, const BufferParams& p);

/// Average Manhattan distance over connected router pairs.
double avg_wire_length(const Topology& t, const Layout& l);

/// Sum of delta_ij over ordered connected pairs: one buffer per link
/// direction.
long long total_edge_buffers(const Topology& t, const Layout& l, const BufferParams& p);

/// N_r (delta_cb + 2 k' |VC|). Has no layout terms.
long long total_central_buffers(int n_routers, int k_net, const BufferParams& p);

/// One row of the wire-length scaling table for the subgroup layout with the
/// ideal concentration p = floor(k'/2).
struct ScalingRow {
  int q = 0;
  int u = 0;
  long long n_nodes = 0;
  double m = 0.0;      // average wire length
  double ratio = 0.0;  // m / cbrt(n_nodes)
};

std::vector<ScalingRow> scaling_envelope(const std::vector<int>& qs);

/// max(ratio) / min(ratio) over the rows; a bounded band evidences
/// M = Theta(cbrt(N)).
double envelope_band(const std::vector<ScalingRow>& rows);

}  // namespace slimnoc

#endif
