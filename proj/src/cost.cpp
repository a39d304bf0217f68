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

#include "slimnoc/cost.hpp"

#include <cmath>

#include "slimnoc/errors.hpp"

namespace slimnoc {

int rtt_for_distance(int dist, int h) {
  if (h < 1) throw Error(errc::bad_input, "H must be >= 1");
  int link_cycles = (dist + h - 1) / h;
  return 2 * link_cycles + 3;
}

int rtt(int i, int j, const Layout& l, int h) { return rtt_for_distance(l.dist(i, j), h); }

int edge_buffer_size(int i, int j, const Layout& l, const BufferParams& p) {
  if (p.vc < 1) throw Error(errc::bad_input, "|VC| must be >= 1");
  if (p.b_over_l <= 0) throw Error(errc::bad_input, "b/L must be positive");
  double flits = rtt(i, j, l, p.h) * p.b_over_l * p.vc;
  return static_cast<int>(std::ceil(flits - 1e-9));
}

double avg_wire_length(const Topology& t, const Layout& l) {
  long long sum = 0, links = 0;
  for (const auto& [i, j] : t.edges()) {
    sum += l.dist(i, j);
    ++links;
  }
  if (links == 0) return 0.0;
  return static_cast<double>(sum) / static_cast<double>(links);
}

long long total_edge_buffers(const Topology& t, const Layout& l, const BufferParams& p) {
  long long total = 0;
  for (const auto& [i, j] : t.edges()) {
    total += 2LL * edge_buffer_size(i, j, l, p);
  }
  return total;
}

long long total_central_buffers(int n_routers, int k_net, const BufferParams& p) {
  if (p.cb_size < 0) throw Error(errc::bad_input, "central buffer size must be >= 0");
  return static_cast<long long>(n_routers) * (p.cb_size + 2LL * k_net * p.vc);
}

std::vector<ScalingRow> scaling_envelope(const std::vector<int>& qs) {
  std::vector<ScalingRow> rows;
  for (int q : qs) {
    SnConfig probe = sn_params(q, 1);
    int p = probe.k_net / 2;
    if (p < 1) p = 1;
    SnConfig cfg = sn_params(q, p);
    Topology t = build_sn(q, p);
    Layout l = layout_subgr(t);
    ScalingRow r;
    r.q = q;
    r.u = cfg.u;
    r.n_nodes = cfg.n_nodes;
    r.m = avg_wire_length(t, l);
    r.ratio = r.m / std::cbrt(static_cast<double>(r.n_nodes));
    rows.push_back(r);
  }
  return rows;
}

double envelope_band(const std::vector<ScalingRow>& rows) {
  if (rows.empty()) return 1.0;
  double lo = rows[0].ratio, hi = rows[0].ratio;
  for (const auto& r : rows) {
    lo = std::min(lo, r.ratio);
    hi = std::max(hi, r.ratio);
  }
  return hi / lo;
}

}  // namespace slimnoc
