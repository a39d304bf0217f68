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

#ifndef SLIMNOC_SIM_HPP
#define SLIMNOC_SIM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "slimnoc/layout.hpp"
#include "slimnoc/routing.hpp"
#include "slimnoc/topology.hpp"
#include "slimnoc/traffic.hpp"

namespace slimnoc {

/// Buffering strategies. EB-* use deep per-VC input buffers with credit flow
/// control over fixed-latency links. CBR-x and EL-Links use single-flit I/O
/// staging over elastic links whose pipeline latches store flits with per-VC
/// backpressure; CBR adds a central buffer shared by all ports.
enum class Buffering { eb_small, eb_large, eb_var_s, eb_var_n, cbr, el_links };

const char* buffering_name(Buffering b);
/// Accepts "EB-Small", "EB-Large", "EB-Var-S", "EB-Var-N", "EL-Links",
/// "CBR" or "CBR-<x>" (which also sets the central buffer size).
Buffering buffering_from(const std::string& name, int* cb_size = nullptr);

struct SimConfig {
  const Topology* topo = nullptr;
  const Layout* layout = nullptr;
  const RoutingTable* table = nullptr;
  const VcPolicy* policy = nullptr;

  Buffering buffering = Buffering::eb_var_n;
  int cb_size = 20;
  int vc = 2;
  int packet_flits = 6;
  double injection_rate = 0.1;  // flits per node per cycle
  Pattern pattern = Pattern::rnd;
  int h = 1;                    // grid hops per link cycle
  long long warmup_cycles = 20000;
  long long measure_cycles = 100000;
  uint64_t seed = 1;
  bool link_mode_avg = false;   // every link uses the mean wire length
  long long stall_bound = 50000;
  long long drain_bound = 2000000;
  double cycle_time_ns = 0.5;
  std::string trace_path;
  bool trace_replies = false;   // 2-flit reads trigger a 6-flit reply
  bool verify_cdg = true;
  bool conservation_checks = false;
};

struct SimReport {
  double avg_latency_cycles = 0.0;
  double avg_latency_ns = 0.0;
  double throughput = 0.0;  // accepted flits per node per cycle in the window
  long long injected_packets = 0;
  long long ejected_packets = 0;
  long long injected_flits = 0;
  long long ejected_flits = 0;
  long long measured_packets = 0;
  long long in_flight_at_end = 0;
  long long cycles_run = 0;
  bool saturated = false;
  double zero_load_latency = 0.0;
  long long cb_bypass = 0;    // head traversals through the 2-cycle path
  long long cb_buffered = 0;  // head traversals through the central buffer
  double offered_rate = 0.0;
  uint64_t seed = 0;
};

/// Runs one deterministic cycle-level simulation. Throws
/// Error(setup_error) when the routing/VC combination fails the channel
/// dependency check and Error(stall_error) when no flit makes progress for
/// stall_bound cycles.
SimReport run(const SimConfig& cfg);

struct SweepPoint {
  double rate = 0.0;
  SimReport report;
};

/// One run per rate (ascending). Saturation is flagged when the average
/// latency exceeds 5x the zero-load latency or acceptance drops below 90% of
/// the offered load.
std::vector<SweepPoint> sweep(const SimConfig& cfg, const std::vector<double>& rates);

/// Highest injection rate that does not saturate, located by bisection with
/// shortened runs.
double measure_saturation(SimConfig cfg, double lo = 0.01, double hi = 1.0, int steps = 7);

/// Buffer depths implied by the strategy: per-VC input depth per directed
/// link, staging sizes, central buffer and node queue sizes. EB-Var-S and
/// EB-Var-N size each input buffer to the link round trip time at H = 9 and
/// H = 1 respectively; port_total reports the whole-port footprint
/// (depth x |VC|), the delta_ij of the cost model.
struct BufferSpec {
  Buffering strategy = Buffering::eb_var_n;
  int vc = 2;
  std::vector<int> input_per_vc;  // indexed by directed link id
  int output_staging_per_vc = 1;
  int cb = 0;
  int inj_queue = 20;
  int ej_queue = 20;

  int port_total(int dlink) const { return input_per_vc[dlink] * vc; }
};

BufferSpec buffer_sizes_for(const SimConfig& cfg);

/// Mean zero-load packet latency: per-hop router and link cycles plus
/// serialization, averaged over distinct router pairs.
double analytic_zero_load_latency(const SimConfig& cfg);

/// One trace record: a message of `flits` flits from src_node to dst_node
/// generated at `cycle`.
struct TraceRecord {
  long long cycle = 0;
  int src_node = 0;
  int dst_node = 0;
  int flits = 1;
};

std::vector<TraceRecord> load_trace(const std::string& path);

}  // namespace slimnoc

#endif
