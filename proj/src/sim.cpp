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

#include "slimnoc/sim.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <fstream>
#include <sstream>

#include "slimnoc/cost.hpp"
#include "slimnoc/errors.hpp"

namespace slimnoc {

const char* buffering_name(Buffering b) {
  switch (b) {
    case Buffering::eb_small: return "EB-Small";
    case Buffering::eb_large: return "EB-Large";
    case Buffering::eb_var_s: return "EB-Var-S";
    case Buffering::eb_var_n: return "EB-Var-N";
    case Buffering::cbr: return "CBR";
    case Buffering::el_links: return "EL-Links";
  }
  return "EB-Var-N";
}

Buffering buffering_from(const std::string& name, int* cb_size) {
  if (name == "EB-Small") return Buffering::eb_small;
  if (name == "EB-Large") return Buffering::eb_large;
  if (name == "EB-Var-S") return Buffering::eb_var_s;
  if (name == "EB-Var-N") return Buffering::eb_var_n;
  if (name == "EL-Links") return Buffering::el_links;
  if (name.rfind("CBR", 0) == 0) {
    if (name.size() > 4 && name[3] == '-') {
      int x = std::atoi(name.c_str() + 4);
      if (x <= 0) throw Error(errc::bad_input, "bad central buffer size in: " + name);
      if (cb_size) *cb_size = x;
    }
    return Buffering::cbr;
  }
  throw Error(errc::bad_input, "unknown buffering strategy: " + name);
}

namespace {

constexpr int kEmpty = -1;

struct QFlit {
  int32_t pkt = kEmpty;
  int16_t idx = 0;       // flit index within the packet
  int16_t hop = 0;       // hops already traversed == index of the next link
  int64_t eligible = 0;  // first cycle this flit may be granted
};

struct PacketState {
  int32_t src_node = 0, dst_node = 0;
  int32_t src_router = 0, dst_router = 0;
  int16_t n_flits = 0;
  int16_t hops = 0;
  int64_t gen_cycle = 0;
  uint32_t cb_mask = 0;  // per-hop central buffer commitment
  bool live = false;
};

struct Pending {
  int64_t gen = 0;
  int32_t dst = 0;
  int16_t flits = 0;
  int16_t pushed = 0;
  int32_t pkt = kEmpty;  // assigned once the first flit enters the injection queue
};

struct InUnit {
  std::deque<QFlit> q;
  int cap = 1;
  int32_t upstream = kEmpty;  // directed link feeding this unit, kEmpty for injection
};

class Sim {
 public:
  explicit Sim(const SimConfig& cfg)
      : cfg_(cfg), t_(*cfg.topo), links_(t_), vcs_(cfg.vc), traffic_(), rng_(cfg.seed) {
    if (!cfg.topo || !cfg.layout || !cfg.table || !cfg.policy) {
      throw Error(errc::setup_error, "simulation needs topology, layout, table and policy");
    }
    if (cfg.injection_rate < 0.0 || cfg.injection_rate > 1.0) {
      throw Error(errc::bad_input, "injection rate must lie in [0,1]");
    }
    if (cfg.measure_cycles < 1 || cfg.packet_flits < 1) {
      throw Error(errc::bad_input, "measure_cycles and packet_flits must be >= 1");
    }
    if (cfg.verify_cdg && !check_deadlock_free(t_, *cfg.table, *cfg.policy)) {
      throw Error(errc::setup_error, "channel dependency graph has a cycle");
    }
    elastic_ = cfg.buffering == Buffering::cbr || cfg.buffering == Buffering::el_links;
    n_nodes_ = static_cast<int>(t_.n_nodes());
    if (cfg.pattern != Pattern::trace) {
      traffic_ = TrafficModel::make(cfg.pattern, t_);
    } else {
      trace_ = load_trace(cfg.trace_path);
    }
    spec_ = buffer_sizes_for(cfg);
    build_links();
    build_paths();
    build_units();
    zero_load_ = analytic_zero_load_latency(cfg);
    gen_end_ = cfg.warmup_cycles + cfg.measure_cycles;
  }

  SimReport go();

 private:
  // ---- setup ----------------------------------------------------------
  void build_links() {
    int n = links_.n_links();
    link_lat_.resize(n);
    in_port_at_to_.resize(n);
    double avg = avg_wire_length(t_, *cfg_.layout);
    for (int l = 0; l < n; ++l) {
      int from = links_.from_of(l), to = links_.to_of(l);
      double d = cfg_.link_mode_avg ? avg : cfg_.layout->dist(from, to);
      link_lat_[l] = std::max(1, static_cast<int>(std::ceil(d / cfg_.h - 1e-9)));
      in_port_at_to_[l] = links_.port_of(to, from);
    }
    owner_.assign(static_cast<size_t>(n) * vcs_, kEmpty);
    if (elastic_) {
      stage_base_.resize(n + 1, 0);
      for (int l = 0; l < n; ++l) stage_base_[l + 1] = stage_base_[l] + (link_lat_[l] + 1) * vcs_;
      stages_.assign(stage_base_[n], QFlit{});
      el_count_.assign(n, 0);
    } else {
      sched_.resize(n);
      credits_.resize(static_cast<size_t>(n) * vcs_);
      for (int l = 0; l < n; ++l) {
        for (int v = 0; v < vcs_; ++v) credits_[l * vcs_ + v] = spec_.input_per_vc[l];
      }
      credit_ret_.resize(static_cast<size_t>(n) * vcs_);
    }
    if (cfg_.buffering == Buffering::cbr) {
      cb_free_.assign(t_.n_routers, cfg_.cb_size);
      cb_q_.resize(static_cast<size_t>(n) * vcs_);
    }
    out_busy_.assign(n, -1);
    rr_out_.assign(n, 0);
    rr_cb_out_.assign(t_.n_routers, 0);
    rr_cb_in_.assign(t_.n_routers, 0);
  }

  void build_paths() {
    int nr = t_.n_routers;
    path_off_.assign(static_cast<size_t>(nr) * nr + 1, 0);
    std::vector<int32_t> plinks;
    std::vector<int8_t> pvcs;
    int max_vc = 0;
    for (int s = 0; s < nr; ++s) {
      for (int d = 0; d < nr; ++d) {
        size_t cell = static_cast<size_t>(s) * nr + d;
        if (s == d) {
          path_off_[cell + 1] = path_off_[cell];
          continue;
        }
        std::vector<int> p = cfg_.table->path(s, d);
        int hops = static_cast<int>(p.size()) - 1;
        for (int h = 0; h < hops; ++h) {
          int port = links_.port_of(p[h], p[h + 1]);
          if (port < 0) throw Error(errc::setup_error, "routing table uses a non-edge");
          int vc = cfg_.policy->vc_for(t_, p, h);
          max_vc = std::max(max_vc, vc);
          plinks.push_back(links_.id(p[h], port));
          pvcs.push_back(static_cast<int8_t>(vc));
        }
        path_off_[cell + 1] = path_off_[cell] + hops;
      }
    }
    if (max_vc >= vcs_) {
      throw Error(errc::setup_error, "VC policy uses class " + std::to_string(max_vc) +
                                         " but only " + std::to_string(vcs_) + " VCs configured");
    }
    path_link_ = std::move(plinks);
    path_vc_ = std::move(pvcs);
  }

  void build_units() {
    unit_base_.resize(t_.n_routers + 1, 0);
    for (int r = 0; r < t_.n_routers; ++r) {
      unit_base_[r + 1] = unit_base_[r] + (t_.degree(r) + t_.p) * vcs_;
    }
    units_.resize(unit_base_[t_.n_routers]);
    for (int r = 0; r < t_.n_routers; ++r) {
      int deg = t_.degree(r);
      for (int port = 0; port < deg; ++port) {
        int up = links_.id(t_.adj[r][port], links_.port_of(t_.adj[r][port], r));
        for (int v = 0; v < vcs_; ++v) {
          InUnit& u = units_[unit_base_[r] + port * vcs_ + v];
          u.cap = spec_.input_per_vc[up];
          u.upstream = up;
        }
      }
      for (int s = 0; s < t_.p; ++s) {
        InUnit& u = units_[unit_base_[r] + (deg + s) * vcs_];
        u.cap = spec_.inj_queue;
        u.upstream = kEmpty;
      }
    }
    nodes_.resize(n_nodes_);
  }

  // ---- small accessors -------------------------------------------------
  QFlit& stage(int link, int s, int v) { return stages_[stage_base_[link] + s * vcs_ + v]; }
  InUnit& in_unit(int router, int port, int v) { return units_[unit_base_[router] + port * vcs_ + v]; }
  int path_link(const PacketState& pk, int hop) const {
    return path_link_[path_off_[static_cast<size_t>(pk.src_router) * t_.n_routers + pk.dst_router] + hop];
  }
  int path_vc(const PacketState& pk, int hop) const {
    return path_vc_[path_off_[static_cast<size_t>(pk.src_router) * t_.n_routers + pk.dst_router] + hop];
  }

  int alloc_packet() {
    if (!free_pkts_.empty()) {
      int id = free_pkts_.back();
      free_pkts_.pop_back();
      return id;
    }
    pkts_.push_back({});
    return static_cast<int>(pkts_.size()) - 1;
  }

  void progress() { last_progress_ = now_; }

  // ---- generation ------------------------------------------------------
  void generate() {
    if (cfg_.pattern == Pattern::trace) {
      while (trace_pos_ < trace_.size() && trace_[trace_pos_].cycle <= now_) {
        const TraceRecord& rec = trace_[trace_pos_++];
        if (rec.src_node < 0 || rec.src_node >= n_nodes_ || rec.dst_node < 0 ||
            rec.dst_node >= n_nodes_) {
          throw Error(errc::bad_input, "trace node id out of range");
        }
        Pending pd;
        pd.gen = std::max<int64_t>(rec.cycle, now_);
        pd.dst = rec.dst_node;
        pd.flits = static_cast<int16_t>(rec.flits);
        nodes_[rec.src_node].push_back(pd);
      }
      return;
    }
    double p_pkt = cfg_.injection_rate / cfg_.packet_flits;
    for (int node = 0; node < n_nodes_; ++node) {
      if (nodes_[node].size() >= kSourceCap) continue;  // deep backlog, source stalls
      if (rng_.chance(p_pkt)) {
        Pending pd;
        pd.gen = now_;
        pd.dst = traffic_.destination(node, rng_);
        pd.flits = static_cast<int16_t>(cfg_.packet_flits);
        nodes_[node].push_back(pd);
      }
    }
  }

  void refill_injection(bool drain_only) {
    for (int node = 0; node < n_nodes_; ++node) {
      auto& srcq = nodes_[node];
      int router = node / t_.p;
      int slot = node % t_.p;
      InUnit& u = in_unit(router, t_.degree(router) + slot, 0);
      while (!srcq.empty() && static_cast<int>(u.q.size()) < u.cap) {
        Pending& pd = srcq.front();
        if (drain_only && pd.pushed == 0) break;  // no new packets while draining
        if (pd.pkt == kEmpty) {
          int id = alloc_packet();
          PacketState& pk = pkts_[id];
          pk = {};
          pk.live = true;
          pk.src_node = node;
          pk.dst_node = pd.dst;
          pk.src_router = router;
          pk.dst_router = pd.dst / t_.p;
          pk.n_flits = pd.flits;
          pk.hops = static_cast<int16_t>(cfg_.table->path_len(pk.src_router, pk.dst_router));
          pk.gen_cycle = pd.gen;
          pd.pkt = id;
          ++injected_packets_;
        }
        u.q.push_back({pd.pkt, pd.pushed, 0, now_ + 1});
        ++pd.pushed;
        ++injected_flits_;
        ++in_flight_;
        progress();
        if (pd.pushed == pd.flits) srcq.pop_front();
      }
    }
  }

  // ---- ejection --------------------------------------------------------
  void eject(const QFlit& f) {
    PacketState& pk = pkts_[f.pkt];
    ++ejected_flits_;
    --in_flight_;
    if (now_ >= cfg_.warmup_cycles && now_ < gen_end_) ++window_ejected_flits_;
    progress();
    if (f.idx == pk.n_flits - 1) {  // tail
      ++ejected_packets_;
      if (pk.gen_cycle >= cfg_.warmup_cycles && pk.gen_cycle < gen_end_) {
        latency_sum_ += static_cast<double>(now_ - pk.gen_cycle);
        ++measured_packets_;
      }
      if (cfg_.trace_replies && pk.n_flits == 2 && now_ < gen_end_) {
        Pending pd;
        pd.gen = now_;
        pd.dst = pk.src_node;
        pd.flits = 6;
        nodes_[pk.dst_node].push_back(pd);
      }
      pk.live = false;
      free_pkts_.push_back(f.pkt);
    }
  }

  // Deliver a flit leaving a link: eject at its final router or append to
  // the input buffer. Returns false when the input has no space (elastic
  // links stall; credited links must never hit this).
  bool deliver(int link, const QFlit& f, int vc) {
    PacketState& pk = pkts_[f.pkt];
    if (f.hop == pk.hops) {
      eject(f);
      if (!elastic_) return_credit(link, vc);
      return true;
    }
    int to = links_.to_of(link);
    InUnit& u = in_unit(to, in_port_at_to_[link], vc);
    if (static_cast<int>(u.q.size()) >= u.cap) {
      assert(elastic_ && "credited link overran an input buffer");
      return false;
    }
    QFlit g = f;
    g.eligible = now_ + 1;
    u.q.push_back(g);
    progress();
    return true;
  }

  void return_credit(int link, int vc) {
    credit_ret_[link * vcs_ + vc].push_back(now_ + 1 + link_lat_[link]);
  }

  int credits_now(int link, int vc) {
    auto& pend = credit_ret_[link * vcs_ + vc];
    int& c = credits_[link * vcs_ + vc];
    while (!pend.empty() && pend.front() <= now_) {
      ++c;
      pend.pop_front();
    }
    return c;
  }

  // ---- phase A: movement toward inputs ----------------------------------
  void advance_links() {
    int n = links_.n_links();
    if (!elastic_) {
      for (int l = 0; l < n; ++l) {
        auto& q = sched_[l];
        while (!q.empty() && q.front().eligible <= now_) {  // eligible holds the arrival time
          QFlit f = q.front();
          int vc = path_vc(pkts_[f.pkt], f.hop - 1);
          q.pop_front();
          bool ok = deliver(l, f, vc);
          (void)ok;
          assert(ok);
        }
      }
      return;
    }
    for (int l = 0; l < n; ++l) {
      if (el_count_[l] == 0) continue;
      int lat = link_lat_[l];
      // delivery boundary, then inner boundaries toward the source
      for (int v0 = 0; v0 < vcs_; ++v0) {
        int v = (static_cast<int>(now_) + v0) % vcs_;
        QFlit& slotf = stage(l, lat, v);
        if (slotf.pkt == kEmpty) continue;
        if (deliver(l, slotf, v)) {
          slotf.pkt = kEmpty;
          --el_count_[l];
          break;
        }
      }
      for (int s = lat - 1; s >= 0; --s) {
        for (int v0 = 0; v0 < vcs_; ++v0) {
          int v = (static_cast<int>(now_) + s + v0) % vcs_;
          QFlit& cur = stage(l, s, v);
          if (cur.pkt == kEmpty) continue;
          QFlit& nxt = stage(l, s + 1, v);
          if (nxt.pkt != kEmpty) continue;
          nxt = cur;
          cur.pkt = kEmpty;
          progress();
          break;
        }
      }
    }
  }

  // ---- phase B: router allocation ---------------------------------------
  void launch(int link, const QFlit& f, int vc) {
    // switch traversal happens next cycle; the wire occupies the following
    // link_lat cycles
    PacketState& pk = pkts_[f.pkt];
    QFlit g{f.pkt, f.idx, static_cast<int16_t>(f.hop + 1), 0};
    if (elastic_) {
      QFlit& s0 = stage(link, 0, vc);
      assert(s0.pkt == kEmpty);
      s0 = g;
      ++el_count_[link];
    } else {
      g.eligible = now_ + 1 + link_lat_[link];
      sched_[link].push_back(g);
      --credits_[link * vcs_ + vc];
    }
    int32_t& own = owner_[link * vcs_ + vc];
    if (f.idx == 0) own = f.pkt;
    if (f.idx == pk.n_flits - 1) own = kEmpty;
    out_busy_[link] = now_;
    progress();
  }

  void cb_drain(int router) {
    int deg = t_.degree(router);
    int slots = deg * vcs_;
    if (slots == 0) return;
    int start = rr_cb_out_[router] % slots;
    for (int k = 0; k < slots; ++k) {
      int sl = (start + k) % slots;
      int link = links_.id(router, sl / vcs_);
      int vc = sl % vcs_;
      auto& q = cb_q_[link * vcs_ + vc];
      if (q.empty() || q.front().eligible > now_) continue;
      if (out_busy_[link] == now_) continue;
      QFlit f = q.front();
      int32_t own = owner_[link * vcs_ + vc];
      bool is_head = f.idx == 0;
      if (is_head ? own != kEmpty : own != f.pkt) continue;
      if (elastic_ && stage(link, 0, vc).pkt != kEmpty) continue;
      q.pop_front();
      ++cb_free_[router];
      launch(link, f, vc);
      rr_cb_out_[router] = sl + 1;
      return;  // single central buffer read port
    }
  }

  void allocate(int router) {
    if (cfg_.buffering == Buffering::cbr) cb_drain(router);
    int deg = t_.degree(router);
    int n_units = (deg + t_.p) * vcs_;
    int cb_in_unit = -1;
    int cb_in_key = n_units;
    bool cb_in_commit = false;
    // per-output winners for this router, collected in one pass
    winner_unit_.assign(deg, -1);
    winner_key_.assign(deg, n_units);
    for (int lu = 0; lu < n_units; ++lu) {
      InUnit& u = units_[unit_base_[router] + lu];
      if (u.q.empty()) continue;
      QFlit& f = u.q.front();
      if (f.eligible > now_) continue;
      PacketState& pk = pkts_[f.pkt];
      if (f.hop == pk.hops) {
        // local delivery (source and destination share the router)
        QFlit g = f;
        u.q.pop_front();
        eject(g);
        continue;
      }
      int link = path_link(pk, f.hop);
      int vc = path_vc(pk, f.hop);
      int port = link - links_.id(router, 0);
      bool is_head = f.idx == 0;
      if (cfg_.buffering == Buffering::cbr && (pk.cb_mask >> f.hop) & 1u) {
        int key = (lu - rr_cb_in_[router] % n_units + n_units) % n_units;
        if (key < cb_in_key) {
          cb_in_key = key;
          cb_in_unit = lu;
          cb_in_commit = false;
        }
        continue;
      }
      int32_t own = owner_[link * vcs_ + vc];
      bool owner_ok = is_head ? own == kEmpty : own == f.pkt;
      bool channel_free = out_busy_[link] != now_ &&
                          (elastic_ ? stage(link, 0, vc).pkt == kEmpty : credits_now(link, vc) > 0);
      bool order_ok = cfg_.buffering != Buffering::cbr || !is_head || cb_q_[link * vcs_ + vc].empty();
      if (owner_ok && channel_free && order_ok) {
        int key = (lu - rr_out_[link] % n_units + n_units) % n_units;
        if (key < winner_key_[port]) {
          winner_key_[port] = key;
          winner_unit_[port] = lu;
        }
        continue;
      }
      // blocked at the output: a head may reserve the central buffer
      if (cfg_.buffering == Buffering::cbr && is_head && cb_free_[router] >= pk.n_flits) {
        int key = (lu - rr_cb_in_[router] % n_units + n_units) % n_units;
        if (key < cb_in_key) {
          cb_in_key = key;
          cb_in_unit = lu;
          cb_in_commit = true;
        }
      }
    }
    for (int port = 0; port < deg; ++port) {
      int lu = winner_unit_[port];
      if (lu < 0) continue;
      int link = links_.id(router, port);
      if (out_busy_[link] == now_) continue;
      InUnit& u = units_[unit_base_[router] + lu];
      QFlit f = u.q.front();
      PacketState& pk = pkts_[f.pkt];
      int vc = path_vc(pk, f.hop);
      u.q.pop_front();
      if (f.idx == 0 && cfg_.buffering == Buffering::cbr) ++cb_bypass_;
      if (!elastic_ && u.upstream != kEmpty) return_credit(u.upstream, lu % vcs_);
      launch(link, f, vc);
      rr_out_[link] = static_cast<uint16_t>(lu + 1);
    }
    if (cb_in_unit >= 0) {
      // single central buffer write port
      InUnit& u = units_[unit_base_[router] + cb_in_unit];
      QFlit f = u.q.front();
      PacketState& pk = pkts_[f.pkt];
      int link = path_link(pk, f.hop);
      int vc = path_vc(pk, f.hop);
      if (cb_in_commit) {
        pk.cb_mask |= 1u << f.hop;
        cb_free_[router] -= pk.n_flits;
        ++cb_buffered_;
      }
      u.q.pop_front();
      if (!elastic_ && u.upstream != kEmpty) return_credit(u.upstream, cb_in_unit % vcs_);
      QFlit g = f;
      g.eligible = now_ + 2;  // buffered path adds the write and read stages
      cb_q_[link * vcs_ + vc].push_back(g);
      rr_cb_in_[router] = static_cast<uint16_t>(cb_in_unit + 1);
      progress();
    }
  }

  // ---- main loop --------------------------------------------------------
 public:
  SimReport run_loop() {
    for (now_ = 0;; ++now_) {
      bool generating = now_ < gen_end_;
      if (generating && (cfg_.pattern == Pattern::trace || cfg_.injection_rate > 0.0)) generate();
      advance_links();
      refill_injection(!generating);
      for (int r = 0; r < t_.n_routers; ++r) allocate(r);
      if (cfg_.conservation_checks) {
        assert(injected_flits_ == ejected_flits_ + in_flight_);
      }
      if (!generating && in_flight_ == 0) break;
      if (in_flight_ > 0 && now_ - last_progress_ > cfg_.stall_bound) {
        throw Error(errc::stall_error, "no flit progress for " + std::to_string(cfg_.stall_bound) +
                                           " cycles at cycle " + std::to_string(now_));
      }
      if (now_ >= gen_end_ + cfg_.drain_bound) break;
    }
    SimReport rep;
    rep.seed = cfg_.seed;
    rep.cycles_run = now_ + 1;
    rep.injected_packets = injected_packets_;
    rep.ejected_packets = ejected_packets_;
    rep.injected_flits = injected_flits_;
    rep.ejected_flits = ejected_flits_;
    rep.measured_packets = measured_packets_;
    rep.in_flight_at_end = in_flight_;
    rep.avg_latency_cycles = measured_packets_ > 0 ? latency_sum_ / measured_packets_ : 0.0;
    rep.avg_latency_ns = rep.avg_latency_cycles * cfg_.cycle_time_ns;
    rep.throughput =
        static_cast<double>(window_ejected_flits_) / (static_cast<double>(n_nodes_) * cfg_.measure_cycles);
    rep.zero_load_latency = zero_load_;
    rep.cb_bypass = cb_bypass_;
    rep.cb_buffered = cb_buffered_;
    rep.offered_rate = cfg_.injection_rate;
    bool lat_sat = zero_load_ > 0 && rep.avg_latency_cycles > 5.0 * zero_load_;
    bool acc_sat = cfg_.injection_rate > 0 && rep.throughput < 0.9 * cfg_.injection_rate;
    rep.saturated = lat_sat || acc_sat || (measured_packets_ == 0 && injected_packets_ > 0);
    return rep;
  }

 private:
  static constexpr size_t kSourceCap = 4096;

  const SimConfig& cfg_;
  const Topology& t_;
  LinkIndex links_;
  int vcs_;
  TrafficModel traffic_;
  Rng rng_;
  bool elastic_ = false;
  int n_nodes_ = 0;
  int64_t gen_end_ = 0;
  double zero_load_ = 0.0;

  std::vector<int> link_lat_, in_port_at_to_;
  std::vector<std::deque<QFlit>> sched_;
  std::vector<int> stage_base_;
  std::vector<QFlit> stages_;
  std::vector<int> el_count_;
  std::vector<int32_t> owner_;
  std::vector<int> credits_;
  std::vector<std::deque<int64_t>> credit_ret_;
  std::vector<int> cb_free_;
  std::vector<std::deque<QFlit>> cb_q_;
  std::vector<int64_t> out_busy_;
  std::vector<uint16_t> rr_out_, rr_cb_out_, rr_cb_in_;
  std::vector<int> winner_unit_, winner_key_;

  std::vector<size_t> path_off_;
  std::vector<int32_t> path_link_;
  std::vector<int8_t> path_vc_;

  BufferSpec spec_;
  std::vector<InUnit> units_;
  std::vector<int> unit_base_;
  std::vector<std::deque<Pending>> nodes_;
  std::vector<PacketState> pkts_;
  std::vector<int> free_pkts_;
  std::vector<TraceRecord> trace_;
  size_t trace_pos_ = 0;

  int64_t now_ = 0, last_progress_ = 0;
  long long injected_packets_ = 0, ejected_packets_ = 0;
  long long injected_flits_ = 0, ejected_flits_ = 0, window_ejected_flits_ = 0;
  long long in_flight_ = 0, measured_packets_ = 0;
  long long cb_bypass_ = 0, cb_buffered_ = 0;
  double latency_sum_ = 0.0;
};

SimReport Sim::go() { return run_loop(); }

}  // namespace

SimReport run(const SimConfig& cfg) {
  Sim sim(cfg);
  return sim.go();
}

std::vector<SweepPoint> sweep(const SimConfig& cfg, const std::vector<double>& rates) {
  std::vector<SweepPoint> out;
  for (double r : rates) {
    SimConfig c = cfg;
    c.injection_rate = r;
    out.push_back({r, run(c)});
  }
  return out;
}

double measure_saturation(SimConfig cfg, double lo, double hi, int steps) {
  cfg.warmup_cycles = 5000;
  cfg.measure_cycles = 30000;
  cfg.drain_bound = 10000;
  auto saturated_at = [&](double rate) {
    SimConfig c = cfg;
    c.injection_rate = rate;
    return run(c).saturated;
  };
  if (!saturated_at(hi)) return hi;
  if (saturated_at(lo)) return lo;
  for (int i = 0; i < steps; ++i) {
    double mid = 0.5 * (lo + hi);
    if (saturated_at(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo;
}

BufferSpec buffer_sizes_for(const SimConfig& cfg) {
  if (!cfg.topo || !cfg.layout) throw Error(errc::setup_error, "need topology and layout");
  const Topology& t = *cfg.topo;
  LinkIndex links(t);
  BufferSpec s;
  s.strategy = cfg.buffering;
  s.vc = cfg.vc;
  s.input_per_vc.resize(links.n_links());
  s.cb = cfg.buffering == Buffering::cbr ? cfg.cb_size : 0;
  double avg = avg_wire_length(t, *cfg.layout);
  for (int l = 0; l < links.n_links(); ++l) {
    int from = links.from_of(l), to = links.to_of(l);
    int dist = cfg.link_mode_avg ? std::max(1, static_cast<int>(std::ceil(avg - 1e-9)))
                                 : cfg.layout->dist(from, to);
    switch (cfg.buffering) {
      case Buffering::eb_small: s.input_per_vc[l] = 5; break;
      case Buffering::eb_large: s.input_per_vc[l] = 15; break;
      case Buffering::eb_var_s: s.input_per_vc[l] = rtt_for_distance(dist, 9); break;
      case Buffering::eb_var_n: s.input_per_vc[l] = rtt_for_distance(dist, 1); break;
      case Buffering::cbr:
      case Buffering::el_links: s.input_per_vc[l] = 1; break;
    }
  }
  return s;
}

double analytic_zero_load_latency(const SimConfig& cfg) {
  const Topology& t = *cfg.topo;
  double avg = avg_wire_length(t, *cfg.layout);
  double sum = 0.0;
  long long pairs = 0;
  for (int s = 0; s < t.n_routers; ++s) {
    for (int d = 0; d < t.n_routers; ++d) {
      if (s == d) continue;
      std::vector<int> p = cfg.table->path(s, d);
      double lat = cfg.packet_flits - 1;
      for (size_t h = 0; h + 1 < p.size(); ++h) {
        double dist = cfg.link_mode_avg ? avg : cfg.layout->dist(p[h], p[h + 1]);
        lat += 2.0 + std::max(1.0, std::ceil(dist / cfg.h - 1e-9));
      }
      sum += lat;
      ++pairs;
    }
  }
  return pairs > 0 ? sum / pairs : 0.0;
}

std::vector<TraceRecord> load_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::missing_input, "cannot open trace file: " + path);
  std::vector<TraceRecord> recs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    TraceRecord r;
    if (!(ls >> r.cycle >> r.src_node >> r.dst_node >> r.flits)) {
      throw Error(errc::bad_input, "malformed trace line: " + line);
    }
    recs.push_back(r);
  }
  std::stable_sort(recs.begin(), recs.end(),
                   [](const TraceRecord& a, const TraceRecord& b) { return a.cycle < b.cycle; });
  return recs;
}

}  // namespace slimnoc
