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

#include "slimnoc/traffic.hpp"

#include <cassert>

#include "slimnoc/errors.hpp"
#include "slimnoc/field.hpp"

namespace slimnoc {

const char* pattern_name(Pattern p) {
  switch (p) {
    case Pattern::rnd: return "RND";
    case Pattern::shf: return "SHF";
    case Pattern::rev: return "REV";
    case Pattern::adv1: return "ADV1";
    case Pattern::adv2: return "ADV2";
    case Pattern::trace: return "TRACE";
  }
  return "RND";
}

Pattern pattern_from(const std::string& name) {
  if (name == "RND" || name == "rnd") return Pattern::rnd;
  if (name == "SHF" || name == "shf") return Pattern::shf;
  if (name == "REV" || name == "rev") return Pattern::rev;
  if (name == "ADV1" || name == "adv1") return Pattern::adv1;
  if (name == "ADV2" || name == "adv2") return Pattern::adv2;
  if (name == "TRACE" || name == "trace") return Pattern::trace;
  throw Error(errc::bad_input, "unknown traffic pattern: " + name);
}

namespace {

std::vector<int> adv1_partners(const Topology& t) {
  std::vector<int> partner(t.n_routers);
  if (t.kind == TopoKind::slim_noc) {
    FieldTable f = make_field(t.q);
    for (int i = 0; i < t.n_routers; ++i) {
      const RouterLabel& l = t.labels[i];
      int a = l.a - 1, b = l.b - 1;
      if (l.g == 0) {
        int c = f.sub(b, f.mul(a, a));  // [0|a,b] ~ [1|a, b - a^2]
        partner[i] = label_index({1, l.a, c + 1}, t.q);
      } else {
        int bb = f.add(b, f.mul(a, a));
        partner[i] = label_index({0, l.a, bb + 1}, t.q);
      }
      assert(t.has_edge(i, partner[i]));
    }
    return partner;
  }
  for (int i = 0; i < t.n_routers; ++i) partner[i] = t.adj[i].empty() ? i : t.adj[i][0];
  return partner;
}

std::vector<int> adv2_partners(const Topology& t) {
  std::vector<int> partner(t.n_routers);
  if (t.kind == TopoKind::slim_noc) {
    for (int i = 0; i < t.n_routers; ++i) {
      const RouterLabel& l = t.labels[i];
      partner[i] = label_index({l.g, l.a % t.q + 1, l.b}, t.q);
    }
    return partner;
  }
  for (int i = 0; i < t.n_routers; ++i) {
    auto dist = bfs_distances(t, i);
    int best = -1;
    for (int j = 0; j < t.n_routers; ++j) {
      if (dist[j] == 2) {
        best = j;
        break;
      }
    }
    partner[i] = best >= 0 ? best : (t.adj[i].empty() ? i : t.adj[i][0]);
  }
  return partner;
}

}  // namespace

TrafficModel TrafficModel::make(Pattern pattern, const Topology& topo) {
  TrafficModel m;
  m.pattern_ = pattern;
  m.n_nodes_ = static_cast<int>(topo.n_nodes());
  m.p_ = topo.p;
  int bits = 0;
  while ((2 << bits) <= m.n_nodes_) ++bits;
  m.bits_ = bits;  // floor(log2(N)) for N >= 2
  if (pattern == Pattern::adv1) m.partner_ = adv1_partners(topo);
  if (pattern == Pattern::adv2) m.partner_ = adv2_partners(topo);
  return m;
}

int TrafficModel::destination(int src_node, Rng& rng) const {
  const int n = n_nodes_;
  switch (pattern_) {
    case Pattern::rnd:
      return (src_node + 1 + rng.below(n - 1)) % n;
    case Pattern::shf: {
      if (bits_ == 0) return src_node;
      int mask = (1 << bits_) - 1;
      int v = src_node & mask;
      int rot = ((v << 1) | (v >> (bits_ - 1))) & mask;
      return rot % n;
    }
    case Pattern::rev: {
      if (bits_ == 0) return src_node;
      int v = src_node & ((1 << bits_) - 1);
      int out = 0;
      for (int b = 0; b < bits_; ++b) {
        out = (out << 1) | (v & 1);
        v >>= 1;
      }
      return out % n;
    }
    case Pattern::adv1:
    case Pattern::adv2: {
      int router = src_node / p_;
      int slot = src_node % p_;
      return partner_[router] * p_ + slot;
    }
    case Pattern::trace:
      throw Error(errc::bad_input, "trace destinations come from the trace file");
  }
  return src_node;
}

}  // namespace slimnoc
