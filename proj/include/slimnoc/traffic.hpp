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

#ifndef SLIMNOC_TRAFFIC_HPP
#define SLIMNOC_TRAFFIC_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "slimnoc/topology.hpp"

namespace slimnoc {

/// Deterministic RNG wrapper. Bounded draws avoid std::uniform_int_distribution
/// so streams are identical across standard libraries.
struct Rng {
  explicit Rng(uint64_t seed) : eng(seed) {}
  uint64_t next() { return eng(); }
  int below(int n) {
    return static_cast<int>((static_cast<__uint128_t>(next()) * static_cast<uint64_t>(n)) >> 64);
  }
  bool chance(double p) {
    return next() < static_cast<uint64_t>(p * 18446744073709551615.0);
  }
  std::mt19937_64 eng;
};

enum class Pattern { rnd, shf, rev, adv1, adv2, trace };

const char* pattern_name(Pattern p);
Pattern pattern_from(const std::string& name);

/// Synthetic destination generator.
///
/// RND draws uniformly over the other nodes. SHF rotates the low
/// floor(log2 N) bits of the node id left by one, REV reverses them. ADV1
/// targets the node of a fixed partner router one link away so each matched
/// link carries a full router's load; ADV2 targets a partner at distance two
/// so flows share intermediate routers. On a Slim NoC the ADV1 matching pairs
/// [0|a,b] with [1|a,b-a^2] (an inter-subgroup perfect matching) and ADV2
/// pairs [G|a,b] with [G|a+1,b], which is never adjacent. On other topologies
/// ADV1 falls back to the smallest neighbor and ADV2 to the smallest router
/// at distance two.
class TrafficModel {
 public:
  static TrafficModel make(Pattern pattern, const Topology& topo);

  int destination(int src_node, Rng& rng) const;
  Pattern pattern() const { return pattern_; }

 private:
  Pattern pattern_ = Pattern::rnd;
  int n_nodes_ = 0;
  int p_ = 1;
  int bits_ = 0;
  std::vector<int> partner_;  // adv1/adv2: per router
};

}  // namespace slimnoc

#endif
