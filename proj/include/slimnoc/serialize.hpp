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

#ifndef SLIMNOC_SERIALIZE_HPP
#define SLIMNOC_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "slimnoc/cost.hpp"
#include "slimnoc/field.hpp"
#include "slimnoc/layout.hpp"
#include "slimnoc/routing.hpp"
#include "slimnoc/sim.hpp"
#include "slimnoc/topology.hpp"
#include "slimnoc/wiring.hpp"

namespace slimnoc {

using json = nlohmann::json;

json field_to_json(const FieldTable& f);

json topology_to_json(const Topology& t);
Topology topology_from_json(const json& j);
std::string topology_to_dot(const Topology& t);

json layout_to_json(const Layout& l);
Layout layout_from_json(const json& j);
std::string layout_to_csv(const Layout& l);

json routing_to_json(const RoutingTable& t);
RoutingTable routing_from_json(const json& j);

std::string crossing_to_csv(const CrossingGrid& g);
json constraint_to_json(const ConstraintReport& r);

/// Cost report: average wire length, buffer totals and the per-edge
/// distance/RTT/buffer breakdown.
json cost_report_json(const Topology& t, const Layout& l, const BufferParams& p);

json sim_report_to_json(const SimReport& r);
std::string sweep_to_csv(const std::vector<SweepPoint>& points, double cycle_time_ns);

json scaling_to_json(const std::vector<ScalingRow>& rows);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace slimnoc

#endif
