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

#include "slimnoc/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "slimnoc/errors.hpp"

namespace slimnoc {

namespace {

std::string format_fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace

json field_to_json(const FieldTable& f) {
  json j;
  j["q"] = f.q;
  j["characteristic"] = f.characteristic;
  j["degree"] = f.degree;
  json names = json::array();
  for (int e = 0; e < f.q; ++e) names.push_back(f.element_name(e));
  j["elements"] = names;
  json add = json::array(), mul = json::array();
  for (int a = 0; a < f.q; ++a) {
    json ra = json::array(), rm = json::array();
    for (int b = 0; b < f.q; ++b) {
      ra.push_back(f.add(a, b));
      rm.push_back(f.mul(a, b));
    }
    add.push_back(ra);
    mul.push_back(rm);
  }
  j["add"] = add;
  j["mul"] = mul;
  j["neg"] = f.neg_tab;
  return j;
}

json topology_to_json(const Topology& t) {
  json j;
  j["name"] = t.name;
  j["kind"] = topo_kind_name(t.kind);
  j["routers"] = t.n_routers;
  j["p"] = t.p;
  if (t.kind == TopoKind::slim_noc) {
    j["q"] = t.q;
    json labels = json::array();
    for (const RouterLabel& l : t.labels) labels.push_back({{"g", l.g}, {"a", l.a}, {"b", l.b}});
    j["labels"] = labels;
  }
  if (t.grid.rows > 0) {
    j["grid"] = {{"rows", t.grid.rows},     {"cols", t.grid.cols},
                 {"part_x", t.grid.part_x}, {"part_y", t.grid.part_y},
                 {"sub_rows", t.grid.sub_rows}, {"sub_cols", t.grid.sub_cols}};
  }
  json edges = json::array();
  for (const auto& [a, b] : t.edges()) edges.push_back({a, b});
  j["edges"] = edges;
  return j;
}

Topology topology_from_json(const json& j) {
  Topology t;
  t.name = j.at("name").get<std::string>();
  t.kind = topo_kind_from(j.at("kind").get<std::string>());
  t.n_routers = j.at("routers").get<int>();
  t.p = j.at("p").get<int>();
  if (j.contains("q")) t.q = j["q"].get<int>();
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) {
      t.labels.push_back({l.at("g").get<int>(), l.at("a").get<int>(), l.at("b").get<int>()});
    }
  }
  if (j.contains("grid")) {
    const auto& g = j["grid"];
    t.grid.rows = g.at("rows").get<int>();
    t.grid.cols = g.at("cols").get<int>();
    t.grid.part_x = g.value("part_x", 1);
    t.grid.part_y = g.value("part_y", 1);
    t.grid.sub_rows = g.value("sub_rows", 0);
    t.grid.sub_cols = g.value("sub_cols", 0);
  }
  std::vector<std::set<int>> adj(t.n_routers);
  for (const auto& e : j.at("edges")) {
    int a = e.at(0).get<int>(), b = e.at(1).get<int>();
    if (a < 0 || b < 0 || a >= t.n_routers || b >= t.n_routers || a == b) {
      throw Error(errc::bad_input, "bad edge in topology file");
    }
    adj[a].insert(b);
    adj[b].insert(a);
  }
  t.adj.resize(t.n_routers);
  for (int i = 0; i < t.n_routers; ++i) t.adj[i].assign(adj[i].begin(), adj[i].end());
  return t;
}

std::string topology_to_dot(const Topology& t) {
  std::ostringstream os;
  os << "graph \"" << t.name << "\" {\n";
  os << "  node [shape=circle];\n";
  for (int i = 0; i < t.n_routers; ++i) {
    os << "  r" << i;
    if (t.kind == TopoKind::slim_noc) {
      const RouterLabel& l = t.labels[i];
      os << " [label=\"[" << l.g << "|" << l.a << "," << l.b << "]\"]";
    }
    os << ";\n";
  }
  for (const auto& [a, b] : t.edges()) os << "  r" << a << " -- r" << b << ";\n";
  os << "}\n";
  return os.str();
}

json layout_to_json(const Layout& l) {
  json j;
  j["kind"] = layout_kind_name(l.kind);
  j["extent"] = {{"x", l.extent_x}, {"y", l.extent_y}};
  if (l.kind == LayoutKind::rand) j["seed"] = l.seed;
  json coords = json::array();
  for (int i = 0; i < l.n(); ++i) coords.push_back({{"router", i}, {"x", l.x[i]}, {"y", l.y[i]}});
  j["coords"] = coords;
  return j;
}

Layout layout_from_json(const json& j) {
  Layout l;
  l.kind = layout_kind_from(j.at("kind").get<std::string>());
  l.extent_x = j.at("extent").at("x").get<int>();
  l.extent_y = j.at("extent").at("y").get<int>();
  if (j.contains("seed")) l.seed = j["seed"].get<uint64_t>();
  const auto& coords = j.at("coords");
  l.x.resize(coords.size());
  l.y.resize(coords.size());
  for (const auto& c : coords) {
    int r = c.at("router").get<int>();
    if (r < 0 || r >= static_cast<int>(coords.size())) {
      throw Error(errc::bad_input, "bad router id in layout file");
    }
    l.x[r] = c.at("x").get<int>();
    l.y[r] = c.at("y").get<int>();
  }
  return l;
}

std::string layout_to_csv(const Layout& l) {
  std::ostringstream os;
  os << "router,x,y\n";
  for (int i = 0; i < l.n(); ++i) os << i << "," << l.x[i] << "," << l.y[i] << "\n";
  return os.str();
}

json routing_to_json(const RoutingTable& t) {
  json j;
  j["n"] = t.n;
  j["next_hop"] = t.next_hop_tab;
  j["path_len"] = t.path_len_tab;
  return j;
}

RoutingTable routing_from_json(const json& j) {
  RoutingTable t;
  t.n = j.at("n").get<int>();
  t.next_hop_tab = j.at("next_hop").get<std::vector<int>>();
  t.path_len_tab = j.at("path_len").get<std::vector<int>>();
  if (t.next_hop_tab.size() != static_cast<size_t>(t.n) * t.n ||
      t.path_len_tab.size() != static_cast<size_t>(t.n) * t.n) {
    throw Error(errc::bad_input, "routing table has wrong dimensions");
  }
  return t;
}

std::string crossing_to_csv(const CrossingGrid& g) {
  std::ostringstream os;
  for (int y = 1; y <= g.extent_y; ++y) {
    for (int x = 1; x <= g.extent_x; ++x) {
      if (x > 1) os << ",";
      os << g.at(x, y);
    }
    os << "\n";
  }
  return os.str();
}

json constraint_to_json(const ConstraintReport& r) {
  json j;
  j["pass"] = r.pass;
  j["w_limit"] = r.w_limit;
  j["link_width"] = r.link_width;
  j["count_wires"] = r.count_wires;
  j["max_links"] = r.max_links;
  j["max_wires"] = r.max_wires;
  json v = json::array();
  for (const Violation& x : r.violations) {
    v.push_back({{"x", x.x}, {"y", x.y}, {"links", x.links}, {"wires", x.wires}});
  }
  j["violations"] = v;
  return j;
}

json cost_report_json(const Topology& t, const Layout& l, const BufferParams& p) {
  json j;
  j["layout"] = layout_kind_name(l.kind);
  j["h"] = p.h;
  j["vc"] = p.vc;
  j["b_over_l"] = p.b_over_l;
  j["m"] = avg_wire_length(t, l);
  j["delta_eb"] = total_edge_buffers(t, l, p);
  j["delta_cb"] = total_central_buffers(t.n_routers, t.k_net(), p);
  json edges = json::array();
  for (const auto& [a, b] : t.edges()) {
    edges.push_back({{"i", a},
                     {"j", b},
                     {"dist", l.dist(a, b)},
                     {"rtt", rtt(a, b, l, p.h)},
                     {"delta", edge_buffer_size(a, b, l, p)}});
  }
  j["per_edge"] = edges;
  return j;
}

json sim_report_to_json(const SimReport& r) {
  json j;
  j["avg_latency_cycles"] = r.avg_latency_cycles;
  j["avg_latency_ns"] = r.avg_latency_ns;
  j["throughput"] = r.throughput;
  j["offered_rate"] = r.offered_rate;
  j["injected_packets"] = r.injected_packets;
  j["ejected_packets"] = r.ejected_packets;
  j["injected_flits"] = r.injected_flits;
  j["ejected_flits"] = r.ejected_flits;
  j["measured_packets"] = r.measured_packets;
  j["in_flight_at_end"] = r.in_flight_at_end;
  j["cycles_run"] = r.cycles_run;
  j["saturated"] = r.saturated;
  j["zero_load_latency"] = r.zero_load_latency;
  j["cb_bypass"] = r.cb_bypass;
  j["cb_buffered"] = r.cb_buffered;
  j["seed"] = r.seed;
  return j;
}

std::string sweep_to_csv(const std::vector<SweepPoint>& points, double cycle_time_ns) {
  std::ostringstream os;
  os << "rate,latency_cycles,latency_ns,throughput,saturated\n";
  for (const SweepPoint& p : points) {
    os << format_fixed(p.rate, 6) << "," << format_fixed(p.report.avg_latency_cycles, 4) << ","
       << format_fixed(p.report.avg_latency_cycles * cycle_time_ns, 4) << ","
       << format_fixed(p.report.throughput, 6) << "," << (p.report.saturated ? 1 : 0) << "\n";
  }
  return os.str();
}

json scaling_to_json(const std::vector<ScalingRow>& rows) {
  json j = json::array();
  for (const ScalingRow& r : rows) {
    j.push_back({{"q", r.q}, {"u", r.u}, {"n", r.n_nodes}, {"m", r.m}, {"ratio", r.ratio}});
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(errc::missing_input, "cannot write file: " + path);
  out << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::missing_input, "cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  return json::parse(read_text_file(path));
}

void write_json_file(const std::string& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace slimnoc
