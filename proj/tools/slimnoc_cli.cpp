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

// slimnoc: construct Slim NoC graphs from finite fields, place them on a die
// grid, evaluate wire/buffer cost models and measure latency/throughput with
// a cycle-level flit simulator against mesh/torus/FBF baselines.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slimnoc/cost.hpp"
#include "slimnoc/errors.hpp"
#include "slimnoc/field.hpp"
#include "slimnoc/layout.hpp"
#include "slimnoc/presets.hpp"
#include "slimnoc/routing.hpp"
#include "slimnoc/serialize.hpp"
#include "slimnoc/sim.hpp"
#include "slimnoc/topology.hpp"
#include "slimnoc/traffic.hpp"
#include "slimnoc/wiring.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using slimnoc::json;

std::string out_path(const std::string& name) {
  const char* dir = std::getenv("SLIMNOC_OUT_DIR");
  if (!dir || name.find('/') != std::string::npos) return name;
  std::filesystem::create_directories(dir);
  return std::string(dir) + "/" + name;
}

struct ManifestScope {
  ManifestScope(std::vector<std::string> argv, uint64_t seed) : argv_(std::move(argv)), seed_(seed) {
    start_ = std::chrono::steady_clock::now();
  }
  void add_input(const std::string& p) { inputs_.push_back(p); }
  void add_output(const std::string& p) { outputs_.push_back(p); }
  void write() {
    if (outputs_.empty()) return;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                    start_)
                  .count();
    json m;
    m["command"] = argv_;
    m["tool_version"] = kVersion;
    m["seed"] = seed_;
    m["inputs"] = inputs_;
    m["outputs"] = outputs_;
    m["duration_ms"] = ms;
    slimnoc::write_json_file(outputs_.front() + ".manifest.json", m);
  }
  std::vector<std::string> argv_, inputs_, outputs_;
  uint64_t seed_;
  std::chrono::steady_clock::time_point start_;
};

slimnoc::Topology load_topology(const std::string& path) {
  return slimnoc::topology_from_json(slimnoc::read_json_file(path));
}

slimnoc::Layout load_layout(const std::string& path) {
  return slimnoc::layout_from_json(slimnoc::read_json_file(path));
}

std::vector<double> parse_rates(const std::string& s) {
  std::vector<double> rates;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) rates.push_back(std::stod(tok));
  }
  return rates;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

int dispatch(const std::vector<std::string>& argv);

// ---- subcommand bodies ----------------------------------------------------

int cmd_field(int q, const std::string& out, ManifestScope& scope) {
  slimnoc::FieldTable f = slimnoc::make_field(q);
  json j = slimnoc::field_to_json(f);
  int xi = slimnoc::find_generator(f);
  j["generator"] = xi;
  j["generator_count"] = slimnoc::count_generators(f);
  std::string path = out_path(out);
  slimnoc::write_json_file(path, j);
  scope.add_output(path);
  std::cout << "GF(" << q << "): generator " << xi << ", " << j["generator_count"]
            << " primitive elements -> " << path << "\n";
  return 0;
}

int cmd_generate(int q, int p, long long n, const std::string& kind, int rows, int cols, int part_x,
                 int part_y, const std::string& out, ManifestScope& scope) {
  using namespace slimnoc;
  if (n > 0) {
    auto cands = fixed_n_candidates(n);
    if (cands.empty()) {
      auto [below, above] = nearest_feasible_n(n);
      std::ostringstream msg;
      msg << "N = " << n << " is not feasible as 2 q^2 p";
      if (below > 0 || above > 0) {
        msg << "; nearest feasible:";
        if (below > 0) msg << " " << below;
        if (above > 0) msg << " " << above;
      }
      throw Error(errc::infeasible_n, msg.str());
    }
    std::cout << "feasible (q, p) splits for N = " << n << ":\n";
    for (const auto& c : cands) {
      std::cout << "  q=" << c.cfg.q << " p=" << c.cfg.p << " k'=" << c.cfg.k_net
                << " N_r=" << c.cfg.n_routers << " kappa=" << c.cfg.kappa
                << (c.cfg.q2_special ? "  [q=2 special case]" : "") << "\n";
    }
    std::cout << "pick one with --q/--p\n";
    return 0;
  }
  Topology t;
  if (kind == "sn") {
    SnConfig cfg = sn_params(q, p);
    if (cfg.q2_special) {
      std::cout << "note: q=2 lies outside q=4w+u; accepted as the special tabled configuration\n";
    }
    t = build_sn(q, p);
  } else if (kind == "torus") {
    t = build_torus(rows, cols, p);
  } else if (kind == "mesh") {
    t = build_cmesh(rows, cols, p);
  } else if (kind == "fbf") {
    t = build_fbf(rows, cols, p);
  } else if (kind == "pfbf") {
    t = build_pfbf(part_x, part_y, rows, cols, p);
  } else {
    throw Error(errc::bad_input, "unknown topology kind: " + kind);
  }
  std::string path = out_path(out);
  write_json_file(path, topology_to_json(t));
  scope.add_output(path);
  std::string dot = path.size() > 5 && path.substr(path.size() - 5) == ".json"
                        ? path.substr(0, path.size() - 5) + ".dot"
                        : path + ".dot";
  write_text_file(dot, topology_to_dot(t));
  scope.add_output(dot);
  std::cout << t.name << ": " << t.n_routers << " routers, " << t.n_nodes() << " nodes, k'="
            << t.k_net() << ", diameter " << diameter(t) << " -> " << path << "\n";
  return 0;
}

int cmd_layout(const std::string& topo_path, const std::string& kind, uint64_t seed,
               const std::string& out, bool csv, ManifestScope& scope) {
  using namespace slimnoc;
  Topology t = load_topology(topo_path);
  scope.add_input(topo_path);
  Layout l = make_layout(t, layout_kind_from(kind), seed);
  std::string path = out_path(out);
  write_json_file(path, layout_to_json(l));
  scope.add_output(path);
  if (csv) {
    std::string cpath = path + ".csv";
    write_text_file(cpath, layout_to_csv(l));
    scope.add_output(cpath);
  }
  std::cout << layout_kind_name(l.kind) << ": extent " << l.extent_x << "x" << l.extent_y << " -> "
            << path << "\n";
  return 0;
}

int cmd_wire_check(const std::string& topo_path, const std::string& layout_path, int tech,
                   int link_width, bool strict_wires, const std::string& out,
                   const std::string& heatmap, ManifestScope& scope) {
  using namespace slimnoc;
  Topology t = load_topology(topo_path);
  Layout l = load_layout(layout_path);
  scope.add_input(topo_path);
  scope.add_input(layout_path);
  CrossingGrid g = crossing_counts(t, l);
  ConstraintReport r = check_constraint(g, tech_profile(tech), link_width, strict_wires);
  std::string path = out_path(out);
  write_json_file(path, constraint_to_json(r));
  scope.add_output(path);
  if (!heatmap.empty()) {
    std::string hpath = out_path(heatmap);
    write_text_file(hpath, crossing_to_csv(g));
    scope.add_output(hpath);
  }
  std::cout << (r.pass ? "PASS" : "VIOLATION") << ": max " << r.max_links << " links/cell, W = "
            << r.w_limit << (strict_wires ? " (strict wire counting)" : "") << " -> " << path << "\n";
  return r.pass ? 0 : 3;
}

int cmd_cost(const std::string& topo_path, const std::string& layout_path, int h, int vc, int cb,
             const std::string& out, ManifestScope& scope) {
  using namespace slimnoc;
  Topology t = load_topology(topo_path);
  Layout l = load_layout(layout_path);
  scope.add_input(topo_path);
  scope.add_input(layout_path);
  BufferParams p;
  p.h = h;
  p.vc = vc;
  p.cb_size = cb;
  json j = cost_report_json(t, l, p);
  std::string path = out_path(out);
  write_json_file(path, j);
  scope.add_output(path);
  std::cout << "M = " << j["m"] << ", delta_eb = " << j["delta_eb"] << ", delta_cb = "
            << j["delta_cb"] << " -> " << path << "\n";
  return 0;
}

int cmd_route(const std::string& topo_path, int vc, const std::string& out, ManifestScope& scope) {
  using namespace slimnoc;
  Topology t = load_topology(topo_path);
  scope.add_input(topo_path);
  RoutingTable tab = build_tables_for(t);
  VcPolicy pol = assign_vcs(t, tab, vc);
  bool ok = check_deadlock_free(t, tab, pol);
  json j = routing_to_json(tab);
  j["vc_policy"] = vc_policy_kind_name(pol.kind);
  j["vc_count"] = vc;
  j["cdg_acyclic"] = ok;
  std::string path = out_path(out);
  write_json_file(path, j);
  scope.add_output(path);
  std::cout << "routing tables (" << vc_policy_kind_name(pol.kind) << " policy, CDG "
            << (ok ? "acyclic" : "CYCLIC") << ") -> " << path << "\n";
  return ok ? 0 : 3;
}

struct SimArgs {
  std::string preset;
  int size_class = 200;
  std::string topo_path, layout_path;
  std::string layout_kind = "sn_subgr";
  std::string buffering = "EB-Var-N";
  int vc = 2;
  int packet_flits = 6;
  std::string pattern = "RND";
  double rate = 0.1;
  std::string rates;
  int h = 1;
  long long cycles = 100000;
  long long warmup = 20000;
  uint64_t seed = 1;
  bool link_avg = false;
  std::string trace;
  bool replies = false;
  std::string out = "report.json";
};

struct SimSetup {
  slimnoc::Topology topo;
  slimnoc::Layout layout;
  slimnoc::RoutingTable table;
  slimnoc::VcPolicy policy;
  double cycle_ns = 0.5;
};

SimSetup make_setup(const SimArgs& a, ManifestScope& scope) {
  using namespace slimnoc;
  SimSetup s;
  if (!a.preset.empty()) {
    Preset p = make_preset(a.preset, a.size_class, a.vc, a.seed);
    s.topo = std::move(p.topo);
    s.layout = std::move(p.layout);
    s.table = std::move(p.table);
    s.policy = std::move(p.policy);
    s.cycle_ns = p.cycle_time_ns;
    return s;
  }
  if (a.topo_path.empty()) {
    throw Error(errc::missing_input, "need --preset or --topo");
  }
  s.topo = load_topology(a.topo_path);
  scope.add_input(a.topo_path);
  if (!a.layout_path.empty()) {
    s.layout = load_layout(a.layout_path);
    scope.add_input(a.layout_path);
  } else {
    s.layout = make_layout(s.topo, layout_kind_from(a.layout_kind), a.seed);
  }
  s.table = build_tables_for(s.topo);
  s.policy = assign_vcs(s.topo, s.table, a.vc);
  return s;
}

slimnoc::SimConfig make_sim_config(const SimArgs& a, const SimSetup& s) {
  using namespace slimnoc;
  SimConfig cfg;
  cfg.topo = &s.topo;
  cfg.layout = &s.layout;
  cfg.table = &s.table;
  cfg.policy = &s.policy;
  cfg.cb_size = 20;
  cfg.buffering = buffering_from(a.buffering, &cfg.cb_size);
  cfg.vc = a.vc;
  cfg.packet_flits = a.packet_flits;
  cfg.injection_rate = a.rate;
  cfg.pattern = a.trace.empty() ? pattern_from(a.pattern) : Pattern::trace;
  cfg.h = a.h;
  cfg.warmup_cycles = a.warmup;
  cfg.measure_cycles = a.cycles;
  cfg.seed = a.seed;
  cfg.link_mode_avg = a.link_avg;
  cfg.cycle_time_ns = s.cycle_ns;
  cfg.trace_path = a.trace;
  cfg.trace_replies = a.replies;
  return cfg;
}

int cmd_simulate(const SimArgs& a, ManifestScope& scope) {
  using namespace slimnoc;
  SimSetup s = make_setup(a, scope);
  SimConfig cfg = make_sim_config(a, s);
  if (!a.trace.empty()) scope.add_input(a.trace);
  SimReport rep = run(cfg);
  std::string path = out_path(a.out);
  write_json_file(path, sim_report_to_json(rep));
  scope.add_output(path);
  std::cout << "latency " << rep.avg_latency_cycles << " cycles (" << rep.avg_latency_ns
            << " ns), throughput " << rep.throughput << " flits/node/cycle"
            << (rep.saturated ? " [saturated]" : "") << " -> " << path << "\n";
  return 0;
}

int cmd_sweep(const SimArgs& a, ManifestScope& scope) {
  using namespace slimnoc;
  SimSetup s = make_setup(a, scope);
  SimConfig cfg = make_sim_config(a, s);
  std::vector<double> rates = parse_rates(a.rates);
  auto points = sweep(cfg, rates);
  std::string path = out_path(a.out);
  write_text_file(path, sweep_to_csv(points, s.cycle_ns));
  scope.add_output(path);
  std::cout << points.size() << " rates -> " << path << "\n";
  return 0;
}

int cmd_compare(const std::string& presets_csv, int size_class, const SimArgs& a, int tech,
                int link_width, ManifestScope& scope) {
  using namespace slimnoc;
  std::vector<std::string> names = split_csv(presets_csv);
  if (names.empty()) throw CLI::ValidationError("--presets must name at least one preset");
  std::vector<double> rates = a.rates.empty() ? std::vector<double>{a.rate} : parse_rates(a.rates);
  std::ostringstream os;
  os << "preset,rate,latency_cycles,latency_ns,throughput,saturated,m,delta_eb,delta_cb,"
        "wire_check\n";
  for (const std::string& name : names) {
    Preset p = make_preset(name, size_class, a.vc, a.seed);
    BufferParams bp;
    bp.h = a.h;
    bp.vc = a.vc;
    double m = avg_wire_length(p.topo, p.layout);
    long long deb = total_edge_buffers(p.topo, p.layout, bp);
    long long dcb = total_central_buffers(p.topo.n_routers, p.topo.k_net(), bp);
    ConstraintReport wr =
        check_constraint(crossing_counts(p.topo, p.layout), tech_profile(tech), link_width, false);
    SimArgs pa = a;
    pa.preset = name;
    pa.size_class = size_class;
    SimSetup s;
    s.topo = std::move(p.topo);
    s.layout = std::move(p.layout);
    s.table = std::move(p.table);
    s.policy = std::move(p.policy);
    s.cycle_ns = p.cycle_time_ns;
    SimConfig cfg = make_sim_config(pa, s);
    for (double r : rates) {
      cfg.injection_rate = r;
      SimReport rep = run(cfg);
      char buf[256];
      std::snprintf(buf, sizeof(buf), "%s,%.6f,%.4f,%.4f,%.6f,%d,%.4f,%lld,%lld,%s\n", name.c_str(),
                    r, rep.avg_latency_cycles, rep.avg_latency_cycles * s.cycle_ns, rep.throughput,
                    rep.saturated ? 1 : 0, m, deb, dcb, wr.pass ? "pass" : "violation");
      os << buf;
    }
  }
  std::string path = out_path(a.out);
  write_text_file(path, os.str());
  scope.add_output(path);
  std::cout << names.size() << " presets -> " << path << "\n";
  return 0;
}

int cmd_scaling(const std::string& qs_csv, const std::string& out, ManifestScope& scope) {
  using namespace slimnoc;
  std::vector<int> qs;
  for (const std::string& s : split_csv(qs_csv)) qs.push_back(std::stoi(s));
  auto rows = scaling_envelope(qs);
  json j;
  j["rows"] = scaling_to_json(rows);
  j["band"] = envelope_band(rows);
  std::string path = out_path(out);
  write_json_file(path, j);
  scope.add_output(path);
  std::cout << "band max/min = " << j["band"] << " -> " << path << "\n";
  return 0;
}

int cmd_report(const std::vector<std::string>& inputs, const std::string& format,
               const std::string& out, ManifestScope& scope) {
  using namespace slimnoc;
  if (inputs.empty()) throw Error(errc::missing_input, "report needs at least one input");
  json merged = json::array();
  std::string tool_version;
  bool version_warned = false;
  for (const std::string& in : inputs) {
    scope.add_input(in);
    if (in.size() > 4 && in.substr(in.size() - 4) == ".csv") {
      merged.push_back({{"file", in}, {"csv", read_text_file(in)}});
      continue;
    }
    json j = read_json_file(in);
    if (j.contains("tool_version")) {
      std::string v = j["tool_version"].get<std::string>();
      if (tool_version.empty()) {
        tool_version = v;
      } else if (v != tool_version && !version_warned) {
        std::cerr << "warning: mixing outputs from tool versions " << tool_version << " and " << v
                  << "\n";
        version_warned = true;
      }
    }
    merged.push_back({{"file", in}, {"data", j}});
  }
  std::string path = out_path(out);
  if (format == "json") {
    write_json_file(path, merged);
  } else {
    std::ostringstream os;
    os << "file,key,value\n";
    for (const auto& entry : merged) {
      if (entry.contains("data") && entry["data"].is_object()) {
        for (auto it = entry["data"].begin(); it != entry["data"].end(); ++it) {
          if (it.value().is_primitive()) {
            os << entry["file"].get<std::string>() << "," << it.key() << "," << it.value().dump()
               << "\n";
          }
        }
      }
    }
    write_text_file(path, os.str());
  }
  scope.add_output(path);
  std::cout << merged.size() << " inputs merged -> " << path << "\n";
  return 0;
}

int cmd_replay(const std::string& manifest_path) {
  json m = slimnoc::read_json_file(manifest_path);
  std::vector<std::string> argv = m.at("command").get<std::vector<std::string>>();
  return dispatch(argv);
}

// ---- argument wiring --------------------------------------------------------

int dispatch(const std::vector<std::string>& argv) {
  CLI::App app{"Slim NoC topology toolkit: construction, layout, cost models and flit simulation"};
  app.require_subcommand(1);

  uint64_t seed = 1;
  app.add_option("--seed", seed, "global random seed")->capture_default_str();

  // field
  auto* field = app.add_subcommand("field", "build GF(q) operation tables");
  int fq = 9;
  std::string fout = "field.json";
  field->add_option("--q", fq, "field order (prime power)")->required();
  field->add_option("--out", fout, "output JSON");

  // generate
  auto* gen = app.add_subcommand("generate", "construct a topology");
  int gq = 5, gp = 4, grows = 0, gcols = 0, gpx = 1, gpy = 1;
  long long gn = 0;
  std::string gkind = "sn", gout = "topology.json";
  gen->add_option("--q", gq, "Slim NoC field order");
  gen->add_option("--p", gp, "concentration (nodes per router)");
  gen->add_option("--N", gn, "fixed network size: list feasible (q,p) splits");
  gen->add_option("--topology", gkind, "sn|torus|mesh|fbf|pfbf")->capture_default_str();
  gen->add_option("--rows", grows, "grid rows (baselines; pfbf: sub-FBF rows)");
  gen->add_option("--cols", gcols, "grid cols (baselines; pfbf: sub-FBF cols)");
  gen->add_option("--part-x", gpx, "pfbf partitions along x");
  gen->add_option("--part-y", gpy, "pfbf partitions along y");
  gen->add_option("--out", gout, "output JSON");

  // layout
  auto* lay = app.add_subcommand("layout", "assign die-grid coordinates");
  std::string ltopo, lkind = "sn_subgr", lout = "layout.json";
  bool lcsv = false;
  lay->add_option("--topo", ltopo, "topology JSON")->required();
  lay->add_option("--layout", lkind, "sn_basic|sn_subgr|sn_gr|sn_rand|grid")->capture_default_str();
  lay->add_option("--out", lout, "output JSON");
  lay->add_flag("--csv", lcsv, "also write a CSV table");

  // wire-check
  auto* wire = app.add_subcommand("wire-check", "count wire crossings and verify the tech limit");
  std::string wtopo, wlayout, wout = "wirecheck.json", wheat;
  int wtech = 45, wwidth = 128;
  bool wstrict = false;
  wire->add_option("--topo", wtopo)->required();
  wire->add_option("--layout-file", wlayout)->required();
  wire->add_option("--tech", wtech, "technology node: 45|22|11")->capture_default_str();
  wire->add_option("--link-width", wwidth, "physical wires per link")->capture_default_str();
  wire->add_flag("--strict-wires", wstrict, "compare links x link_width against W");
  wire->add_option("--out", wout);
  wire->add_option("--heatmap", wheat, "crossing heatmap CSV");

  // cost
  auto* cost = app.add_subcommand("cost", "wire length and buffer totals");
  std::string ctopo, clayout, cout_ = "cost.json";
  int ch = 1, cvc = 2, ccb = 20;
  cost->add_option("--topo", ctopo)->required();
  cost->add_option("--layout-file", clayout)->required();
  cost->add_option("--H", ch, "hops per link cycle (9 = SMART wires)")->capture_default_str();
  cost->add_option("--vc", cvc)->capture_default_str();
  cost->add_option("--cb", ccb, "central buffer size")->capture_default_str();
  cost->add_option("--out", cout_);

  // route
  auto* route = app.add_subcommand("route", "minimal routing tables + deadlock check");
  std::string rtopo, rout = "routing.json";
  int rvc = 2;
  route->add_option("--topo", rtopo)->required();
  route->add_option("--vc", rvc)->capture_default_str();
  route->add_option("--out", rout);

  // shared simulate/sweep options
  SimArgs sa;
  auto add_sim_opts = [&](CLI::App* cmd, bool with_rates) {
    cmd->add_option("--preset", sa.preset, "preset name (see compare --list)");
    cmd->add_option("--size", sa.size_class, "preset size class: 200|1296")->capture_default_str();
    cmd->add_option("--topo", sa.topo_path, "topology JSON (alternative to --preset)");
    cmd->add_option("--layout-file", sa.layout_path, "layout JSON");
    cmd->add_option("--layout", sa.layout_kind, "layout kind when no file given")
        ->capture_default_str();
    cmd->add_option("--buffering", sa.buffering,
                    "EB-Small|EB-Large|EB-Var-S|EB-Var-N|CBR-<x>|EL-Links")
        ->capture_default_str();
    cmd->add_option("--vc", sa.vc)->capture_default_str();
    cmd->add_option("--flits", sa.packet_flits, "packet size in flits")->capture_default_str();
    cmd->add_option("--pattern", sa.pattern, "RND|SHF|REV|ADV1|ADV2")->capture_default_str();
    if (with_rates) {
      cmd->add_option("--rates", sa.rates, "comma separated injection rates");
    }
    cmd->add_option("--rate", sa.rate, "injection rate, flits/node/cycle")->capture_default_str();
    cmd->add_option("--H", sa.h, "hops per link cycle")->capture_default_str();
    cmd->add_option("--cycles", sa.cycles, "measured cycles")->capture_default_str();
    cmd->add_option("--warmup", sa.warmup, "warmup cycles")->capture_default_str();
    cmd->add_flag("--link-avg", sa.link_avg, "use the mean wire length for every link");
    cmd->add_option("--trace", sa.trace, "trace CSV: cycle,src,dst,flits");
    cmd->add_flag("--replies", sa.replies, "generate a 6-flit reply per 2-flit read");
    cmd->add_option("--out", sa.out);
  };
  auto* simc = app.add_subcommand("simulate", "one cycle-level run");
  sa.out = "report.json";
  add_sim_opts(simc, false);
  auto* sweepc = app.add_subcommand("sweep", "latency/throughput curve over rates");
  add_sim_opts(sweepc, true);

  // compare
  auto* cmp = app.add_subcommand("compare", "preset comparison matrix");
  std::string presets_csv;
  int cmp_tech = 45, cmp_width = 128;
  bool cmp_list = false;
  cmp->add_option("--presets", presets_csv, "comma separated preset names");
  cmp->add_flag("--list", cmp_list, "list preset names and exit");
  cmp->add_option("--tech", cmp_tech)->capture_default_str();
  cmp->add_option("--link-width", cmp_width)->capture_default_str();
  add_sim_opts(cmp, true);

  // scaling
  auto* scal = app.add_subcommand("scaling", "wire-length scaling table (subgroup layout)");
  std::string sqs = "3,5,7,9,11,13", sout = "scaling.json";
  scal->add_option("--qs", sqs)->capture_default_str();
  scal->add_option("--out", sout);

  // report
  auto* repc = app.add_subcommand("report", "merge prior outputs");
  std::vector<std::string> rinputs;
  std::string rformat = "csv", rrout = "merged.csv";
  repc->add_option("--inputs", rinputs, "files to merge")->required()->expected(-1);
  repc->add_option("--format", rformat, "csv|json")->capture_default_str();
  repc->add_option("--out", rrout);

  // replay
  auto* repl = app.add_subcommand("replay", "re-execute a run manifest");
  std::string mpath;
  repl->add_option("--manifest", mpath)->required();

  std::vector<std::string> args(argv.begin() + 1, argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  ManifestScope scope(argv, seed);
  int rc = 0;
  if (*field) {
    rc = cmd_field(fq, fout, scope);
  } else if (*gen) {
    rc = cmd_generate(gq, gp, gn, gkind, grows, gcols, gpx, gpy, gout, scope);
  } else if (*lay) {
    rc = cmd_layout(ltopo, lkind, seed, lout, lcsv, scope);
  } else if (*wire) {
    rc = cmd_wire_check(wtopo, wlayout, wtech, wwidth, wstrict, wout, wheat, scope);
  } else if (*cost) {
    rc = cmd_cost(ctopo, clayout, ch, cvc, ccb, cout_, scope);
  } else if (*route) {
    rc = cmd_route(rtopo, rvc, rout, scope);
  } else if (*simc) {
    sa.seed = seed;
    rc = cmd_simulate(sa, scope);
  } else if (*sweepc) {
    sa.seed = seed;
    rc = cmd_sweep(sa, scope);
  } else if (*cmp) {
    if (cmp_list) {
      for (const auto& n : slimnoc::preset_names(sa.size_class)) std::cout << n << "\n";
      return 0;
    }
    sa.seed = seed;
    rc = cmd_compare(presets_csv, sa.size_class, sa, cmp_tech, cmp_width, scope);
  } else if (*scal) {
    rc = cmd_scaling(sqs, sout, scope);
  } else if (*repl) {
    return cmd_replay(mpath);
  } else if (*repc) {
    rc = cmd_report(rinputs, rformat, rrout, scope);
  }
  scope.write();
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  try {
    return dispatch(args);
  } catch (const slimnoc::Error& e) {
    std::cerr << slimnoc::errc_name(e.code()) << ": " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
