#include <doctest.h>

#include "slimnoc/errors.hpp"
#include "slimnoc/routing.hpp"
#include "slimnoc/serialize.hpp"
#include "slimnoc/topology.hpp"
#include "support/graph_oracle.hpp"

using namespace slimnoc;

namespace {

void check_minimal(const Topology& t, const RoutingTable& tab) {
  for (int s = 0; s < t.n_routers; ++s) {
    auto dist = oracle::bfs(t, s);
    for (int d = 0; d < t.n_routers; ++d) {
      CHECK(tab.path_len(s, d) == dist[d]);
      // walking next_hop reaches the destination in exactly path_len hops
      auto p = tab.path(s, d);
      CHECK(static_cast<int>(p.size()) - 1 == tab.path_len(s, d));
      CHECK(p.back() == d);
      for (size_t h = 0; h + 1 < p.size(); ++h) CHECK(t.has_edge(p[h], p[h + 1]));
    }
  }
}

}  // namespace

TEST_CASE("bfs tables are minimal and reach every pair") {
  Topology t = build_sn(5, 4);
  RoutingTable tab = build_tables(t);
  check_minimal(t, tab);
  CHECK(tab.max_path_len() == 2);
  // direct neighbors route directly
  for (int i = 0; i < t.n_routers; ++i) {
    for (int j : t.adj[i]) {
      CHECK(tab.path_len(i, j) == 1);
      CHECK(tab.next_hop(i, j) == j);
    }
  }
}

TEST_CASE("tie break picks the smallest neighbor index") {
  Topology t = build_fbf(3, 3, 1);
  RoutingTable tab = build_tables(t);
  // router 8 (row 2, col 2) to router 0: candidates 2 (same col) and 6 (same
  // row) both give 2 hops; the smaller index must win
  CHECK(tab.path_len(8, 0) == 2);
  CHECK(tab.next_hop(8, 0) == 2);
}

TEST_CASE("tables are deterministic") {
  Topology t = build_sn(5, 4);
  RoutingTable a = build_tables(t);
  RoutingTable b = build_tables(t);
  CHECK(a.next_hop_tab == b.next_hop_tab);
  CHECK(a.path_len_tab == b.path_len_tab);
}

TEST_CASE("xy routing on mesh and torus is minimal") {
  Topology m = build_cmesh(4, 6, 1);
  check_minimal(m, build_tables_xy(m));
  Topology t = build_torus(10, 5, 1);
  RoutingTable tab = build_tables_xy(t);
  check_minimal(t, tab);
  // farthest pair wraps both dimensions: 5 + 2 hops
  int far = 5 * t.grid.cols + 2;
  CHECK(tab.path_len(0, far) == 7);
}

TEST_CASE("pfbf routing is minimal") {
  Topology t = build_pfbf(2, 2, 4, 4, 3);
  check_minimal(t, build_tables_pfbf(t));
  Topology two = build_pfbf(1, 2, 5, 5, 4);
  check_minimal(two, build_tables_pfbf(two));
}

TEST_CASE("hop-indexed vcs for diameter-2 networks") {
  Topology t = build_sn(5, 4);
  RoutingTable tab = build_tables(t);
  VcPolicy p = assign_vcs(t, tab, 2);
  CHECK(p.kind == VcPolicyKind::hop_index);
  CHECK(p.vc_of_hop == std::vector<int>{0, 1});
  CHECK_THROWS_AS(assign_vcs(t, tab, 1), Error);
}

TEST_CASE("hop policy cannot cover a diameter-4 network with two classes") {
  Topology t = build_pfbf(2, 2, 4, 4, 3);
  RoutingTable tab = build_tables_pfbf(t);
  CHECK_THROWS_AS(assign_vcs_hop_indexed(t, tab, 2), Error);
  try {
    assign_vcs_hop_indexed(t, tab, 2);
  } catch (const Error& e) {
    CHECK(e.code() == errc::insufficient_vcs);
  }
  // the escalation: partition-crossing classes, validated by the CDG check
  VcPolicy p = assign_vcs(t, tab, 2);
  CHECK(p.kind == VcPolicyKind::partition_cross);
  CHECK(check_deadlock_free(t, tab, p));
}

TEST_CASE("mesh routes deadlock-free on a single vc") {
  Topology t = build_cmesh(4, 4, 1);
  RoutingTable tab = build_tables_xy(t);
  VcPolicy p = assign_vcs(t, tab, 1);
  CHECK(p.kind == VcPolicyKind::xy);
  CHECK(check_deadlock_free(t, tab, p));
}

TEST_CASE("torus rings deadlock without a dateline class") {
  Topology t = build_torus(4, 4, 1);
  RoutingTable tab = build_tables_xy(t);
  VcPolicy single;
  single.kind = VcPolicyKind::xy;  // everything on VC0
  single.vc_count = 1;
  CHECK(!check_deadlock_free(t, tab, single));
  VcPolicy dateline = assign_vcs(t, tab, 2);
  CHECK(dateline.kind == VcPolicyKind::dateline);
  CHECK(check_deadlock_free(t, tab, dateline));
}

TEST_CASE("slim noc with two hop classes is deadlock-free") {
  Topology t = build_sn(5, 4);
  RoutingTable tab = build_tables(t);
  CHECK(check_deadlock_free(t, tab, assign_vcs(t, tab, 2)));
}

TEST_CASE("fbf with hop classes is deadlock-free") {
  Topology t = build_fbf(8, 8, 3);
  RoutingTable tab = build_tables(t);
  CHECK(check_deadlock_free(t, tab, assign_vcs(t, tab, 2)));
}

TEST_CASE("routing table json round trip") {
  Topology t = build_sn(5, 4);
  RoutingTable tab = build_tables(t);
  RoutingTable back = routing_from_json(routing_to_json(tab));
  CHECK(back.n == tab.n);
  CHECK(back.next_hop_tab == tab.next_hop_tab);
  CHECK(back.path_len_tab == tab.path_len_tab);
}
