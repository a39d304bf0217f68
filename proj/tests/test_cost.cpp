#include <doctest.h>

#include "slimnoc/cost.hpp"
#include "slimnoc/errors.hpp"
#include "slimnoc/layout.hpp"
#include "slimnoc/topology.hpp"

using namespace slimnoc;

namespace {

Layout line_layout(int n) {
  Layout l;
  l.kind = LayoutKind::grid;
  l.extent_x = n;
  l.extent_y = 1;
  for (int i = 0; i < n; ++i) {
    l.x.push_back(i + 1);
    l.y.push_back(1);
  }
  return l;
}

Topology complete_graph(int n) {
  Topology t;
  t.name = "k" + std::to_string(n);
  t.n_routers = n;
  t.p = 1;
  t.adj.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) t.adj[i].push_back(j);
    }
  }
  return t;
}

}  // namespace

TEST_CASE("round trip time formula") {
  CHECK(rtt_for_distance(5, 1) == 13);
  CHECK(rtt_for_distance(5, 9) == 5);
  CHECK(rtt_for_distance(0, 1) == 3);
  CHECK(rtt_for_distance(9, 9) == 5);
  CHECK(rtt_for_distance(10, 9) == 7);
}

TEST_CASE("rtt with smart wires never exceeds plain wires") {
  Topology t = build_sn(5, 4);
  Layout l = layout_basic(t);
  for (int i = 0; i < t.n_routers; ++i) {
    for (int j = 0; j < t.n_routers; ++j) {
      if (i == j) continue;
      CHECK(rtt(i, j, l, 1) >= rtt(i, j, l, 9));
    }
  }
}

TEST_CASE("edge buffer sizing") {
  Layout l = line_layout(6);  // routers 0 and 5 sit distance 5 apart
  BufferParams p;
  p.vc = 2;
  p.h = 1;
  CHECK(edge_buffer_size(0, 5, l, p) == 26);
  p.h = 9;
  CHECK(edge_buffer_size(0, 5, l, p) == 10);
  p.vc = 0;
  CHECK_THROWS_AS(edge_buffer_size(0, 5, l, p), Error);
}

TEST_CASE("average wire length basics") {
  Topology pair;
  pair.n_routers = 2;
  pair.p = 1;
  pair.adj = {{1}, {0}};
  Layout l = line_layout(4);
  l.x = {1, 4};
  l.y = {1, 1};
  CHECK(avg_wire_length(pair, l) == doctest::Approx(3.0));
}

TEST_CASE("complete graph on a line matches the closed form") {
  // mean pairwise distance over a line of n cells is exactly (n+1)/3
  for (int n : {5, 10, 21}) {
    Topology t = complete_graph(n);
    Layout l = line_layout(n);
    CHECK(avg_wire_length(t, l) == doctest::Approx((n + 1) / 3.0));
  }
}

TEST_CASE("edge buffer total matches a brute-force oracle") {
  Topology t = build_sn(5, 4);
  BufferParams p;
  p.vc = 2;
  for (int h : {1, 9}) {
    p.h = h;
    for (uint64_t seed : {4u, 9u}) {
      Layout l = layout_rand(t, seed);
      long long oracle = 0;
      for (int i = 0; i < t.n_routers; ++i) {
        for (int j : t.adj[i]) {
          int dist = std::abs(l.x[i] - l.x[j]) + std::abs(l.y[i] - l.y[j]);
          oracle += (2 * ((dist + h - 1) / h) + 3) * 2;  // T_ij * (b/L=1) * |VC|
        }
      }
      CHECK(total_edge_buffers(t, l, p) == oracle);
    }
  }
}

TEST_CASE("central buffer total formula") {
  BufferParams p;
  p.cb_size = 20;
  p.vc = 2;
  CHECK(total_central_buffers(50, 7, p) == 2400);
  p.cb_size = 40;
  CHECK(total_central_buffers(162, 13, p) == 14904);
  BufferParams tiny;
  tiny.cb_size = 0;
  tiny.vc = 1;
  CHECK(total_central_buffers(1, 1, tiny) == 2);
}

TEST_CASE("central buffer total ignores the layout") {
  Topology t = build_sn(5, 4);
  BufferParams p;
  long long expect = total_central_buffers(t.n_routers, t.k_net(), p);
  for (LayoutKind k : {LayoutKind::basic, LayoutKind::subgr, LayoutKind::gr, LayoutKind::rand}) {
    Layout l = make_layout(t, k, 3);
    (void)l;  // delta_cb has no coordinate inputs; recompute from the graph
    CHECK(total_central_buffers(t.n_routers, t.k_net(), p) == expect);
  }
}

TEST_CASE("engineered layouts beat the basic stacking") {
  for (int q : {5, 8, 9}) {
    Topology t = build_sn(q, 2);
    double mb = avg_wire_length(t, layout_basic(t));
    CHECK(avg_wire_length(t, layout_subgr(t)) < mb);
    CHECK(avg_wire_length(t, layout_gr(t)) < mb);
  }
}

TEST_CASE("random placement never beats the subgroup layout") {
  for (int q : {5, 8, 9}) {
    Topology t = build_sn(q, 2);
    double ms = avg_wire_length(t, layout_subgr(t));
    for (uint64_t seed = 0; seed < 10; ++seed) {
      CHECK(avg_wire_length(t, layout_rand(t, seed)) >= ms);
    }
  }
}

TEST_CASE("scaling envelope stays within a narrow band") {
  auto rows = scaling_envelope({4, 8});
  CHECK(envelope_band(rows) <= 3.0);
  auto larger = scaling_envelope({3, 5, 7, 9, 11, 13});
  for (size_t i = 1; i < larger.size(); ++i) {
    CHECK(larger[i].n_nodes > larger[i - 1].n_nodes);
    CHECK(larger[i].m > larger[i - 1].m);  // monotone growth with N
  }
  CHECK(envelope_band(larger) <= 3.0);
  auto single = scaling_envelope({5});
  CHECK(envelope_band(single) == doctest::Approx(1.0));
}
