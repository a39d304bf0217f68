#include <doctest.h>

#include <set>

#include "slimnoc/layout.hpp"
#include "slimnoc/topology.hpp"
#include "slimnoc/traffic.hpp"
#include "slimnoc/wiring.hpp"

using namespace slimnoc;

namespace {

Layout two_point_layout(int x0, int y0, int x1, int y1) {
  Layout l;
  l.kind = LayoutKind::grid;
  l.extent_x = std::max(x0, x1);
  l.extent_y = std::max(y0, y1);
  l.x = {x0, x1};
  l.y = {y0, y1};
  return l;
}

std::set<std::pair<int, int>> cell_set(const Polyline& p) {
  std::set<std::pair<int, int>> s;
  for (const GridPoint& c : covered_cells(p)) s.insert({c.x, c.y});
  return s;
}

}  // namespace

TEST_CASE("bend rule: larger x distance places the first part vertically") {
  Layout l = two_point_layout(1, 1, 4, 2);
  Polyline p = place_wire(0, 1, l);
  REQUIRE(p.n == 3);
  CHECK(p.pts[0] == GridPoint{1, 1});
  CHECK(p.pts[1] == GridPoint{1, 2});
  CHECK(p.pts[2] == GridPoint{4, 2});
}

TEST_CASE("bend rule: otherwise the first part runs horizontally") {
  Layout l = two_point_layout(1, 1, 2, 4);
  Polyline p = place_wire(0, 1, l);
  REQUIRE(p.n == 3);
  CHECK(p.pts[0] == GridPoint{1, 1});
  CHECK(p.pts[1] == GridPoint{2, 1});
  CHECK(p.pts[2] == GridPoint{2, 4});
}

TEST_CASE("collinear routers use a single segment") {
  Layout l = two_point_layout(1, 1, 1, 5);
  Polyline p = place_wire(0, 1, l);
  CHECK(p.n == 2);
  CHECK(p.manhattan_len() == 4);
}

TEST_CASE("covered cells of an L path") {
  Layout l = two_point_layout(1, 1, 4, 2);
  auto cells = cell_set(place_wire(0, 1, l));
  std::set<std::pair<int, int>> expect{{1, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 2}};
  CHECK(cells == expect);
}

TEST_CASE("wire placement is symmetric in its arguments") {
  // exhaustive over a small grid: both orders cover the same cells
  for (int x0 = 1; x0 <= 4; ++x0) {
    for (int y0 = 1; y0 <= 4; ++y0) {
      for (int x1 = 1; x1 <= 4; ++x1) {
        for (int y1 = 1; y1 <= 4; ++y1) {
          if (x0 == x1 && y0 == y1) continue;
          Layout l = two_point_layout(x0, y0, x1, y1);
          CHECK(cell_set(place_wire(0, 1, l)) == cell_set(place_wire(1, 0, l)));
        }
      }
    }
  }
}

TEST_CASE("path length equals the Manhattan distance") {
  Topology t = build_sn(5, 4);
  Layout l = layout_rand(t, 11);
  for (const auto& [i, j] : t.edges()) {
    Polyline p = place_wire(i, j, l);
    CHECK(p.manhattan_len() == l.dist(i, j));
    CHECK(p.n <= 3);  // at most one bend
  }
}

TEST_CASE("crossing mass conservation") {
  // total crossing count equals sum over edges of (Manhattan length + 1)
  Topology t = build_sn(5, 4);
  for (uint64_t seed : {1u, 2u, 3u}) {
    Layout l = layout_rand(t, seed);
    CrossingGrid g = crossing_counts(t, l);
    long long expect = 0;
    for (const auto& [i, j] : t.edges()) expect += l.dist(i, j) + 1;
    CHECK(g.total() == expect);
  }
}

TEST_CASE("single edge between adjacent cells") {
  Topology t;
  t.name = "pair";
  t.n_routers = 2;
  t.p = 1;
  t.adj = {{1}, {0}};
  Layout l = two_point_layout(1, 1, 2, 1);
  CrossingGrid g = crossing_counts(t, l);
  CHECK(g.at(1, 1) == 1);
  CHECK(g.at(2, 1) == 1);
  CHECK(g.total() == 2);
}

TEST_CASE("technology profiles") {
  CHECK(tech_profile(45).max_wires() == doctest::Approx(7000.0));
  CHECK(tech_profile(22).max_wires() == doctest::Approx(7000.0));
  CHECK(tech_profile(11).max_wires() == doctest::Approx(7000.0));
  CHECK_THROWS(tech_profile(7));
}

TEST_CASE("constraint check verdicts") {
  Topology t = build_sn(5, 4);
  Layout l = layout_subgr(t);
  CrossingGrid g = crossing_counts(t, l);
  ConstraintReport links_only = check_constraint(g, tech_profile(45), 128, false);
  CHECK(links_only.pass);
  CHECK(links_only.max_links == g.max_count());
  // the small network also fits when every link expands to 128 wires
  ConstraintReport strict = check_constraint(g, tech_profile(45), 128, true);
  CHECK(strict.pass);
  CHECK(strict.max_wires == doctest::Approx(128.0 * g.max_count()));
  // a zero-capacity profile flags every occupied cell
  TechProfile zero{45, 0.0, 0.0};
  ConstraintReport v = check_constraint(g, zero, 128, false);
  CHECK(!v.pass);
  long long occupied = 0;
  for (int c : g.count) occupied += c > 0 ? 1 : 0;
  CHECK(static_cast<long long>(v.violations.size()) == occupied);
}
