#include <doctest.h>

#include "oracles.hpp"
#include "pcube/errors.hpp"
#include "pcube/generators.hpp"
#include "pcube/zones.hpp"

using namespace pcube;

namespace {

struct Fixture {
  Graph g;
  DistanceMatrix dm;
  ThetaPartition part;
  CycleSet convex;

  explicit Fixture(Graph graph) : g(std::move(graph)) {
    dm = all_pairs_distances(g);
    part = theta_classes(g, dm);
    convex = enumerate_convex_cycles(g, dm);
  }
};

}  // namespace

TEST_CASE("zone graphs of the named examples") {
  Fixture c6(oracle::c6());
  for (int k = 0; k < c6.part.count(); ++k) {
    ZoneGraph z = zone_graph(c6.g, c6.dm, c6.part, c6.convex, k);
    CHECK(z.nodes.size() == 2);
    CHECK(z.links.size() == 1);
    CHECK(z.links[0].witnesses.size() == 1);
  }

  Fixture q3(oracle::q3());
  for (int k = 0; k < q3.part.count(); ++k) {
    ZoneGraph z = zone_graph(q3.g, q3.dm, q3.part, q3.convex, k);
    CHECK(z.nodes.size() == 4);
    CHECK(z.links.size() == 4);  // a four-cycle of links
    std::vector<int> deg(4, 0);
    for (const auto& l : z.links) {
      CHECK(l.a < l.b);  // irreflexive, one record per pair
      ++deg[l.a];
      ++deg[l.b];
    }
    for (int d : deg) CHECK(d == 2);
  }

  Fixture tree(oracle::path(4));
  for (int k = 0; k < tree.part.count(); ++k) {
    ZoneGraph z = zone_graph(tree.g, tree.dm, tree.part, tree.convex, k);
    CHECK(z.nodes.size() == 1);
    CHECK(z.links.empty());
  }

  CHECK_THROWS_AS(zone_graph(c6.g, c6.dm, c6.part, c6.convex, 99),
                  InvalidArgument);
}

TEST_CASE("tree-zone flags") {
  Fixture c6(oracle::c6());
  CHECK(is_tree_zone(c6.g, c6.dm, c6.part, c6.convex).tree_zone);

  Fixture q3(oracle::q3());
  TreeZoneResult tz = is_tree_zone(q3.g, q3.dm, q3.part, q3.convex);
  CHECK(!tz.tree_zone);
  CHECK(tz.reason == "cyclic");
  CHECK(tz.bad_class >= 0);

  Fixture c8(even_cycle(4));
  CHECK(is_tree_zone(c8.g, c8.dm, c8.part, c8.convex).tree_zone);
}

TEST_CASE("convex excess") {
  Fixture c6(oracle::c6());
  CHECK(convex_excess(c6.convex) == 1);
  Fixture q3(oracle::q3());
  CHECK(convex_excess(q3.convex) == 0);
  Fixture tree(oracle::path(7));
  CHECK(convex_excess(tree.convex) == 0);
}

TEST_CASE("euler reports") {
  Fixture c6(oracle::c6());
  EulerReport r6 = euler_report(c6.g, c6.dm, c6.part, c6.convex);
  CHECK(r6.n == 6);
  CHECK(r6.m == 6);
  CHECK(r6.i == 3);
  CHECK(r6.ce == 1);
  CHECK(r6.value == 2);
  CHECK(r6.tree_zone);
  CHECK(r6.violations.empty());

  Fixture q3(oracle::q3());
  EulerReport rq = euler_report(q3.g, q3.dm, q3.part, q3.convex);
  CHECK(rq.n == 8);
  CHECK(rq.m == 12);
  CHECK(rq.i == 3);
  CHECK(rq.ce == 0);
  CHECK(rq.value == 1);
  CHECK(!rq.tree_zone);
  CHECK(rq.violations.empty());

  for (int n : {2, 5, 10}) {
    Fixture t(oracle::path(n));
    EulerReport rt = euler_report(t.g, t.dm, t.part, t.convex);
    CHECK(rt.value == 2);
    CHECK(rt.tree_zone);
  }

  for (int k = 2; k <= 8; ++k) {
    Fixture c(even_cycle(k));
    EulerReport rc = euler_report(c.g, c.dm, c.part, c.convex);
    CHECK(rc.value == 2);
    CHECK(rc.tree_zone);
  }
}

TEST_CASE("zone dot export") {
  Fixture c6(oracle::c6());
  ZoneGraph z = zone_graph(c6.g, c6.dm, c6.part, c6.convex, 0);
  std::string dot = zone_to_dot(z);
  CHECK(dot.find("graph zone_0 {") == 0);
  CHECK(dot.find("\"0-1\"") != std::string::npos);
  CHECK(dot.find(" -- ") != std::string::npos);
}
