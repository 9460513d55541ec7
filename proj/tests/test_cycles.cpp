#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "pcube/cycles.hpp"
#include "pcube/generators.hpp"
#include "pcube/theta.hpp"

using namespace pcube;

namespace {

std::vector<std::vector<int>> sequences(const CycleSet& set) {
  std::vector<std::vector<int>> out;
  for (const auto& c : set.cycles) out.push_back(c.vertices);
  return out;
}

}  // namespace

TEST_CASE("isometric cycle enumeration matches the brute force oracle") {
  for (const Graph& g : {oracle::c6(), oracle::q3(), x_graph(), even_cycle(4),
                         oracle::k23(), oracle::path(5)}) {
    DistanceMatrix dm = all_pairs_distances(g);
    CycleSet mine = enumerate_isometric_cycles(g, dm);
    auto ref = oracle::isometric_cycles_bruteforce(g, g.n);
    CHECK(sequences(mine) == ref);
    CycleSet conv = enumerate_convex_cycles(g, dm);
    CHECK(sequences(conv) == oracle::convex_cycles_bruteforce(g, g.n));
  }
}

TEST_CASE("cycle counts on the named examples") {
  Graph c6 = oracle::c6();
  CycleSet one = enumerate_isometric_cycles(c6, all_pairs_distances(c6));
  CHECK(one.size() == 1);
  CHECK(one[0].vertices == std::vector<int>{0, 1, 2, 3, 4, 5});

  Graph q3 = oracle::q3();
  CycleSet qc = enumerate_isometric_cycles(q3, all_pairs_distances(q3));
  CHECK(qc.size() == 10);
  int fours = 0, sixes = 0;
  for (const auto& c : qc.cycles) {
    if (c.length() == 4) ++fours;
    if (c.length() == 6) ++sixes;
  }
  CHECK(fours == 6);
  CHECK(sixes == 4);
  CycleSet qconv = convex_subset(qc);
  CHECK(qconv.size() == 6);
  for (const auto& c : qconv.cycles) CHECK(c.length() == 4);

  Graph tree = oracle::path(6);
  CHECK(enumerate_isometric_cycles(tree, all_pairs_distances(tree)).size() == 0);
}

TEST_CASE("convex cycles of the Desargues graph sit inside the isometric set") {
  Graph m5 = middle_levels(2);
  DistanceMatrix dm = all_pairs_distances(m5);
  CycleSet iso = enumerate_isometric_cycles(m5, dm);
  CycleSet conv = convex_subset(iso);
  CHECK(conv.size() > 0);
  for (const auto& c : conv.cycles) {
    bool found = false;
    for (const auto& d : iso.cycles)
      if (c.vertices == d.vertices) found = true;
    CHECK(found);
  }
}

TEST_CASE("isometric cycles are induced and convex implies isometric") {
  for (const Graph& g : {oracle::c6(), oracle::q3(), x_graph(), middle_levels(2)}) {
    DistanceMatrix dm = all_pairs_distances(g);
    CycleSet iso = enumerate_isometric_cycles(g, dm);
    for (const auto& c : iso.cycles) {
      InducedSubgraph sub = induced_subgraph(g, c.vertices);
      CHECK(sub.graph.m() == c.length());  // no chords
      if (c.convex) CHECK(c.isometric);
    }
  }
}

TEST_CASE("antipodal edges share a class on every isometric cycle") {
  for (const Graph& g : {oracle::c6(), oracle::q3(), middle_levels(2)}) {
    DistanceMatrix dm = all_pairs_distances(g);
    ThetaPartition part = theta_classes(g, dm);
    CycleSet iso = enumerate_isometric_cycles(g, dm);
    CHECK(iso.size() > 0);
    for (const auto& c : iso.cycles) CHECK(antipodal_theta_check(g, dm, part, c));
  }
}

TEST_CASE("intersection classification on the cube") {
  Graph q3 = oracle::q3();
  DistanceMatrix dm = all_pairs_distances(q3);
  CycleSet iso = enumerate_isometric_cycles(q3, dm);

  auto find_cycle = [&](const std::vector<int>& verts) {
    for (int i = 0; i < iso.size(); ++i)
      if (iso[i].vertices == verts) return i;
    REQUIRE(false);
    return -1;
  };

  // Two faces sharing an edge.
  int f1 = find_cycle({0, 1, 3, 2});
  int f2 = find_cycle({2, 3, 7, 6});
  Intersection a = classify_intersection(iso[f1], iso[f2]);
  CHECK(a.kind == Intersection::Kind::single_edge);
  CHECK(a.shared_path == std::vector<int>{2, 3});

  // The two hexagons avoiding (2,5) and (1,6): two disjoint shared edges.
  int h1 = find_cycle({0, 1, 3, 7, 6, 4});
  int h2 = find_cycle({0, 2, 3, 7, 5, 4});
  Intersection b = classify_intersection(iso[h1], iso[h2]);
  CHECK(b.kind == Intersection::Kind::other);

  // Opposite faces are disjoint.
  int f3 = find_cycle({4, 5, 7, 6});
  Intersection c = classify_intersection(iso[f1], iso[f3]);
  CHECK(c.kind == Intersection::Kind::empty);

  // A face and a hexagon through two of its edges share a two-edge path.
  Intersection d = classify_intersection(iso[f1], iso[h1]);
  CHECK(d.kind == Intersection::Kind::path);
  CHECK(d.m == 2);
}

TEST_CASE("intertwinings of the obstruction graph") {
  Graph x = x_graph();
  DistanceMatrix dm = all_pairs_distances(x);
  CycleSet iso = enumerate_isometric_cycles(x, dm);
  CHECK(iso.size() == 4);  // four hexagons
  auto recs = find_intertwinings(x, dm, iso);
  CHECK(recs.size() == 6);  // every pair of hexagons intertwines
  // Vertex order u3 u4 u5 v0 v1 v2 v3 v4 v5 z1: the two defining hexagons
  // share the path v0 v1 v2 = 3 4 5.
  bool hexagon_pair = false;
  for (const auto& r : recs) {
    CHECK(r.m == 2);
    CHECK(r.residue == 2);
    CHECK(r.n1 + r.n2 == (iso[r.c1].length() + iso[r.c2].length() - 4 * r.m) / 2);
    std::vector<int> sp = r.shared_path;
    if (sp == std::vector<int>{3, 4, 5} || sp == std::vector<int>{5, 4, 3})
      hexagon_pair = true;
  }
  CHECK(hexagon_pair);
}

TEST_CASE("intertwinings elsewhere") {
  Graph c8 = even_cycle(4);
  DistanceMatrix d8 = all_pairs_distances(c8);
  CycleSet iso8 = enumerate_isometric_cycles(c8, d8);
  CHECK(iso8.size() == 1);
  CHECK(find_intertwinings(c8, d8, iso8).empty());

  // Face-hexagon pairs through two face edges all intertwine with
  // residue one: four hexagons times six two-edge arcs.
  Graph q3 = oracle::q3();
  DistanceMatrix dq = all_pairs_distances(q3);
  CycleSet isoq = enumerate_isometric_cycles(q3, dq);
  auto recs = find_intertwinings(q3, dq, isoq);
  CHECK(recs.size() == 24);
  for (const auto& r : recs) {
    CHECK(r.m == 2);
    CHECK(r.residue == 1);
    CHECK(std::min(isoq[r.c1].length(), isoq[r.c2].length()) == 4);
  }
}

TEST_CASE("shared paths never exceed half of either cycle") {
  for (const Graph& g : {oracle::c6(), oracle::q3(), x_graph(), middle_levels(2)}) {
    DistanceMatrix dm = all_pairs_distances(g);
    CycleSet iso = enumerate_isometric_cycles(g, dm);
    for (const auto& r : find_intertwinings(g, dm, iso)) {
      CHECK(2 * r.m <= iso[r.c1].length());
      CHECK(2 * r.m <= iso[r.c2].length());
      CHECK(r.n1 >= 0);
      CHECK(r.n2 >= 0);
    }
  }
}

TEST_CASE("isometric copies of the obstruction") {
  Graph x = x_graph();
  DistanceMatrix dx = all_pairs_distances(x);
  auto self = find_isometric_X(x, dx);
  REQUIRE(self.has_value());
  for (int i = 0; i < 10; ++i) CHECK((*self)[i] == i);

  Graph c8 = even_cycle(4);
  CHECK(!find_isometric_X(c8, all_pairs_distances(c8)).has_value());

  Graph m5 = middle_levels(2);
  DistanceMatrix dm = all_pairs_distances(m5);
  auto embed = find_isometric_X(m5, dm);
  REQUIRE(embed.has_value());
  // Edge preserving, induced and distance preserving.
  DistanceMatrix dxx = all_pairs_distances(x);
  std::set<int> image;
  for (int i = 0; i < 10; ++i) image.insert((*embed)[i]);
  CHECK(image.size() == 10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j)
      CHECK(dm((*embed)[i], (*embed)[j]) == dxx(i, j));
}

TEST_CASE("intersection witness for intertwining") {
  Graph x = x_graph();
  DistanceMatrix dx = all_pairs_distances(x);
  CycleSet isox = enumerate_isometric_cycles(x, dx);
  IntertwineWitness wx = intersect_to_intertwine_witness(x, dx, isox);
  CHECK(wx.hypothesis_met);
  REQUIRE(wx.witness.has_value());
  CHECK(wx.witness->m >= 2);

  Graph c8 = even_cycle(4);
  DistanceMatrix d8 = all_pairs_distances(c8);
  CycleSet iso8 = enumerate_isometric_cycles(c8, d8);
  IntertwineWitness w8 = intersect_to_intertwine_witness(c8, d8, iso8);
  CHECK(!w8.hypothesis_met);
  CHECK(!w8.witness.has_value());

  Graph q3 = oracle::q3();
  DistanceMatrix dq = all_pairs_distances(q3);
  CycleSet isoq = enumerate_isometric_cycles(q3, dq);
  IntertwineWitness wq = intersect_to_intertwine_witness(q3, dq, isoq);
  CHECK(wq.hypothesis_met);
  CHECK(wq.witness.has_value());
}
