#include <doctest.h>

#include "bipartite_stream.hpp"
#include <algorithm>

#include "oracles.hpp"
#include "pcube/errors.hpp"
#include "pcube/generators.hpp"
#include "pcube/graph6.hpp"

using namespace pcube;

TEST_CASE("graph6 singletons") {
  Graph k1 = parse_graph6("@");
  CHECK(k1.n == 1);
  CHECK(k1.m() == 0);
  CHECK(write_graph6(k1) == "@");

  Graph k2 = parse_graph6("A_");
  CHECK(k2.n == 2);
  CHECK(k2.m() == 1);
  CHECK(k2.has_edge(0, 1));
  CHECK(write_graph6(k2) == "A_");

  CHECK(write_graph6(oracle::c6()) == "EhEG");
}

TEST_CASE("graph6 header tolerated on read, never written") {
  Graph g = parse_graph6(">>graph6<<A_");
  CHECK(g.n == 2);
  CHECK(write_graph6(g) == "A_");
}

TEST_CASE("graph6 malformed inputs") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("A"), ParseError);        // missing body
  CHECK_THROWS_AS(parse_graph6("A_~"), ParseError);      // extra bytes
  CHECK_THROWS_AS(parse_graph6("B\x01"), ParseError);    // char out of range
  CHECK_THROWS_AS(parse_graph6("Ao"), ParseError);       // nonzero padding
}

TEST_CASE("round trip against the reference codec") {
  std::vector<Graph> sample;
  for (int d = 0; d <= 4; ++d) sample.push_back(hypercube(d));
  for (int k = 2; k <= 6; ++k) sample.push_back(even_cycle(k));
  sample.push_back(middle_levels(1));
  sample.push_back(middle_levels(2));
  sample.push_back(x_graph());
  sample.push_back(oracle::k23());
  for (const Graph& g : sample) {
    std::string mine = write_graph6(g);
    std::string ref = oracle::ref_graph6_encode(g.n, g.edges);
    CHECK(mine == ref);
    Graph back = parse_graph6(mine);
    CHECK(back.n == g.n);
    CHECK(back.edges == g.edges);
    oracle::RefGraph rg = oracle::ref_graph6_decode(mine);
    CHECK(rg.n == g.n);
    std::sort(rg.edges.begin(), rg.edges.end());
    CHECK(rg.edges == g.edges);
  }
}

TEST_CASE("round trip identity over a mixed stream") {
  for (const std::string& line : oracle::bipartite_stream_lines(6)) {
    Graph g = parse_graph6(line);
    CHECK(write_graph6(g) == line);
  }
}

TEST_CASE("three-byte length form") {
  Graph p = oracle::path(70);
  std::string s = write_graph6(p);
  CHECK(s[0] == '~');
  Graph back = parse_graph6(s);
  CHECK(back.n == 70);
  CHECK(back.edges == p.edges);
  CHECK(oracle::ref_graph6_encode(p.n, p.edges) == s);
}
