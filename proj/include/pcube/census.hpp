#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcube/graph.hpp"
#include "pcube/theta.hpp"

namespace pcube {

// Exact isomorphism-invariant key: iterative color refinement plus
// backtracking over non-singleton cells, minimizing the adjacency
// encoding. Equal keys iff isomorphic. Supported size n <= 16.
std::string canonical_key(const Graph& g);

// Connected induced subgraphs of the d-cube that are isometric in it,
// deduplicated up to isomorphism. Every partial cube with at most max_n
// vertices and at most d classes appears exactly once. Exhaustive mode
// requires d <= 5.
struct QdEnumeration {
  std::vector<Graph> graphs;  // sorted by (order, canonical key)
  bool complete = true;
  long orbits_explored = 0;
};
QdEnumeration enumerate_qd_subcubes(int d, int max_n,
                                    long orbit_budget = 200'000'000);

struct StreamItem {
  Graph g;
  std::string g6;  // canonical encoding of g
  DistanceMatrix dm;
  ThetaPartition part;
  Coordinatization coord;
};

struct StreamParseError {
  long line = 0;  // 1-based
  std::string message;
};

struct FilterResult {
  std::vector<StreamItem> items;  // recognized partial cubes, stream order
  std::vector<StreamParseError> errors;
  long scanned = 0;    // lines that parsed
  long bipartite = 0;  // parsed graphs that are bipartite
};

// Parses graph6 lines, keeps the partial cubes. Recognition is internally
// double-checked by the hamming oracle. Parse failures are reported with
// line numbers and the stream continues.
FilterResult filter_stream(const std::vector<std::string>& lines);

struct ViolationEvent {
  std::string g6;
  std::string check;
  std::string detail;
};

// Per-check tallies. "checked" counts graphs evaluated, "hypothesis_met"
// those meeting the check's hypothesis, "passed" those meeting it and
// passing; budget-capped evaluations are counted, never silent.
struct CheckStat {
  long checked = 0;
  long hypothesis_met = 0;
  long passed = 0;
  long violations = 0;
  long budget_capped = 0;
};

struct PerGraphRow {
  std::string g6;
  int n = 0;
  int m = 0;
  std::optional<int> girth;
  int min_degree = 0;
  int i = 0;
  long ce = 0;
  long euler_value = 0;
  bool tree_zone = false;
  bool has_x = false;
};

struct CensusBudget {
  int traverse_limit = 16;
  int max_theta_pairs_per_class = 4000;
  int max_geodesic_samples = 200;
  int max_cor1_checks = 400;
};

struct CensusCounts {
  long scanned = 0;
  long parse_errors = 0;
  long bipartite = 0;
  long partial_cubes = 0;
  long girth_gt6 = 0;
  long girth_gt6_min_degree_ge3 = 0;
  long regular_girth_gt6 = 0;
};

struct CensusReport {
  CensusCounts counts;
  std::vector<std::pair<std::string, CheckStat>> checks;  // fixed order
  std::vector<ViolationEvent> violations;
  std::vector<StreamParseError> parse_errors;
  std::vector<PerGraphRow> per_graph;
  bool per_graph_included = false;
  std::string source;  // "stream" or "qd"
  bool complete = true;
};

// Runs every desk-verifiable claim over the given partial cubes. Results
// are independent of worker count: graphs are checked in parallel and
// merged in stream order. Forests count as girth above any bound.
CensusReport verify_laws(const std::vector<StreamItem>& items,
                          const CensusBudget& budget = {}, int workers = 1,
                          bool per_graph = false);

// End-to-end drivers used by the command line front end.
CensusReport census_over_lines(const std::vector<std::string>& lines,
                               const CensusBudget& budget = {}, int workers = 1,
                               bool per_graph = false);
CensusReport census_over_qd(int dim, int max_n, const CensusBudget& budget = {},
                            int workers = 1, bool per_graph = false);

// Wraps a list of graphs as verified stream items; throws InvalidArgument
// if some graph is not a partial cube.
std::vector<StreamItem> items_from_graphs(const std::vector<Graph>& graphs);

}  // namespace pcube
