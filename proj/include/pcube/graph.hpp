#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pcube {

// An unordered edge, stored with first < second.
using Edge = std::pair<int, int>;

// Immutable simple graph on dense vertex indices 0..n-1. All modules share
// this labeling. Adjacency lists are sorted; the edge list is sorted
// lexicographically, so edge ids are a stable total order.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<Edge> edges;

  // Builds from an edge list. Throws InvalidArgument on loops, duplicate
  // edges or out-of-range endpoints.
  static Graph from_edges(int n, const std::vector<Edge>& list);

  int m() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;
  // Id of edge {u,v} in the sorted edge list, -1 if absent.
  int edge_id(int u, int v) const;
};

// Full matrix of BFS hop distances; -1 marks unreachable pairs.
struct DistanceMatrix {
  int n = 0;
  std::vector<int32_t> d;

  int32_t operator()(int u, int v) const { return d[size_t(u) * n + v]; }
  bool all_reachable() const;
  // Largest finite entry (diameter of the largest component).
  int32_t max_finite() const;
};

struct BasicInvariants {
  bool connected = false;
  bool bipartite = false;
  std::optional<int> girth;  // empty for forests
  int min_degree = 0;
  int max_degree = 0;
  bool regular = false;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;  // new index -> vertex of the parent graph
};

DistanceMatrix all_pairs_distances(const Graph& g);
BasicInvariants basic_invariants(const Graph& g);

// Induced subgraph on s (deduplicated, sorted ascending). Throws on empty s.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);

bool is_connected(const Graph& g);
// Two-coloring by BFS; nullopt when some component has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);

// DOT text with plain numeric node ids.
std::string to_dot(const Graph& g);

}  // namespace pcube
