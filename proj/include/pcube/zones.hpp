#pragma once

#include <string>
#include <vector>

#include "pcube/cycles.hpp"
#include "pcube/graph.hpp"
#include "pcube/theta.hpp"

namespace pcube {

struct ZoneLink {
  int a = 0, b = 0;            // indices into ZoneGraph::nodes, a < b
  std::vector<int> witnesses;  // indices into the convex CycleSet
};

// Nodes are the edges of one class; two nodes are linked when they lie on
// a common convex cycle. One link per node pair, all witnesses kept.
struct ZoneGraph {
  int class_index = 0;
  std::vector<Edge> nodes;  // class edges in edge-id order
  std::vector<ZoneLink> links;
};

struct TreeZoneResult {
  bool tree_zone = true;
  int bad_class = -1;   // first class whose zone is not a tree
  std::string reason;   // "cyclic" or "disconnected"
};

struct EulerReport {
  int n = 0;
  int m = 0;
  int i = 0;       // class count
  long ce = 0;     // convex excess
  long value = 0;  // 2n - m - i - ce
  bool tree_zone = false;
  // Check failures surfaced as data, consumed by the census.
  std::vector<std::string> violations;
};

ZoneGraph zone_graph(const Graph& g, const DistanceMatrix& dm,
                     const ThetaPartition& part, const CycleSet& convex_cycles,
                     int k);

TreeZoneResult is_tree_zone(const Graph& g, const DistanceMatrix& dm,
                            const ThetaPartition& part,
                            const CycleSet& convex_cycles);

// Sum of (|C| - 4) / 2 over all convex cycles; throws on odd lengths.
long convex_excess(const CycleSet& convex_cycles);

EulerReport euler_report(const Graph& g, const DistanceMatrix& dm,
                         const ThetaPartition& part,
                         const CycleSet& convex_cycles);

std::string zone_to_dot(const ZoneGraph& z);

}  // namespace pcube
