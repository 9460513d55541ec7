#pragma once

#include <array>

#include "pcube/graph.hpp"

namespace pcube {

// Named graph constructors. Labelings are fixed so downstream output is
// reproducible byte for byte:
//   hypercube      - vertices are bit strings read as integers, adjacency
//                    flips one bit
//   even_cycle     - vertices 0..2k-1 in cyclic order
//   middle_levels  - induced subgraph of hypercube(2t+1) on weight t and
//                    t+1 labels, relabeled in ascending label order
//   cartesian_product - pair (a, b) maps to a * h.n + b (row major)
//   x_graph        - the fixed ten-vertex obstruction below

Graph hypercube(int d);          // 0 <= d <= 20
Graph even_cycle(int k);         // C_{2k}, k >= 2
Graph middle_levels(int t);      // M_{2t+1}, t >= 1
Graph cartesian_product(const Graph& g, const Graph& h);

// Two hexagons sharing a two-edge path, plus a two-edge bridge between
// their far sides. Vertex order: u3 u4 u5 v0 v1 v2 v3 v4 v5 z1.
Graph x_graph();
const std::array<const char*, 10>& x_graph_names();
const std::array<Edge, 12>& x_graph_edges();

}  // namespace pcube
