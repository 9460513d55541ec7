#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pcube/graph.hpp"

namespace pcube {

// Partition of the edge set into classes of the transitive closure of the
// Djokovic-Winkler relation. Classes are ordered by their representative
// edge (the lexicographically smallest member), and each class lists edge
// ids in ascending order.
struct ThetaPartition {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;  // edge id -> class index
  bool transitive = true;     // relation already transitive (no closure needed)
  // When not transitive: edge ids e1, e2, e3 with e1~e2, e2~e3, not e1~e3.
  std::optional<std::array<int, 3>> transitivity_witness;

  int count() const { return static_cast<int>(classes.size()); }
  // Lexicographically smallest edge of class k; orientation reference for
  // halfspaces and coordinates.
  Edge representative(const Graph& g, int k) const { return g.edges[classes[k].front()]; }
};

// Halfspace data of one class: sides by distance comparison to the
// representative edge (u, v) with u < v; W is the side of u.
struct Halfspaces {
  int class_index = 0;
  Edge rep;
  std::vector<int> side_w;     // closer to rep.first
  std::vector<int> side_wbar;  // closer to rep.second
  std::vector<int> u_set;      // members of side_w incident to a class edge
  std::vector<int> ubar_set;   // members of side_wbar incident to a class edge
  std::vector<int> f_edges;    // edge ids of the class
};

// Binary labels of length count(): bit k of a vertex is 1 when the vertex
// lies on the wbar side of class k. Isometric exactly for partial cubes.
struct Coordinatization {
  std::vector<std::string> labels;  // '0'/'1' text per vertex
  int width = 0;
  bool isometric = false;
  std::optional<Edge> mismatch;  // vertex pair with hamming != distance
};

struct Recognition {
  bool verdict = false;
  std::string witness;  // empty when verdict is true
};

// The defining distance test d(a,x)+d(b,y) != d(a,y)+d(b,x); independent of
// the endpoint order of either edge. Edges must exist in g.
bool theta_related(const Graph& g, const DistanceMatrix& dm, Edge e1, Edge e2);

// Pairwise O(m^2) relation plus union-find closure; the correctness oracle
// for the cut-based fast path below. Throws on disconnected input.
ThetaPartition theta_classes(const Graph& g, const DistanceMatrix& dm);

// O(m * classes) cut method: one class per seed edge by side comparison.
// Valid on partial cubes only; must agree with theta_classes there.
ThetaPartition theta_classes_cut(const Graph& g, const DistanceMatrix& dm);

// Connected + bipartite + transitive relation, double-checked against
// the coordinatization hamming test. Disagreement of the two routes
// throws InternalCheck.
Recognition is_partial_cube(const Graph& g);

// Recognition bundled with everything it computed along the way, so
// downstream consumers do not recompute.
struct RecognitionDetail {
  Recognition rec;
  DistanceMatrix dm;
  std::optional<ThetaPartition> partition;   // present when connected
  std::optional<Coordinatization> coord;     // present when connected
  bool connected = false;
  bool bipartite = false;
};
RecognitionDetail recognize(const Graph& g);

Halfspaces halfspaces(const Graph& g, const DistanceMatrix& dm,
                      const ThetaPartition& part, int k);

Coordinatization coordinatize(const Graph& g, const DistanceMatrix& dm,
                              const ThetaPartition& part);

// All vertices on some shortest a,b-path. Throws on unreachable pairs.
std::vector<int> interval(const Graph& g, const DistanceMatrix& dm, int a, int b);

bool is_isometric_subset(const Graph& g, const DistanceMatrix& dm,
                         const std::vector<int>& s);
bool is_convex_subset(const Graph& g, const DistanceMatrix& dm,
                      const std::vector<int>& s);

}  // namespace pcube
