#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pcube/graph.hpp"
#include "pcube/theta.hpp"
#include "pcube/util.hpp"

namespace pcube {

// One enumerated cycle in canonical form: smallest vertex first, then the
// direction whose second vertex is smaller.
struct CycleRecord {
  std::vector<int> vertices;
  bool isometric = false;
  bool convex = false;
  BitVec vset;  // cached vertex membership

  int length() const { return static_cast<int>(vertices.size()); }
  Edge edge_at(int i) const {
    int u = vertices[i], v = vertices[(i + 1) % vertices.size()];
    return u < v ? Edge{u, v} : Edge{v, u};
  }
  bool contains_edge(Edge e) const;
  bool operator==(const CycleRecord& o) const { return vertices == o.vertices; }
};

// Cycles sorted by (length, vertex sequence); indices into this order are
// the cycle ids used everywhere else.
struct CycleSet {
  std::vector<CycleRecord> cycles;
  int size() const { return static_cast<int>(cycles.size()); }
  const CycleRecord& operator[](int i) const { return cycles[i]; }
};

struct IntertwiningRecord {
  int c1 = 0, c2 = 0;             // indices into the scanned CycleSet
  std::vector<int> shared_path;   // u_0..u_m
  int m = 0;                      // shared edge count, >= 2
  int n1 = 0, n2 = 0;             // half excess of each cycle
  int residue = 0;                // n1 + n2 == (l1 + l2 - 4m) / 2
};

struct Intersection {
  enum class Kind { empty, single_vertex, single_edge, path, other };
  Kind kind = Kind::empty;
  std::vector<int> shared_path;  // populated for single_edge and path
  int m = 0;                     // shared edge count for path kind
};

// All cycles whose cycle metric equals the graph metric. Depth-first path
// growth anchored at the minimal vertex, pruned by distance consistency,
// length bounded by twice the diameter (+1 when g has odd cycles).
CycleSet enumerate_isometric_cycles(const Graph& g, const DistanceMatrix& dm);

// Subset of the isometric cycles whose vertex set is convex.
CycleSet enumerate_convex_cycles(const Graph& g, const DistanceMatrix& dm);
CycleSet convex_subset(const CycleSet& isometric);

// True when each edge and its antipode share a theta class. Throws on odd
// cycle length.
bool antipodal_theta_check(const Graph& g, const DistanceMatrix& dm,
                           const ThetaPartition& part, const CycleRecord& c);

Intersection classify_intersection(const CycleRecord& c1, const CycleRecord& c2);

// All unordered cycle pairs whose intersection is a single shared path of
// m >= 2 edges with disjoint remainders. The residue is computed both as
// n1+n2 and via the length formula; disagreement throws InternalCheck.
std::vector<IntertwiningRecord> find_intertwinings(const Graph& g,
                                                   const DistanceMatrix& dm,
                                                   const CycleSet& cycles);

// Isometric occurrence of the fixed ten-vertex obstruction; plain
// backtracking over the template with distance pruning. Result maps
// template slots (x_graph order) to host vertices.
std::optional<std::array<int, 10>> find_isometric_X(const Graph& g,
                                                    const DistanceMatrix& dm);

struct IntertwineWitness {
  bool hypothesis_met = false;  // some pair meets in two non-adjacent vertices
  std::optional<IntertwiningRecord> witness;
};

// If any isometric cycle pair intersects in two non-adjacent vertices,
// reports some intertwining pair (not necessarily the same one).
IntertwineWitness intersect_to_intertwine_witness(const Graph& g,
                                                  const DistanceMatrix& dm,
                                                  const CycleSet& cycles);

}  // namespace pcube
