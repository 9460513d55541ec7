#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcube/cycles.hpp"
#include "pcube/graph.hpp"
#include "pcube/theta.hpp"

namespace pcube {

// A chain of isometric cycles joining two related edges: the start edge
// lies only on the first cycle, the end edge only on the last, consecutive
// cycles share exactly one edge of the start edge's class, non-consecutive
// cycles are vertex-disjoint, and both sides are geodesics of g.
struct Traverse {
  std::vector<CycleRecord> cycles;
  int v1 = 0, u1 = 0;  // start edge, v side and u side endpoints
  int v2 = 0, u2 = 0;  // end edge
  std::vector<int> v_side;
  std::vector<int> u_side;
  int length = 0;  // common side length == d(v1,v2) == d(u1,u2)
  bool convex = false;

  Edge start_edge() const { return v1 < u1 ? Edge{v1, u1} : Edge{u1, v1}; }
  Edge end_edge() const { return v2 < u2 ? Edge{v2, u2} : Edge{u2, v2}; }
};

struct TraverseCheck {
  bool ok = true;
  std::string violation;  // first violated clause, empty when ok
};

TraverseCheck validate_traverse(const Graph& g, const DistanceMatrix& dm,
                                const ThetaPartition& part, const Traverse& t);

// Path search over the class's cycle-incidence structure: walks from e1
// through cycles chained by class edges until e2 is reached, validating
// each candidate. Results ordered lexicographically by cycle id sequence,
// capped at limit. e1 and e2 must be distinct edges of one class. On a
// partial cube an empty result with convex_only set falsifies a law the
// census reports as a violation event; it is data here, never an error.
std::vector<Traverse> find_traverses(const Graph& g, const DistanceMatrix& dm,
                                     const ThetaPartition& part,
                                     const CycleSet& iso_cycles, Edge e1, Edge e2,
                                     bool convex_only, int limit = 16);

struct PasteCycle {
  CycleRecord cycle;
  int i = 0, j = 0;  // the contiguous sub-path p[i..j] the cycle contains
};

// Given a geodesic p with at least one other geodesic joining its ends,
// finds a convex cycle made of a contiguous sub-path of p and a detour
// avoiding p. Returns nullopt when p is the unique geodesic. Throws when
// p is not a geodesic.
std::optional<PasteCycle> paste_cycle_witness(const Graph& g,
                                              const DistanceMatrix& dm,
                                              const CycleSet& convex_cycles,
                                              const std::vector<int>& p);

struct TwoPossibilities {
  enum class Kind { traverse_side, cycle, violation };
  Kind kind = Kind::violation;
  std::optional<Traverse> traverse;
  std::optional<PasteCycle> paste;
  std::string detail;
};

// Either p is a side of a convex traverse between the matched edges, or a
// convex paste cycle sits on p. The first branch is decided exactly by
// tiling p with convex cycle arcs. p must join the endpoints of e1 and e2
// lying in the same halfspace.
TwoPossibilities two_possibilities(const Graph& g, const DistanceMatrix& dm,
                                   const ThetaPartition& part,
                                   const CycleSet& iso_cycles, Edge e1, Edge e2,
                                   const std::vector<int>& p);

}  // namespace pcube
