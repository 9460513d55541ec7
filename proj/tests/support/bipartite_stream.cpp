#include "bipartite_stream.hpp"

#include <algorithm>
#include <map>

#include "pcube/census.hpp"
#include "pcube/graph6.hpp"

namespace oracle {

using pcube::Edge;
using pcube::Graph;

std::vector<Graph> all_connected_bipartite_upto(int max_n) {
  std::vector<Graph> out;
  if (max_n < 1) return out;

  // Level n = 1: the single vertex.
  std::map<std::string, Graph> level;
  {
    Graph k1 = Graph::from_edges(1, {});
    level.emplace(pcube::canonical_key(k1), std::move(k1));
  }
  for (const auto& [key, g] : level) out.push_back(g);

  for (int n = 2; n <= max_n; ++n) {
    std::map<std::string, Graph> next;
    for (const auto& [key, g] : level) {
      int old_n = g.n;
      // Attach a new vertex to every nonempty subset of the old vertices.
      for (unsigned subset = 1; subset < (1u << old_n); ++subset) {
        std::vector<Edge> edges = g.edges;
        for (int v = 0; v < old_n; ++v)
          if (subset >> v & 1) edges.push_back({v, old_n});
        Graph cand = Graph::from_edges(old_n + 1, edges);
        if (!pcube::bipartition(cand)) continue;
        std::string ckey = pcube::canonical_key(cand);
        next.emplace(std::move(ckey), std::move(cand));
      }
    }
    for (const auto& [k, g] : next) out.push_back(g);
    level = std::move(next);
  }
  return out;
}

std::vector<std::string> bipartite_stream_lines(int max_n) {
  std::vector<std::string> lines;
  for (const Graph& g : all_connected_bipartite_upto(max_n))
    lines.push_back(pcube::write_graph6(g));
  return lines;
}

}  // namespace oracle
