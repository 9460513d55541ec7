#include "pcube/generators.hpp"

#include <bit>

#include "pcube/errors.hpp"

namespace pcube {

Graph hypercube(int d) {
  if (d < 0 || d > 20) throw SizeLimit("hypercube: dimension out of range");
  int n = 1 << d;
  std::vector<Edge> edges;
  edges.reserve(size_t(n) * d / 2);
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b) {
      int w = v ^ (1 << b);
      if (v < w) edges.emplace_back(v, w);
    }
  return Graph::from_edges(n, edges);
}

Graph even_cycle(int k) {
  if (k < 2) throw InvalidArgument("even_cycle: need k >= 2");
  int n = 2 * k;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph middle_levels(int t) {
  if (t < 1) throw InvalidArgument("middle_levels: need t >= 1");
  int d = 2 * t + 1;
  if (d > 20) throw SizeLimit("middle_levels: parameter too large");
  std::vector<int> verts;
  for (int v = 0; v < (1 << d); ++v) {
    int w = std::popcount(static_cast<unsigned>(v));
    if (w == t || w == t + 1) verts.push_back(v);
  }
  std::vector<int> pos(1 << d, -1);
  for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (int v : verts)
    for (int b = 0; b < d; ++b) {
      int w = v ^ (1 << b);
      if (v < w && pos[w] >= 0) edges.emplace_back(pos[v], pos[w]);
    }
  return Graph::from_edges(static_cast<int>(verts.size()), edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.n == 0 || h.n == 0)
    throw InvalidArgument("cartesian_product: empty factor");
  std::vector<Edge> edges;
  edges.reserve(size_t(g.m()) * h.n + size_t(h.m()) * g.n);
  for (auto [a, b] : g.edges)
    for (int y = 0; y < h.n; ++y) edges.emplace_back(a * h.n + y, b * h.n + y);
  for (auto [x, y] : h.edges)
    for (int a = 0; a < g.n; ++a) edges.emplace_back(a * h.n + x, a * h.n + y);
  return Graph::from_edges(g.n * h.n, edges);
}

const std::array<const char*, 10>& x_graph_names() {
  static const std::array<const char*, 10> names = {
      "u3", "u4", "u5", "v0", "v1", "v2", "v3", "v4", "v5", "z1"};
  return names;
}

const std::array<Edge, 12>& x_graph_edges() {
  // u5u4 u4u3 u5v0 v0v1 v1v2 u3v2 v0v5 v2v3 v5v4 v4v3 u4z1 z1v4
  static const std::array<Edge, 12> edges = {{{1, 2},
                                              {0, 1},
                                              {2, 3},
                                              {3, 4},
                                              {4, 5},
                                              {0, 5},
                                              {3, 8},
                                              {5, 6},
                                              {7, 8},
                                              {6, 7},
                                              {1, 9},
                                              {7, 9}}};
  return edges;
}

Graph x_graph() {
  const auto& e = x_graph_edges();
  return Graph::from_edges(10, std::vector<Edge>(e.begin(), e.end()));
}

}  // namespace pcube
