#include "pcube/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "pcube/errors.hpp"

namespace pcube {

Graph Graph::from_edges(int n, const std::vector<Edge>& list) {
  if (n < 0) throw InvalidArgument("graph: negative vertex count");
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  g.edges.reserve(list.size());
  for (auto [u, v] : list) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidArgument("graph: edge endpoint out of range");
    if (u == v) throw InvalidArgument("graph: loop edge");
    if (u > v) std::swap(u, v);
    g.edges.emplace_back(u, v);
  }
  std::sort(g.edges.begin(), g.edges.end());
  if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
    throw InvalidArgument("graph: duplicate edge");
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n || v >= n) return false;
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), Edge{u, v});
  if (it == edges.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges.begin());
}

bool DistanceMatrix::all_reachable() const {
  for (int32_t x : d)
    if (x < 0) return false;
  return true;
}

int32_t DistanceMatrix::max_finite() const {
  int32_t best = 0;
  for (int32_t x : d) best = std::max(best, x);
  return best;
}

namespace {

void bfs_row(const Graph& g, int src, int32_t* out) {
  for (int i = 0; i < g.n; ++i) out[i] = -1;
  std::deque<int> q{src};
  out[src] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : g.adj[u])
      if (out[w] < 0) {
        out[w] = out[u] + 1;
        q.push_back(w);
      }
  }
}

}  // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix dm;
  dm.n = g.n;
  dm.d.assign(size_t(g.n) * g.n, -1);
  for (int v = 0; v < g.n; ++v) bfs_row(g, v, dm.d.data() + size_t(v) * g.n);
  return dm;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  std::vector<int32_t> row(g.n);
  bfs_row(g, 0, row.data());
  for (int32_t x : row)
    if (x < 0) return false;
  return true;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> color(g.n, -1);
  for (int s = 0; s < g.n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : g.adj[u]) {
        if (color[w] < 0) {
          color[w] = color[u] ^ 1;
          q.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

namespace {

// Shortest cycle via BFS from every root: the minimum over all roots and
// non-tree edges of dist[u] + dist[w] + 1 is the girth.
std::optional<int> girth_of(const Graph& g) {
  int best = -1;
  std::vector<int32_t> dist(g.n);
  std::vector<int> parent(g.n);
  for (int r = 0; r < g.n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<int> q{r};
    dist[r] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      if (best > 0 && 2 * dist[u] >= best) continue;
      for (int w : g.adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push_back(w);
        } else if (w != parent[u]) {
          int c = dist[u] + dist[w] + 1;
          if (best < 0 || c < best) best = c;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

}  // namespace

BasicInvariants basic_invariants(const Graph& g) {
  BasicInvariants inv;
  inv.connected = is_connected(g);
  inv.bipartite = bipartition(g).has_value();
  inv.girth = girth_of(g);
  if (g.n == 0) {
    inv.regular = true;
    return inv;
  }
  inv.min_degree = g.n;
  inv.max_degree = 0;
  for (int v = 0; v < g.n; ++v) {
    inv.min_degree = std::min(inv.min_degree, g.degree(v));
    inv.max_degree = std::max(inv.max_degree, g.degree(v));
  }
  inv.regular = inv.min_degree == inv.max_degree;
  return inv;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
  std::vector<int> verts = s;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.empty()) throw InvalidArgument("induced_subgraph: empty vertex set");
  for (int v : verts)
    if (v < 0 || v >= g.n)
      throw InvalidArgument("induced_subgraph: vertex out of range");

  std::vector<int> pos(g.n, -1);
  for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges)
    if (pos[u] >= 0 && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);

  InducedSubgraph out;
  out.graph = Graph::from_edges(static_cast<int>(verts.size()), edges);
  out.to_parent = std::move(verts);
  return out;
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph g {\n";
  for (int v = 0; v < g.n; ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace pcube
