#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

using pcube::Edge;
using pcube::Graph;

std::string ref_graph6_encode(int n, const std::vector<Edge>& edges) {
  std::set<std::pair<int, int>> eset;
  for (auto [u, v] : edges) eset.insert({std::min(u, v), std::max(u, v)});
  std::vector<int> bits;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) bits.push_back(eset.count({u, v}) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);

  std::string out;
  if (n <= 62) {
    out.push_back(char(63 + n));
  } else if (n <= 258047) {
    out.push_back(char(126));
    out.push_back(char(63 + ((n >> 12) & 63)));
    out.push_back(char(63 + ((n >> 6) & 63)));
    out.push_back(char(63 + (n & 63)));
  } else {
    throw std::runtime_error("ref encoder: n too large");
  }
  for (size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (int k = 0; k < 6; ++k) v = (v << 1) | bits[i + k];
    out.push_back(char(63 + v));
  }
  return out;
}

RefGraph ref_graph6_decode(const std::string& line) {
  size_t pos = 0;
  auto byte = [&]() {
    if (pos >= line.size()) throw std::runtime_error("ref decoder: truncated");
    int c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126) throw std::runtime_error("ref decoder: bad char");
    return c - 63;
  };
  long n;
  int b = byte();
  if (b < 63) {
    n = b;
  } else {
    long a = byte();
    if (a < 63) {
      n = (a << 12) | (byte() << 6) | byte();
    } else {
      n = 0;
      for (int k = 0; k < 6; ++k) n = (n << 6) | byte();
    }
  }
  std::vector<int> bits;
  long need = n * (n - 1) / 2;
  while (static_cast<long>(bits.size()) < need) {
    int v = byte();
    for (int k = 5; k >= 0; --k) bits.push_back((v >> k) & 1);
  }
  for (size_t i = need; i < bits.size(); ++i)
    if (bits[i]) throw std::runtime_error("ref decoder: bad padding");
  if (pos != line.size()) throw std::runtime_error("ref decoder: extra bytes");

  RefGraph out;
  out.n = static_cast<int>(n);
  long idx = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++idx)
      if (bits[idx]) out.edges.emplace_back(u, v);
  return out;
}

std::vector<std::vector<int>> ref_distances(const Graph& g) {
  std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, -1));
  for (int s = 0; s < g.n; ++s) {
    std::deque<int> q{s};
    d[s][s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : g.adj[u])
        if (d[s][w] < 0) {
          d[s][w] = d[s][u] + 1;
          q.push_back(w);
        }
    }
  }
  return d;
}

namespace {

void cycle_dfs(const Graph& g, std::vector<int>& path, std::vector<char>& used,
               int max_len, std::vector<std::vector<int>>& out) {
  int anchor = path[0];
  for (int w : g.adj[path.back()]) {
    if (w == anchor && path.size() >= 3) {
      if (path[1] < path.back()) out.push_back(path);
      continue;
    }
    if (w <= anchor || used[w]) continue;
    if (static_cast<int>(path.size()) + 1 > max_len) continue;
    used[w] = 1;
    path.push_back(w);
    cycle_dfs(g, path, used, max_len, out);
    path.pop_back();
    used[w] = 0;
  }
}

}  // namespace

std::vector<std::vector<int>> all_cycles_bruteforce(const Graph& g, int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> used(g.n, 0);
  for (int a = 0; a < g.n; ++a) {
    path = {a};
    std::fill(used.begin(), used.end(), 0);
    used[a] = 1;
    cycle_dfs(g, path, used, max_len, out);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::vector<int>> isometric_cycles_bruteforce(const Graph& g,
                                                          int max_len) {
  auto d = ref_distances(g);
  std::vector<std::vector<int>> out;
  for (const auto& c : all_cycles_bruteforce(g, max_len)) {
    int L = static_cast<int>(c.size());
    bool iso = true;
    for (int i = 0; i < L && iso; ++i)
      for (int j = i + 1; j < L; ++j)
        if (d[c[i]][c[j]] != std::min(j - i, L - (j - i))) {
          iso = false;
          break;
        }
    if (iso) out.push_back(c);
  }
  return out;
}

std::vector<std::vector<int>> convex_cycles_bruteforce(const Graph& g,
                                                       int max_len) {
  auto d = ref_distances(g);
  std::vector<std::vector<int>> out;
  for (const auto& c : isometric_cycles_bruteforce(g, max_len)) {
    std::vector<char> in(g.n, 0);
    for (int v : c) in[v] = 1;
    bool convex = true;
    for (size_t i = 0; i < c.size() && convex; ++i)
      for (size_t j = i + 1; j < c.size() && convex; ++j)
        for (int w = 0; w < g.n; ++w)
          if (!in[w] && d[c[i]][w] + d[w][c[j]] == d[c[i]][c[j]]) {
            convex = false;
            break;
          }
    if (convex) out.push_back(c);
  }
  return out;
}

namespace {

bool embed_rec(const Graph& g, const std::vector<std::vector<int>>& d,
               const std::vector<int>& order, const std::vector<int>& parent,
               size_t next, std::vector<long>& label, std::vector<char>& used,
               int dcube) {
  if (next == order.size()) return true;
  int v = order[next];
  long base = label[parent[v]];
  for (int b = 0; b < dcube; ++b) {
    long cand = base ^ (1L << b);
    if (used[cand]) continue;
    bool ok = true;
    for (size_t k = 0; k < next; ++k) {
      int u = order[k];
      if (__builtin_popcountll(cand ^ label[u]) != d[v][u]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    label[v] = cand;
    used[cand] = 1;
    if (embed_rec(g, d, order, parent, next + 1, label, used, dcube)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

bool embeds_in_hypercube(const Graph& g, int dcube) {
  if (g.n == 0) return false;
  if (dcube < 0 || dcube > 24) throw std::runtime_error("oracle: d out of range");
  auto d = ref_distances(g);
  for (int v = 0; v < g.n; ++v)
    if (d[0][v] < 0) return false;  // disconnected
  std::vector<int> order{0}, parent(g.n, -1);
  std::vector<char> seen(g.n, 0);
  seen[0] = 1;
  for (size_t h = 0; h < order.size(); ++h)
    for (int w : g.adj[order[h]])
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = order[h];
        order.push_back(w);
      }
  std::vector<long> label(g.n, 0);
  std::vector<char> used(size_t(1) << dcube, 0);
  used[0] = 1;
  return embed_rec(g, d, order, parent, 1, label, used, dcube);
}

bool is_partial_cube_bruteforce(const Graph& g) {
  if (g.n == 0) return false;
  if (g.n == 1) return true;
  return embeds_in_hypercube(g, g.n - 1);
}

bool isomorphic_bruteforce(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.m() != b.m()) return false;
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges)
      if (!b.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph make_graph(int n, const std::vector<Edge>& edges) {
  return Graph::from_edges(n, edges);
}

Graph c6() {
  return make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}

Graph q3() {
  std::vector<Edge> e;
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (v < (v ^ (1 << b))) e.push_back({v, v ^ (1 << b)});
  return make_graph(8, e);
}

Graph k23() {
  return make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return make_graph(n, e);
}

}  // namespace oracle
