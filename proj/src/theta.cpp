#include "pcube/theta.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pcube/errors.hpp"
#include "pcube/util.hpp"

namespace pcube {

namespace {

bool related_ids(const Graph& g, const DistanceMatrix& dm, int i, int j) {
  auto [a, b] = g.edges[i];
  auto [x, y] = g.edges[j];
  return dm(a, x) + dm(b, y) != dm(a, y) + dm(b, x);
}

ThetaPartition classes_from_assignment(const Graph& g, std::vector<int> cls_of_raw) {
  // Normalize class ids: order classes by smallest member edge id.
  int m = g.m();
  std::map<int, std::vector<int>> by_rep;  // smallest edge id -> members
  std::map<int, int> rep_of;
  for (int e = 0; e < m; ++e) {
    int r = cls_of_raw[e];
    auto it = rep_of.find(r);
    if (it == rep_of.end()) {
      rep_of[r] = e;
      by_rep[e] = {e};
    } else {
      by_rep[it->second].push_back(e);
    }
  }
  ThetaPartition part;
  part.class_of.assign(m, -1);
  for (auto& [rep, members] : by_rep) {
    int k = part.count();
    for (int e : members) part.class_of[e] = k;
    part.classes.push_back(std::move(members));
  }
  return part;
}

}  // namespace

bool theta_related(const Graph& g, const DistanceMatrix& dm, Edge e1, Edge e2) {
  int i = g.edge_id(e1.first, e1.second);
  int j = g.edge_id(e2.first, e2.second);
  if (i < 0 || j < 0) throw InvalidArgument("theta_related: not an edge");
  return related_ids(g, dm, i, j);
}

ThetaPartition theta_classes(const Graph& g, const DistanceMatrix& dm) {
  if (!is_connected(g)) throw InvalidArgument("theta_classes: disconnected graph");
  int m = g.m();
  Dsu dsu(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (related_ids(g, dm, i, j)) dsu.unite(i, j);

  std::vector<int> raw(m);
  for (int e = 0; e < m; ++e) raw[e] = dsu.find(e);
  ThetaPartition part = classes_from_assignment(g, std::move(raw));

  // Transitivity holds exactly when every closure class is a clique of the
  // raw relation.
  for (const auto& cls : part.classes) {
    for (size_t i = 0; i + 1 < cls.size() && part.transitive; ++i) {
      for (size_t j = i + 1; j < cls.size(); ++j) {
        if (!related_ids(g, dm, cls[i], cls[j])) {
          // Find a chain witness e1 ~ e2 ~ e3 with e1 !~ e3.
          int e1 = cls[i], e3 = cls[j];
          for (int e2 : cls) {
            if (related_ids(g, dm, e1, e2) && related_ids(g, dm, e2, e3)) {
              part.transitivity_witness = {{e1, e2, e3}};
              break;
            }
          }
          if (!part.transitivity_witness) part.transitivity_witness = {{e1, e1, e3}};
          part.transitive = false;
          break;
        }
      }
    }
    if (!part.transitive) break;
  }
  return part;
}

ThetaPartition theta_classes_cut(const Graph& g, const DistanceMatrix& dm) {
  if (!is_connected(g)) throw InvalidArgument("theta_classes_cut: disconnected graph");
  int m = g.m();
  std::vector<int> raw(m, -1);
  for (int seed = 0; seed < m; ++seed) {
    if (raw[seed] >= 0) continue;
    auto [u, v] = g.edges[seed];
    for (int e = seed; e < m; ++e) {
      if (raw[e] >= 0) continue;
      auto [x, y] = g.edges[e];
      bool xu = dm(u, x) < dm(v, x), yu = dm(u, y) < dm(v, y);
      if (xu != yu) raw[e] = seed;
    }
  }
  ThetaPartition part = classes_from_assignment(g, std::move(raw));
  part.transitive = true;  // fast path does not evaluate transitivity
  return part;
}

Coordinatization coordinatize(const Graph& g, const DistanceMatrix& dm,
                              const ThetaPartition& part) {
  Coordinatization c;
  c.width = part.count();
  c.labels.assign(g.n, std::string(c.width, '0'));
  for (int k = 0; k < c.width; ++k) {
    auto [u, v] = part.representative(g, k);
    for (int w = 0; w < g.n; ++w)
      if (dm(v, w) < dm(u, w)) c.labels[w][k] = '1';
  }
  c.isometric = true;
  for (int a = 0; a < g.n && c.isometric; ++a) {
    for (int b = a + 1; b < g.n; ++b) {
      int h = 0;
      for (int k = 0; k < c.width; ++k) h += c.labels[a][k] != c.labels[b][k];
      if (h != dm(a, b)) {
        c.isometric = false;
        c.mismatch = Edge{a, b};
        break;
      }
    }
  }
  return c;
}

RecognitionDetail recognize(const Graph& g) {
  RecognitionDetail out;
  out.dm = all_pairs_distances(g);
  out.connected = out.dm.all_reachable() && g.n > 0;
  if (g.n == 0) {
    out.rec = {false, "empty graph"};
    return out;
  }
  auto coloring = bipartition(g);
  out.bipartite = coloring.has_value();
  if (!out.connected) {
    out.rec.verdict = false;
    for (int v = 1; v < g.n; ++v)
      if (out.dm(0, v) < 0) {
        std::ostringstream os;
        os << "disconnected: no path between 0 and " << v;
        out.rec.witness = os.str();
        break;
      }
    return out;
  }

  out.partition = theta_classes(g, out.dm);
  out.coord = coordinatize(g, out.dm, *out.partition);

  bool via_theta = out.bipartite && out.partition->transitive;
  bool via_hamming = out.coord->isometric;
  if (via_theta != via_hamming)
    throw InternalCheck("recognition routes disagree (theta vs hamming)");

  out.rec.verdict = via_theta;
  if (!out.rec.verdict) {
    std::ostringstream os;
    if (!out.bipartite) {
      // Name an edge inside an odd closed walk: any edge joining vertices
      // of equal BFS parity from vertex 0.
      for (auto [u, v] : g.edges)
        if ((out.dm(0, u) & 1) == (out.dm(0, v) & 1)) {
          os << "odd cycle through edge (" << u << "," << v << ")";
          break;
        }
    } else if (out.partition->transitivity_witness) {
      auto [e1, e2, e3] = *out.partition->transitivity_witness;
      auto pr = [&](int e) {
        return "(" + std::to_string(g.edges[e].first) + "," +
               std::to_string(g.edges[e].second) + ")";
      };
      os << "theta not transitive on edges " << pr(e1) << ", " << pr(e2) << ", "
         << pr(e3);
    } else {
      os << "theta not an equivalence";
    }
    out.rec.witness = os.str();
  }
  return out;
}

Recognition is_partial_cube(const Graph& g) { return recognize(g).rec; }

Halfspaces halfspaces(const Graph& g, const DistanceMatrix& dm,
                      const ThetaPartition& part, int k) {
  if (k < 0 || k >= part.count())
    throw InvalidArgument("halfspaces: class index out of range");
  Halfspaces h;
  h.class_index = k;
  h.rep = part.representative(g, k);
  h.f_edges = part.classes[k];
  auto [u, v] = h.rep;
  std::vector<char> in_w(g.n, 0);
  for (int w = 0; w < g.n; ++w) {
    if (dm(u, w) < dm(v, w)) {
      in_w[w] = 1;
      h.side_w.push_back(w);
    } else {
      h.side_wbar.push_back(w);
    }
  }
  std::vector<char> seen_u(g.n, 0), seen_ubar(g.n, 0);
  for (int e : h.f_edges) {
    auto [x, y] = g.edges[e];
    if (!in_w[x]) std::swap(x, y);
    seen_u[x] = 1;
    seen_ubar[y] = 1;
  }
  for (int w = 0; w < g.n; ++w) {
    if (seen_u[w]) h.u_set.push_back(w);
    if (seen_ubar[w]) h.ubar_set.push_back(w);
  }
  return h;
}

std::vector<int> interval(const Graph& g, const DistanceMatrix& dm, int a, int b) {
  if (a < 0 || b < 0 || a >= g.n || b >= g.n)
    throw InvalidArgument("interval: vertex out of range");
  if (dm(a, b) < 0) throw InvalidArgument("interval: unreachable pair");
  std::vector<int> out;
  for (int w = 0; w < g.n; ++w)
    if (dm(a, w) >= 0 && dm(w, b) >= 0 && dm(a, w) + dm(w, b) == dm(a, b))
      out.push_back(w);
  return out;
}

bool is_isometric_subset(const Graph& g, const DistanceMatrix& dm,
                         const std::vector<int>& s) {
  InducedSubgraph sub = induced_subgraph(g, s);
  DistanceMatrix local = all_pairs_distances(sub.graph);
  int k = sub.graph.n;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (local(i, j) != dm(sub.to_parent[i], sub.to_parent[j])) return false;
  return true;
}

bool is_convex_subset(const Graph& g, const DistanceMatrix& dm,
                      const std::vector<int>& s) {
  std::vector<char> in(g.n, 0);
  for (int v : s) {
    if (v < 0 || v >= g.n) throw InvalidArgument("is_convex_subset: vertex out of range");
    in[v] = 1;
  }
  if (s.empty()) throw InvalidArgument("is_convex_subset: empty vertex set");
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j) {
      if (dm(s[i], s[j]) < 0) return false;
      for (int w : interval(g, dm, s[i], s[j]))
        if (!in[w]) return false;
    }
  return true;
}

}  // namespace pcube
