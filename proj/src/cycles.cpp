#include "pcube/cycles.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pcube/errors.hpp"
#include "pcube/generators.hpp"

namespace pcube {

bool CycleRecord::contains_edge(Edge e) const {
  int L = length();
  for (int i = 0; i < L; ++i)
    if (edge_at(i) == e) return true;
  return false;
}

namespace {

bool cycle_is_isometric(const DistanceMatrix& dm, const std::vector<int>& c) {
  int L = static_cast<int>(c.size());
  for (int i = 0; i < L; ++i)
    for (int j = i + 1; j < L; ++j) {
      int cd = std::min(j - i, L - (j - i));
      if (dm(c[i], c[j]) != cd) return false;
    }
  return true;
}

struct CycleDfs {
  const Graph& g;
  const DistanceMatrix& dm;
  int max_len;
  bool bip;
  std::vector<int> path;
  std::vector<char> used;
  std::vector<CycleRecord>* out;

  void run(int anchor) {
    path = {anchor};
    used.assign(g.n, 0);
    used[anchor] = 1;
    grow(0, std::max(3, 0));
  }

  // l_pin: exact final length forced by a shortcut pair (0 = free).
  // l_low: lower bound on the final length.
  void grow(int l_pin, int l_low) {
    int anchor = path[0];
    int k = static_cast<int>(path.size());  // index the next vertex gets
    for (int w : g.adj[path.back()]) {
      if (w == anchor) {
        if (k < 3) continue;
        int L = k;
        if (l_pin && l_pin != L) continue;
        if (L < l_low) continue;
        if (path[1] > path[k - 1]) continue;  // canonical direction
        if (!cycle_is_isometric(dm, path)) continue;
        CycleRecord rec;
        rec.vertices = path;
        rec.isometric = true;
        rec.vset = BitVec(g.n);
        for (int v : path) rec.vset.set(v);
        out->push_back(std::move(rec));
        continue;
      }
      if (w < anchor || used[w]) continue;
      if (k + 1 > max_len) continue;

      int pin = l_pin, low = std::max(l_low, k + 1);
      bool ok = true;
      for (int i = 0; i < k; ++i) {
        int gap = k - i;
        int s = dm(path[i], w);
        if (s < 0 || s > gap) {
          ok = false;
          break;
        }
        if (s == gap) {
          low = std::max(low, 2 * gap);
        } else {
          int p = gap + s;
          if (pin == 0)
            pin = p;
          else if (pin != p) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
      if (pin) {
        if (pin > max_len || pin < k + 1 || pin < low) continue;
        if (bip && (pin & 1)) continue;
      } else if (low > max_len) {
        continue;
      }
      used[w] = 1;
      path.push_back(w);
      grow(pin, low);
      path.pop_back();
      used[w] = 0;
    }
  }
};

}  // namespace

CycleSet enumerate_isometric_cycles(const Graph& g, const DistanceMatrix& dm) {
  CycleSet set;
  if (g.n < 3) return set;
  bool bip = bipartition(g).has_value();
  int max_len = 2 * dm.max_finite() + (bip ? 0 : 1);
  if (max_len < 3) return set;

  CycleDfs dfs{g, dm, max_len, bip, {}, {}, &set.cycles};
  for (int a = 0; a < g.n; ++a) dfs.run(a);

  std::sort(set.cycles.begin(), set.cycles.end(),
            [](const CycleRecord& a, const CycleRecord& b) {
              if (a.length() != b.length()) return a.length() < b.length();
              return a.vertices < b.vertices;
            });
  for (auto& c : set.cycles) {
    c.convex = is_convex_subset(g, dm, c.vertices);
  }
  return set;
}

CycleSet convex_subset(const CycleSet& isometric) {
  CycleSet out;
  for (const auto& c : isometric.cycles)
    if (c.convex) out.cycles.push_back(c);
  return out;
}

CycleSet enumerate_convex_cycles(const Graph& g, const DistanceMatrix& dm) {
  return convex_subset(enumerate_isometric_cycles(g, dm));
}

bool antipodal_theta_check(const Graph& g, const DistanceMatrix& dm,
                           const ThetaPartition& part, const CycleRecord& c) {
  (void)dm;
  int L = c.length();
  if (L % 2 != 0) throw InvalidArgument("antipodal_theta_check: odd cycle length");
  int half = L / 2;
  for (int i = 0; i < half; ++i) {
    Edge e = c.edge_at(i);
    Edge f = c.edge_at(i + half);
    int ei = g.edge_id(e.first, e.second);
    int fi = g.edge_id(f.first, f.second);
    if (ei < 0 || fi < 0) throw InvalidArgument("antipodal_theta_check: malformed cycle");
    if (part.class_of[ei] != part.class_of[fi]) return false;
  }
  return true;
}

Intersection classify_intersection(const CycleRecord& c1, const CycleRecord& c2) {
  Intersection res;
  std::vector<int> shared_v;
  for (int v : c1.vertices)
    if (c2.vset.test(v)) shared_v.push_back(v);
  if (shared_v.empty()) {
    res.kind = Intersection::Kind::empty;
    return res;
  }
  if (shared_v.size() == 1) {
    res.kind = Intersection::Kind::single_vertex;
    res.shared_path = shared_v;
    return res;
  }

  std::set<Edge> e2;
  for (int i = 0; i < c2.length(); ++i) e2.insert(c2.edge_at(i));
  std::vector<Edge> shared_e;
  for (int i = 0; i < c1.length(); ++i)
    if (e2.count(c1.edge_at(i))) shared_e.push_back(c1.edge_at(i));

  if (shared_e.size() == 1 && shared_v.size() == 2) {
    res.kind = Intersection::Kind::single_edge;
    res.shared_path = {shared_e[0].first, shared_e[0].second};
    res.m = 1;
    return res;
  }

  // A path intersection means: shared edges form one simple path whose
  // vertex set is exactly the shared vertex set.
  if (shared_e.size() >= 2) {
    std::map<int, std::vector<int>> deg;
    for (auto [u, v] : shared_e) {
      deg[u].push_back(v);
      deg[v].push_back(u);
    }
    bool shape_ok = deg.size() == shared_e.size() + 1 &&
                    deg.size() == shared_v.size();
    int ends = 0;
    for (auto& [v, nb] : deg) {
      if (nb.size() == 1)
        ++ends;
      else if (nb.size() != 2)
        shape_ok = false;
    }
    if (shape_ok && ends == 2) {
      // Walk the path from the smaller endpoint.
      int start = -1;
      for (auto& [v, nb] : deg)
        if (nb.size() == 1 && (start < 0 || v < start)) start = v;
      std::vector<int> walk{start};
      int prev = -1, cur = start;
      while (true) {
        int next = -1;
        for (int nb : deg[cur])
          if (nb != prev) next = nb;
        if (next < 0) break;
        walk.push_back(next);
        prev = cur;
        cur = next;
      }
      if (walk.size() == deg.size()) {
        res.kind = Intersection::Kind::path;
        res.shared_path = walk;
        res.m = static_cast<int>(shared_e.size());
        return res;
      }
    }
  }

  res.kind = Intersection::Kind::other;
  return res;
}

std::vector<IntertwiningRecord> find_intertwinings(const Graph& g,
                                                   const DistanceMatrix& dm,
                                                   const CycleSet& cycles) {
  (void)dm;
  std::vector<IntertwiningRecord> out;
  int n = cycles.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const CycleRecord& a = cycles[i];
      const CycleRecord& b = cycles[j];
      if (!a.vset.intersects(b.vset)) continue;
      Intersection is = classify_intersection(a, b);
      if (is.kind != Intersection::Kind::path || is.m < 2) continue;
      IntertwiningRecord rec;
      rec.c1 = i;
      rec.c2 = j;
      rec.shared_path = is.shared_path;
      rec.m = is.m;
      rec.n1 = (a.length() - 2 * is.m) / 2;
      rec.n2 = (b.length() - 2 * is.m) / 2;
      rec.residue = rec.n1 + rec.n2;
      int by_formula = (a.length() + b.length() - 4 * is.m) / 2;
      if (by_formula != rec.residue)
        throw InternalCheck("intertwining residue formulas disagree");
      out.push_back(std::move(rec));
    }
  return out;
}

namespace {

struct XTemplate {
  std::array<std::array<int, 10>, 10> dist;
  std::array<std::vector<int>, 10> adj;
  // For each slot s > 0, a slot t < s adjacent to it in the template.
  std::array<int, 10> attach;
};

const XTemplate& x_template() {
  static const XTemplate t = [] {
    XTemplate t{};
    Graph x = x_graph();
    DistanceMatrix dm = all_pairs_distances(x);
    for (int i = 0; i < 10; ++i) {
      t.adj[i] = x.adj[i];
      for (int j = 0; j < 10; ++j) t.dist[i][j] = dm(i, j);
    }
    t.attach[0] = -1;
    for (int s = 1; s < 10; ++s) {
      t.attach[s] = -1;
      for (int p = 0; p < s; ++p)
        if (t.dist[s][p] == 1) {
          t.attach[s] = p;
          break;
        }
    }
    return t;
  }();
  return t;
}

bool embed_x(const Graph& g, const DistanceMatrix& dm, const XTemplate& t, int slot,
             std::array<int, 10>& map, std::vector<char>& used) {
  if (slot == 10) return true;
  if (slot == 0) {
    for (int v = 0; v < g.n; ++v) {
      map[0] = v;
      used[v] = 1;
      if (embed_x(g, dm, t, 1, map, used)) return true;
      used[v] = 0;
    }
    return false;
  }
  int anchor = map[t.attach[slot]];
  for (int v : g.adj[anchor]) {
    if (used[v]) continue;
    bool ok = true;
    for (int p = 0; p < slot; ++p)
      if (dm(v, map[p]) != t.dist[slot][p]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    map[slot] = v;
    used[v] = 1;
    if (embed_x(g, dm, t, slot + 1, map, used)) return true;
    used[v] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::array<int, 10>> find_isometric_X(const Graph& g,
                                                    const DistanceMatrix& dm) {
  if (g.n < 10) return std::nullopt;
  const XTemplate& t = x_template();
  std::array<int, 10> map{};
  std::vector<char> used(g.n, 0);
  if (embed_x(g, dm, t, 0, map, used)) return map;
  return std::nullopt;
}

IntertwineWitness intersect_to_intertwine_witness(const Graph& g,
                                                  const DistanceMatrix& dm,
                                                  const CycleSet& cycles) {
  IntertwineWitness res;
  int n = cycles.size();
  for (int i = 0; i < n && !res.hypothesis_met; ++i)
    for (int j = i + 1; j < n && !res.hypothesis_met; ++j) {
      const CycleRecord& a = cycles[i];
      const CycleRecord& b = cycles[j];
      if (a.vset.intersect_count(b.vset) < 2) continue;
      std::vector<int> shared;
      for (int v : a.vertices)
        if (b.vset.test(v)) shared.push_back(v);
      for (size_t x = 0; x < shared.size() && !res.hypothesis_met; ++x)
        for (size_t y = x + 1; y < shared.size(); ++y)
          if (dm(shared[x], shared[y]) >= 2) {
            res.hypothesis_met = true;
            break;
          }
    }
  if (res.hypothesis_met) {
    auto recs = find_intertwinings(g, dm, cycles);
    if (!recs.empty()) res.witness = recs.front();
  }
  return res;
}

}  // namespace pcube
