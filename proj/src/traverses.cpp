#include "pcube/traverses.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pcube/errors.hpp"

namespace pcube {

namespace {

bool is_geodesic_path(const Graph& g, const DistanceMatrix& dm,
                      const std::vector<int>& p) {
  if (p.empty()) return false;
  std::set<int> seen(p.begin(), p.end());
  if (seen.size() != p.size()) return false;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1])) return false;
  return static_cast<int>(p.size()) - 1 == dm(p.front(), p.back());
}

// Shortest path between two vertices inside a vertex subset, smallest
// predecessor tie-break. Empty when unreachable.
std::vector<int> path_in_subset(const Graph& g, const BitVec& allowed, int from,
                                int to) {
  std::vector<int> dist(g.n, -1);
  std::vector<int> order{from};
  dist[from] = 0;
  for (size_t h = 0; h < order.size(); ++h) {
    int u = order[h];
    for (int w : g.adj[u])
      if (allowed.test(w) && dist[w] < 0) {
        dist[w] = dist[u] + 1;
        order.push_back(w);
      }
  }
  if (dist[to] < 0) return {};
  std::vector<int> rev{to};
  int cur = to;
  while (cur != from) {
    int pick = -1;
    for (int w : g.adj[cur])
      if (allowed.test(w) && dist[w] == dist[cur] - 1) {
        pick = w;
        break;  // adjacency sorted: first hit is smallest
      }
    rev.push_back(pick);
    cur = pick;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

BitVec union_vertices(const Graph& g, const std::vector<CycleRecord>& cycles) {
  BitVec u(g.n);
  for (const auto& c : cycles)
    for (int v : c.vertices) u.set(v);
  return u;
}

bool cycle_well_formed(const Graph& g, const CycleRecord& c) {
  int L = c.length();
  if (L < 3) return false;
  std::set<int> seen(c.vertices.begin(), c.vertices.end());
  if (static_cast<int>(seen.size()) != L) return false;
  for (int i = 0; i < L; ++i) {
    auto [u, v] = c.edge_at(i);
    if (!g.has_edge(u, v)) return false;
  }
  return true;
}

bool cycle_isometric_now(const DistanceMatrix& dm, const CycleRecord& c) {
  int L = c.length();
  for (int i = 0; i < L; ++i)
    for (int j = i + 1; j < L; ++j)
      if (dm(c.vertices[i], c.vertices[j]) != std::min(j - i, L - (j - i)))
        return false;
  return true;
}

// Shared vertex count and shared edge list of two cycles.
std::pair<int, std::vector<Edge>> cycle_overlap(const CycleRecord& a,
                                                const CycleRecord& b) {
  int shared_v = a.vset.intersect_count(b.vset);
  std::vector<Edge> shared_e;
  for (int i = 0; i < a.length(); ++i) {
    Edge e = a.edge_at(i);
    if (b.vset.test(e.first) && b.vset.test(e.second) && b.contains_edge(e))
      shared_e.push_back(e);
  }
  return {shared_v, shared_e};
}

}  // namespace

TraverseCheck validate_traverse(const Graph& g, const DistanceMatrix& dm,
                                const ThetaPartition& part, const Traverse& t) {
  auto fail = [](const char* what) { return TraverseCheck{false, what}; };

  int id1 = g.edge_id(t.v1, t.u1);
  int id2 = g.edge_id(t.v2, t.u2);
  if (id1 < 0) return fail("start edge not in graph");
  if (id2 < 0) return fail("end edge not in graph");
  if (part.class_of[id1] != part.class_of[id2])
    return fail("start and end edges not theta related");
  if (!(dm(t.v1, t.v2) < dm(t.u1, t.v2) && dm(t.u1, t.u2) < dm(t.v1, t.u2)))
    return fail("end edge orientation does not match start edge");

  if (t.cycles.empty()) return fail("no cycles");
  for (const auto& c : t.cycles) {
    if (!cycle_well_formed(g, c)) return fail("malformed cycle");
    if (!cycle_isometric_now(dm, c)) return fail("cycle not isometric");
  }

  Edge e1 = t.start_edge(), e2 = t.end_edge();
  int nlast = static_cast<int>(t.cycles.size()) - 1;
  if (!t.cycles.front().contains_edge(e1)) return fail("start edge not on first cycle");
  for (int i = 1; i <= nlast; ++i)
    if (t.cycles[i].contains_edge(e1)) return fail("start edge not only on first cycle");
  if (!t.cycles.back().contains_edge(e2)) return fail("end edge not on last cycle");
  for (int i = 0; i < nlast; ++i)
    if (t.cycles[i].contains_edge(e2)) return fail("end edge not only on last cycle");

  int cls = part.class_of[id1];
  for (int i = 0; i < nlast; ++i) {
    auto [shared_v, shared_e] = cycle_overlap(t.cycles[i], t.cycles[i + 1]);
    if (shared_v != 2 || shared_e.size() != 1)
      return fail("consecutive cycles do not share exactly one edge");
    int eid = g.edge_id(shared_e[0].first, shared_e[0].second);
    if (part.class_of[eid] != cls)
      return fail("connector edge not in the start edge class");
  }
  for (int i = 0; i + 2 <= nlast; ++i)
    for (int j = i + 2; j <= nlast; ++j)
      if (t.cycles[i].vset.intersects(t.cycles[j].vset))
        return fail("non-consecutive cycles intersect");

  BitVec uni = union_vertices(g, t.cycles);
  auto check_side = [&](const std::vector<int>& side, int from, int to,
                        const char* which) -> TraverseCheck {
    if (side.empty() || side.front() != from || side.back() != to)
      return fail(which);
    for (int v : side)
      if (!uni.test(v)) return {false, std::string(which) + ": not on the union"};
    if (!is_geodesic_path(g, dm, side))
      return {false, std::string(which) + ": not a geodesic"};
    return {};
  };
  if (auto c = check_side(t.v_side, t.v1, t.v2, "v side invalid"); !c.ok) return c;
  if (auto c = check_side(t.u_side, t.u1, t.u2, "u side invalid"); !c.ok) return c;
  if (static_cast<int>(t.v_side.size()) != static_cast<int>(t.u_side.size()))
    return fail("sides have different lengths");
  if (t.length != dm(t.v1, t.v2) ||
      t.length != static_cast<int>(t.v_side.size()) - 1)
    return fail("length inconsistent with sides");
  return {};
}

namespace {

struct TraverseSearch {
  const Graph& g;
  const DistanceMatrix& dm;
  const ThetaPartition& part;
  const CycleSet& cycles;
  bool convex_only;
  int limit;
  int cls;
  int v1, u1, v2, u2;
  Edge e1, e2;
  std::map<Edge, std::vector<int>> cycles_with_edge;  // class edges only
  std::vector<Traverse> found;

  Traverse build(const std::vector<int>& ids) {
    Traverse t;
    for (int id : ids) t.cycles.push_back(cycles[id]);
    t.v1 = v1;
    t.u1 = u1;
    t.v2 = v2;
    t.u2 = u2;
    BitVec uni = union_vertices(g, t.cycles);
    t.v_side = path_in_subset(g, uni, v1, v2);
    t.u_side = path_in_subset(g, uni, u1, u2);
    t.length = dm(v1, v2);
    t.convex = true;
    for (const auto& c : t.cycles) t.convex = t.convex && c.convex;
    return t;
  }

  void step(std::vector<int>& ids, BitVec& before_last, Edge entry) {
    if (static_cast<int>(found.size()) >= limit) return;
    const CycleRecord& cur = cycles[ids.back()];
    if (cur.contains_edge(e2)) {
      Traverse t = build(ids);
      if (validate_traverse(g, dm, part, t).ok) found.push_back(std::move(t));
      return;  // a chain may not continue past the end edge
    }
    // Exits: other class edges on the current cycle.
    std::vector<Edge> exits;
    for (int i = 0; i < cur.length(); ++i) {
      Edge f = cur.edge_at(i);
      if (f == entry) continue;
      int id = g.edge_id(f.first, f.second);
      if (id >= 0 && part.class_of[id] == cls) exits.push_back(f);
    }
    std::sort(exits.begin(), exits.end());
    for (Edge f : exits) {
      auto it = cycles_with_edge.find(f);
      if (it == cycles_with_edge.end()) continue;
      for (int next : it->second) {
        if (static_cast<int>(found.size()) >= limit) return;
        if (next == ids.back()) continue;
        if (std::find(ids.begin(), ids.end(), next) != ids.end()) continue;
        const CycleRecord& d = cycles[next];
        if (d.contains_edge(e1)) continue;
        auto [shared_v, shared_e] = cycle_overlap(cur, d);
        if (shared_v != 2 || shared_e.size() != 1 || shared_e[0] != f) continue;
        if (d.vset.intersects(before_last)) continue;

        BitVec next_before = before_last;
        for (int v : cur.vertices) next_before.set(v);
        ids.push_back(next);
        step(ids, next_before, f);
        ids.pop_back();
      }
    }
  }

  void run() {
    for (int c0 = 0; c0 < cycles.size(); ++c0) {
      if (static_cast<int>(found.size()) >= limit) return;
      const CycleRecord& c = cycles[c0];
      if (convex_only && !c.convex) continue;
      if (!c.contains_edge(e1)) continue;
      std::vector<int> ids{c0};
      BitVec before(g.n);
      step(ids, before, e1);
    }
  }
};

}  // namespace

std::vector<Traverse> find_traverses(const Graph& g, const DistanceMatrix& dm,
                                     const ThetaPartition& part,
                                     const CycleSet& iso_cycles, Edge e1, Edge e2,
                                     bool convex_only, int limit) {
  int id1 = g.edge_id(e1.first, e1.second);
  int id2 = g.edge_id(e2.first, e2.second);
  if (id1 < 0 || id2 < 0) throw InvalidArgument("find_traverses: not an edge");
  if (id1 == id2) throw InvalidArgument("find_traverses: edges must be distinct");
  if (part.class_of[id1] != part.class_of[id2])
    throw InvalidArgument("find_traverses: edges not theta related");

  TraverseSearch s{g,    dm,   part, iso_cycles, convex_only,
                   limit, part.class_of[id1], 0, 0, 0, 0, e1, e2};
  s.v1 = e1.first;
  s.u1 = e1.second;
  // Orient the end edge: v2 lies on the v1 halfspace side.
  int a = e2.first, b = e2.second;
  bool a_on_v = dm(s.v1, a) < dm(s.u1, a);
  bool b_on_v = dm(s.v1, b) < dm(s.u1, b);
  if (a_on_v == b_on_v)
    throw InvalidArgument("find_traverses: end edge does not cross the cut");
  s.v2 = a_on_v ? a : b;
  s.u2 = a_on_v ? b : a;

  for (int ci = 0; ci < iso_cycles.size(); ++ci) {
    if (convex_only && !iso_cycles[ci].convex) continue;
    const CycleRecord& c = iso_cycles[ci];
    for (int i = 0; i < c.length(); ++i) {
      Edge f = c.edge_at(i);
      int id = g.edge_id(f.first, f.second);
      if (id >= 0 && part.class_of[id] == s.cls)
        s.cycles_with_edge[f].push_back(ci);
    }
  }
  s.run();
  return std::move(s.found);
}

namespace {

// Does the cycle contain seq as a contiguous arc (either direction)?
bool cycle_has_arc(const CycleRecord& c, const std::vector<int>& p, int i, int j) {
  int L = c.length();
  int pos = -1;
  for (int k = 0; k < L; ++k)
    if (c.vertices[k] == p[i]) pos = k;
  if (pos < 0) return false;
  bool fwd = true, bwd = true;
  for (int k = 0; k <= j - i; ++k) {
    if (c.vertices[(pos + k) % L] != p[i + k]) fwd = false;
    if (c.vertices[(pos - k + L) % L] != p[i + k]) bwd = false;
  }
  return fwd || bwd;
}

}  // namespace

std::optional<PasteCycle> paste_cycle_witness(const Graph& g,
                                              const DistanceMatrix& dm,
                                              const CycleSet& convex_cycles,
                                              const std::vector<int>& p) {
  if (!is_geodesic_path(g, dm, p))
    throw InvalidArgument("paste_cycle_witness: p is not a geodesic");
  int m = static_cast<int>(p.size()) - 1;
  if (static_cast<int>(interval(g, dm, p.front(), p.back()).size()) ==
      static_cast<int>(p.size()))
    return std::nullopt;  // unique geodesic

  BitVec on_p(g.n);
  for (int v : p) on_p.set(v);
  for (int i = 0; i + 2 <= m; ++i)
    for (int j = i + 2; j <= m; ++j)
      for (int ci = 0; ci < convex_cycles.size(); ++ci) {
        const CycleRecord& c = convex_cycles[ci];
        if (c.length() != 2 * (j - i)) continue;
        if (!cycle_has_arc(c, p, i, j)) continue;
        bool detour_clear = true;
        for (int v : c.vertices)
          if (on_p.test(v)) {
            bool in_arc = false;
            for (int k = i; k <= j; ++k)
              if (p[k] == v) in_arc = true;
            if (!in_arc) {
              detour_clear = false;
              break;
            }
          }
        if (detour_clear) return PasteCycle{c, i, j};
      }
  return std::nullopt;
}

namespace {

struct TileSearch {
  const Graph& g;
  const DistanceMatrix& dm;
  const ThetaPartition& part;
  const CycleSet& convex;
  int cls;
  const std::vector<int>& p;
  Edge e1, e2;
  int v0, u0, vm, um;
  std::optional<Traverse> result;

  // Walk the cycle from vertex a away from b, stopping at the next class
  // edge. Returns the arc (starting at a, ending at the stop edge's near
  // endpoint) and the stop edge; nullopt when no second class edge exists.
  std::optional<std::pair<std::vector<int>, Edge>> walk_arc(const CycleRecord& c,
                                                            int a, int b) {
    int L = c.length();
    int pos = -1;
    for (int k = 0; k < L; ++k)
      if (c.vertices[k] == a) pos = k;
    if (pos < 0) return std::nullopt;
    int dir;
    if (c.vertices[(pos + 1) % L] == b)
      dir = -1;
    else if (c.vertices[(pos - 1 + L) % L] == b)
      dir = 1;
    else
      return std::nullopt;
    std::vector<int> arc{a};
    int cur = pos;
    for (int steps = 0; steps < L - 1; ++steps) {
      int nxt = (cur + dir + L) % L;
      Edge e = c.vertices[cur] < c.vertices[nxt]
                   ? Edge{c.vertices[cur], c.vertices[nxt]}
                   : Edge{c.vertices[nxt], c.vertices[cur]};
      int id = g.edge_id(e.first, e.second);
      if (id >= 0 && part.class_of[id] == cls) {
        if (arc.size() < 2) return std::nullopt;  // degenerate arc
        return std::make_pair(arc, e);
      }
      arc.push_back(c.vertices[nxt]);
      cur = nxt;
    }
    return std::nullopt;
  }

  bool tile(int pos, Edge f, std::vector<int>& ids) {
    int m = static_cast<int>(p.size()) - 1;
    for (int ci = 0; ci < convex.size(); ++ci) {
      const CycleRecord& c = convex[ci];
      if (!c.contains_edge(f)) continue;
      if (std::find(ids.begin(), ids.end(), ci) != ids.end()) continue;
      if (pos > 0 && c.contains_edge(e1)) continue;
      int other = f.first == p[pos] ? f.second : f.first;
      auto arc = walk_arc(c, p[pos], other);
      if (!arc) continue;
      auto& [verts, exit] = *arc;
      int len = static_cast<int>(verts.size()) - 1;
      if (pos + len > m) continue;
      bool match = true;
      for (int k = 0; k <= len; ++k)
        if (verts[k] != p[pos + k]) {
          match = false;
          break;
        }
      if (!match) continue;

      bool is_end = exit == e2;
      if (is_end != (pos + len == m)) continue;
      if (!is_end && c.contains_edge(e2)) continue;

      ids.push_back(ci);
      if (is_end) {
        Traverse t;
        for (int id : ids) t.cycles.push_back(convex[id]);
        t.v1 = v0;
        t.u1 = u0;
        t.v2 = vm;
        t.u2 = um;
        BitVec uni = union_vertices(g, t.cycles);
        t.u_side = p;
        t.v_side = path_in_subset(g, uni, v0, vm);
        t.length = dm(v0, vm);
        t.convex = true;
        if (validate_traverse(g, dm, part, t).ok) {
          result = std::move(t);
          return true;
        }
      } else if (tile(pos + len, exit, ids)) {
        return true;
      }
      ids.pop_back();
    }
    return false;
  }
};

}  // namespace

TwoPossibilities two_possibilities(const Graph& g, const DistanceMatrix& dm,
                                   const ThetaPartition& part,
                                   const CycleSet& iso_cycles, Edge e1, Edge e2,
                                   const std::vector<int>& p) {
  if (!is_geodesic_path(g, dm, p))
    throw InvalidArgument("two_possibilities: p is not a geodesic");
  int id1 = g.edge_id(e1.first, e1.second);
  int id2 = g.edge_id(e2.first, e2.second);
  if (id1 < 0 || id2 < 0) throw InvalidArgument("two_possibilities: not an edge");
  if (id1 == id2) throw InvalidArgument("two_possibilities: edges must be distinct");
  if (part.class_of[id1] != part.class_of[id2])
    throw InvalidArgument("two_possibilities: edges not theta related");

  int u0 = p.front(), um = p.back();
  if (e1.first != u0 && e1.second != u0)
    throw InvalidArgument("two_possibilities: p does not start at the first edge");
  if (e2.first != um && e2.second != um)
    throw InvalidArgument("two_possibilities: p does not end at the second edge");
  int v0 = e1.first == u0 ? e1.second : e1.first;
  int vm = e2.first == um ? e2.second : e2.first;
  if (!(dm(u0, um) < dm(v0, um)) || !(dm(v0, vm) < dm(u0, vm)))
    throw InvalidArgument("two_possibilities: endpoints not on matching sides");

  CycleSet convex = convex_subset(iso_cycles);
  TileSearch ts{g,  dm, part, convex, part.class_of[id1], p, e1, e2,
                v0, u0, vm,   um,     std::nullopt};
  std::vector<int> ids;
  TwoPossibilities res;
  if (ts.tile(0, e1, ids)) {
    res.kind = TwoPossibilities::Kind::traverse_side;
    res.traverse = std::move(ts.result);
    return res;
  }
  if (auto w = paste_cycle_witness(g, dm, convex, p)) {
    res.kind = TwoPossibilities::Kind::cycle;
    res.paste = std::move(w);
    return res;
  }
  res.kind = TwoPossibilities::Kind::violation;
  res.detail = "neither a traverse side nor a paste cycle";
  return res;
}

}  // namespace pcube
