#include "pcube/zones.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pcube/errors.hpp"

namespace pcube {

ZoneGraph zone_graph(const Graph& g, const DistanceMatrix& dm,
                     const ThetaPartition& part, const CycleSet& convex_cycles,
                     int k) {
  (void)dm;
  if (k < 0 || k >= part.count())
    throw InvalidArgument("zone_graph: class index out of range");
  ZoneGraph z;
  z.class_index = k;
  std::map<int, int> node_of;  // edge id -> node index
  for (int e : part.classes[k]) {
    node_of[e] = static_cast<int>(z.nodes.size());
    z.nodes.push_back(g.edges[e]);
  }

  std::map<std::pair<int, int>, std::vector<int>> links;
  for (int ci = 0; ci < convex_cycles.size(); ++ci) {
    const CycleRecord& c = convex_cycles[ci];
    std::vector<int> on_cycle;
    for (int i = 0; i < c.length(); ++i) {
      Edge e = c.edge_at(i);
      int id = g.edge_id(e.first, e.second);
      if (id >= 0 && part.class_of[id] == k) on_cycle.push_back(node_of[id]);
    }
    std::sort(on_cycle.begin(), on_cycle.end());
    for (size_t i = 0; i + 1 < on_cycle.size(); ++i)
      for (size_t j = i + 1; j < on_cycle.size(); ++j)
        links[{on_cycle[i], on_cycle[j]}].push_back(ci);
  }
  for (auto& [ab, wit] : links)
    z.links.push_back(ZoneLink{ab.first, ab.second, std::move(wit)});
  return z;
}

namespace {

bool zone_connected(const ZoneGraph& z) {
  int n = static_cast<int>(z.nodes.size());
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(n);
  for (const auto& l : z.links) {
    adj[l.a].push_back(l.b);
    adj[l.b].push_back(l.a);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        stack.push_back(w);
      }
  }
  return cnt == n;
}

}  // namespace

TreeZoneResult is_tree_zone(const Graph& g, const DistanceMatrix& dm,
                            const ThetaPartition& part,
                            const CycleSet& convex_cycles) {
  TreeZoneResult res;
  for (int k = 0; k < part.count(); ++k) {
    ZoneGraph z = zone_graph(g, dm, part, convex_cycles, k);
    bool connected = zone_connected(z);
    // A connected zone is a tree exactly when links == nodes - 1.
    bool tree = connected && z.links.size() + 1 == z.nodes.size();
    if (!tree) {
      res.tree_zone = false;
      res.bad_class = k;
      res.reason = connected ? "cyclic" : "disconnected";
      return res;
    }
  }
  return res;
}

long convex_excess(const CycleSet& convex_cycles) {
  long ce = 0;
  for (const auto& c : convex_cycles.cycles) {
    if (c.length() % 2 != 0)
      throw InvalidArgument("convex_excess: odd cycle length");
    ce += (c.length() - 4) / 2;
  }
  return ce;
}

EulerReport euler_report(const Graph& g, const DistanceMatrix& dm,
                         const ThetaPartition& part,
                         const CycleSet& convex_cycles) {
  EulerReport r;
  r.n = g.n;
  r.m = g.m();
  r.i = part.count();
  r.ce = convex_excess(convex_cycles);
  r.value = 2L * r.n - r.m - r.i - r.ce;

  TreeZoneResult tz = is_tree_zone(g, dm, part, convex_cycles);
  r.tree_zone = tz.tree_zone;
  if (!tz.tree_zone && tz.reason == "disconnected") {
    std::ostringstream os;
    os << "zone graph of class " << tz.bad_class << " is disconnected";
    r.violations.push_back(os.str());
  }
  if (r.value > 2) r.violations.push_back("euler value exceeds 2");
  if ((r.value == 2) != r.tree_zone)
    r.violations.push_back("euler equality does not match tree-zone");
  return r;
}

std::string zone_to_dot(const ZoneGraph& z) {
  std::ostringstream os;
  os << "graph zone_" << z.class_index << " {\n";
  auto name = [](Edge e) {
    return "\"" + std::to_string(e.first) + "-" + std::to_string(e.second) + "\"";
  };
  for (const auto& e : z.nodes) os << "  " << name(e) << ";\n";
  for (const auto& l : z.links)
    os << "  " << name(z.nodes[l.a]) << " -- " << name(z.nodes[l.b]) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace pcube
