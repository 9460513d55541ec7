#include "pcube/reports.hpp"

#include <json.hpp>

#include "pcube/cycles.hpp"
#include "pcube/generators.hpp"
#include "pcube/graph6.hpp"
#include "pcube/traverses.hpp"
#include "pcube/zones.hpp"

namespace pcube {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

ordered_json edge_json(Edge e) { return ordered_json::array({e.first, e.second}); }

ordered_json invariants_json(const Graph& g, const BasicInvariants& inv) {
  ordered_json j;
  j["n"] = g.n;
  j["m"] = g.m();
  j["connected"] = inv.connected;
  j["bipartite"] = inv.bipartite;
  if (inv.girth)
    j["girth"] = *inv.girth;
  else
    j["girth"] = nullptr;
  j["min_degree"] = inv.min_degree;
  j["max_degree"] = inv.max_degree;
  j["regular"] = inv.regular;
  return j;
}

ordered_json cycles_json(const CycleSet& iso) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : iso.cycles) {
    ordered_json j;
    j["vertices"] = c.vertices;
    j["length"] = c.length();
    j["isometric"] = c.isometric;
    j["convex"] = c.convex;
    arr.push_back(std::move(j));
  }
  return arr;
}

ordered_json x_embedding_json(const std::optional<std::array<int, 10>>& map) {
  if (!map) return nullptr;
  ordered_json j;
  const auto& names = x_graph_names();
  for (int i = 0; i < 10; ++i) j[names[i]] = (*map)[i];
  return j;
}

}  // namespace

std::string analyze_json(const Graph& g) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["graph6"] = write_graph6(g);
  BasicInvariants inv = basic_invariants(g);
  j["invariants"] = invariants_json(g, inv);

  RecognitionDetail rec = recognize(g);
  ordered_json pc;
  pc["verdict"] = rec.rec.verdict;
  pc["witness"] = rec.rec.verdict ? ordered_json(nullptr) : ordered_json(rec.rec.witness);
  j["partial_cube"] = std::move(pc);

  if (!rec.rec.verdict) {
    j["theta"] = nullptr;
    j["coordinatization"] = nullptr;
    j["cycles"] = nullptr;
    j["intertwinings"] = nullptr;
    j["zones"] = nullptr;
    j["euler"] = nullptr;
    j["x_embedding"] = nullptr;
    return j.dump(2) + "\n";
  }

  const DistanceMatrix& dm = rec.dm;
  const ThetaPartition& part = *rec.partition;

  ordered_json theta;
  theta["class_count"] = part.count();
  ordered_json classes = ordered_json::array();
  for (int k = 0; k < part.count(); ++k) {
    ordered_json cls = ordered_json::array();
    for (int e : part.classes[k]) cls.push_back(edge_json(g.edges[e]));
    classes.push_back(std::move(cls));
  }
  theta["classes"] = std::move(classes);
  j["theta"] = std::move(theta);

  ordered_json coord;
  coord["width"] = rec.coord->width;
  coord["labels"] = rec.coord->labels;
  coord["isometric"] = rec.coord->isometric;
  j["coordinatization"] = std::move(coord);

  CycleSet iso = enumerate_isometric_cycles(g, dm);
  CycleSet convex = convex_subset(iso);
  j["cycles"] = cycles_json(iso);

  ordered_json inter = ordered_json::array();
  for (const auto& r : find_intertwinings(g, dm, iso)) {
    ordered_json ij;
    ij["c1"] = r.c1;
    ij["c2"] = r.c2;
    ij["shared_path"] = r.shared_path;
    ij["m"] = r.m;
    ij["n1"] = r.n1;
    ij["n2"] = r.n2;
    ij["residue"] = r.residue;
    inter.push_back(std::move(ij));
  }
  j["intertwinings"] = std::move(inter);

  ordered_json zones = ordered_json::array();
  for (int k = 0; k < part.count(); ++k) {
    ZoneGraph z = zone_graph(g, dm, part, convex, k);
    ordered_json zj;
    zj["class"] = k;
    ordered_json nodes = ordered_json::array();
    for (const auto& e : z.nodes) nodes.push_back(edge_json(e));
    zj["nodes"] = std::move(nodes);
    ordered_json links = ordered_json::array();
    for (const auto& l : z.links) {
      ordered_json lj;
      lj["a"] = edge_json(z.nodes[l.a]);
      lj["b"] = edge_json(z.nodes[l.b]);
      lj["witnesses"] = l.witnesses;
      links.push_back(std::move(lj));
    }
    zj["links"] = std::move(links);
    zj["tree"] = z.links.size() + 1 == z.nodes.size();
    zones.push_back(std::move(zj));
  }
  j["zones"] = std::move(zones);

  EulerReport euler = euler_report(g, dm, part, convex);
  ordered_json ej;
  ej["n"] = euler.n;
  ej["m"] = euler.m;
  ej["i"] = euler.i;
  ej["ce"] = euler.ce;
  ej["value"] = euler.value;
  ej["tree_zone"] = euler.tree_zone;
  ej["violations"] = euler.violations;
  j["euler"] = std::move(ej);

  j["x_embedding"] = x_embedding_json(find_isometric_X(g, dm));
  return j.dump(2) + "\n";
}

namespace {

ordered_json counts_json(const CensusCounts& c) {
  ordered_json j;
  j["scanned"] = c.scanned;
  j["parse_errors"] = c.parse_errors;
  j["bipartite"] = c.bipartite;
  j["partial_cubes"] = c.partial_cubes;
  j["girth_gt6"] = c.girth_gt6;
  j["girth_gt6_min_degree_ge3"] = c.girth_gt6_min_degree_ge3;
  j["regular_girth_gt6"] = c.regular_girth_gt6;
  return j;
}

ordered_json checks_json(const CensusReport& r) {
  ordered_json j;
  for (const auto& [name, st] : r.checks) {
    ordered_json cj;
    cj["checked"] = st.checked;
    cj["hypothesis_met"] = st.hypothesis_met;
    cj["passed"] = st.passed;
    cj["violations"] = st.violations;
    cj["budget_capped"] = st.budget_capped;
    j[name] = std::move(cj);
  }
  return j;
}

ordered_json violations_json(const CensusReport& r) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : r.violations) {
    ordered_json vj;
    vj["graph6"] = v.g6;
    vj["check"] = v.check;
    vj["detail"] = v.detail;
    arr.push_back(std::move(vj));
  }
  return arr;
}

ordered_json row_json(const PerGraphRow& row) {
  ordered_json rj;
  rj["graph6"] = row.g6;
  rj["n"] = row.n;
  rj["m"] = row.m;
  if (row.girth)
    rj["girth"] = *row.girth;
  else
    rj["girth"] = nullptr;
  rj["min_degree"] = row.min_degree;
  rj["i"] = row.i;
  rj["ce"] = row.ce;
  rj["euler_value"] = row.euler_value;
  rj["tree_zone"] = row.tree_zone;
  rj["has_x"] = row.has_x;
  return rj;
}

}  // namespace

std::string census_report_json(const CensusReport& r) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["source"] = r.source;
  j["complete"] = r.complete;
  j["counts"] = counts_json(r.counts);
  j["checks"] = checks_json(r);
  j["violations"] = violations_json(r);
  ordered_json perr = ordered_json::array();
  for (const auto& e : r.parse_errors) {
    ordered_json ej;
    ej["line"] = e.line;
    ej["message"] = e.message;
    perr.push_back(std::move(ej));
  }
  j["parse_errors"] = std::move(perr);
  if (r.per_graph_included) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.per_graph) rows.push_back(row_json(row));
    j["per_graph"] = std::move(rows);
  }
  return j.dump(2) + "\n";
}

std::string census_report_csv(const CensusReport& r) {
  std::string out =
      "graph6,n,m,girth,min_degree,i,ce,euler_value,tree_zone,has_x\n";
  for (const auto& row : r.per_graph) {
    out += row.g6 + ",";
    out += std::to_string(row.n) + ",";
    out += std::to_string(row.m) + ",";
    out += row.girth ? std::to_string(*row.girth) : std::string("none");
    out += ",";
    out += std::to_string(row.min_degree) + ",";
    out += std::to_string(row.i) + ",";
    out += std::to_string(row.ce) + ",";
    out += std::to_string(row.euler_value) + ",";
    out += row.tree_zone ? "true," : "false,";
    out += row.has_x ? "true\n" : "false\n";
  }
  return out;
}

VerifyOutcome verify_json(const Graph& g) {
  VerifyOutcome out;
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["graph6"] = write_graph6(g);
  BasicInvariants inv = basic_invariants(g);
  j["invariants"] = invariants_json(g, inv);
  RecognitionDetail rec = recognize(g);
  ordered_json pc;
  pc["verdict"] = rec.rec.verdict;
  pc["witness"] = rec.rec.verdict ? ordered_json(nullptr) : ordered_json(rec.rec.witness);
  j["partial_cube"] = std::move(pc);

  if (rec.rec.verdict) {
    std::vector<StreamItem> items;
    StreamItem item;
    item.g = g;
    item.g6 = write_graph6(g);
    item.dm = std::move(rec.dm);
    item.part = std::move(*rec.partition);
    item.coord = std::move(*rec.coord);
    items.push_back(std::move(item));
    CensusReport report = verify_laws(items, CensusBudget{}, 1, true);
    j["checks"] = checks_json(report);
    j["violations"] = violations_json(report);
    if (!report.per_graph.empty()) j["row"] = row_json(report.per_graph.front());
    out.violations = static_cast<long>(report.violations.size());
  } else {
    j["checks"] = nullptr;
    j["violations"] = ordered_json::array();
  }
  out.json = j.dump(2) + "\n";
  return out;
}

}  // namespace pcube
