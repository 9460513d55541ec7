#include "pcube.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "pcube/census.hpp"
#include "pcube/errors.hpp"
#include "pcube/generators.hpp"
#include "pcube/graph6.hpp"
#include "pcube/reports.hpp"
#include "pcube/zones.hpp"

struct pcube_graph {
  pcube::Graph g;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
pcube_status guard(Fn&& fn) {
  try {
    fn();
    return PCUBE_OK;
  } catch (const pcube::ParseError& e) {
    g_last_error = e.what();
    return PCUBE_ERR_PARSE;
  } catch (const pcube::InvalidArgument& e) {
    g_last_error = e.what();
    return PCUBE_ERR_INVALID;
  } catch (const pcube::SizeLimit& e) {
    g_last_error = e.what();
    return PCUBE_ERR_LIMIT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PCUBE_ERR_INTERNAL;
  }
}

std::vector<std::string> split_lines(const char* text) {
  std::vector<std::string> lines;
  std::istringstream in(text ? text : "");
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

extern "C" {

const char* pcube_status_name(pcube_status s) {
  switch (s) {
    case PCUBE_OK: return "ok";
    case PCUBE_ERR_PARSE: return "parse error";
    case PCUBE_ERR_INVALID: return "invalid argument";
    case PCUBE_ERR_LIMIT: return "size limit";
    case PCUBE_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* pcube_last_error(void) { return g_last_error.c_str(); }

void pcube_string_free(char* s) { std::free(s); }

pcube_status pcube_graph_from_graph6(const char* line, pcube_graph** out) {
  if (!line || !out) {
    g_last_error = "null argument";
    return PCUBE_ERR_INVALID;
  }
  return guard([&] { *out = new pcube_graph{pcube::parse_graph6(line)}; });
}

pcube_status pcube_graph_generate(const char* family, const int32_t* params,
                                  size_t n_params, pcube_graph** out) {
  if (!family || !out || (n_params > 0 && !params)) {
    g_last_error = "null argument";
    return PCUBE_ERR_INVALID;
  }
  return guard([&] {
    std::string f = family;
    auto want = [&](size_t k) {
      if (n_params != k)
        throw pcube::InvalidArgument("generate: wrong parameter count for " + f);
    };
    pcube::Graph g;
    if (f == "hypercube") {
      want(1);
      g = pcube::hypercube(params[0]);
    } else if (f == "cycle") {
      want(1);
      g = pcube::even_cycle(params[0]);
    } else if (f == "middle-levels") {
      want(1);
      g = pcube::middle_levels(params[0]);
    } else if (f == "product") {
      want(2);
      g = pcube::cartesian_product(pcube::hypercube(params[0]),
                                   pcube::even_cycle(params[1]));
    } else if (f == "x-graph") {
      want(0);
      g = pcube::x_graph();
    } else {
      throw pcube::InvalidArgument("generate: unknown family " + f);
    }
    *out = new pcube_graph{std::move(g)};
  });
}

void pcube_graph_free(pcube_graph* g) { delete g; }

int32_t pcube_graph_order(const pcube_graph* g) { return g ? g->g.n : -1; }

int32_t pcube_graph_size(const pcube_graph* g) { return g ? g->g.m() : -1; }

pcube_status pcube_graph_to_graph6(const pcube_graph* g, char** out) {
  if (!g || !out) {
    g_last_error = "null argument";
    return PCUBE_ERR_INVALID;
  }
  return guard([&] { *out = dup_string(pcube::write_graph6(g->g)); });
}

pcube_status pcube_graph_to_dot(const pcube_graph* g, char** out) {
  if (!g || !out) {
    g_last_error = "null argument";
    return PCUBE_ERR_INVALID;
  }
  return guard([&] { *out = dup_string(pcube::to_dot(g->g)); });
}

pcube_status pcube_is_partial_cube(const pcube_graph* g, int32_t* verdict) {
  if (!g || !verdict) {
    g_last_error = "null argument";
    return PCUBE_ERR_INVALID;
  }
  return guard([&] { *verdict = pcube::is_partial_cube(g->g).verdict ? 1 : 0; });
}

pcube_status pcube_analyze_json(const pcube_graph* g, char** json_out) {
  if (!g || !json_out) {
    g_last_error = "null argument";
    return PCUBE_ERR_INVALID;
  }
  return guard([&] { *json_out = dup_string(pcube::analyze_json(g->g)); });
}

pcube_status pcube_verify_json(const pcube_graph* g, char** json_out,
                               int32_t* violation_count) {
  if (!g || !json_out) {
    g_last_error = "null argument";
    return PCUBE_ERR_INVALID;
  }
  return guard([&] {
    pcube::VerifyOutcome out = pcube::verify_json(g->g);
    *json_out = dup_string(out.json);
    if (violation_count) *violation_count = static_cast<int32_t>(out.violations);
  });
}

pcube_status pcube_zone_dot(const pcube_graph* g, int32_t class_index,
                            char** dot_out) {
  if (!g || !dot_out) {
    g_last_error = "null argument";
    return PCUBE_ERR_INVALID;
  }
  return guard([&] {
    pcube::RecognitionDetail rec = pcube::recognize(g->g);
    if (!rec.rec.verdict)
      throw pcube::InvalidArgument("zone_dot: graph is not a partial cube");
    pcube::CycleSet convex = pcube::enumerate_convex_cycles(g->g, rec.dm);
    pcube::ZoneGraph z =
        pcube::zone_graph(g->g, rec.dm, *rec.partition, convex, class_index);
    *dot_out = dup_string(pcube::zone_to_dot(z));
  });
}

namespace {

pcube_status census_common(pcube::CensusReport&& report, int32_t per_graph,
                           char** json_out, char** csv_out,
                           int32_t* violation_count) {
  if (csv_out) *csv_out = dup_string(pcube::census_report_csv(report));
  report.per_graph_included = per_graph != 0;
  if (!report.per_graph_included) report.per_graph.clear();
  *json_out = dup_string(pcube::census_report_json(report));
  if (violation_count)
    *violation_count = static_cast<int32_t>(report.violations.size());
  return PCUBE_OK;
}

}  // namespace

pcube_status pcube_census_lines(const char* graph6_lines, int32_t per_graph,
                                int32_t workers, char** json_out, char** csv_out,
                                int32_t* violation_count,
                                int32_t* parse_error_count) {
  if (!graph6_lines || !json_out) {
    g_last_error = "null argument";
    return PCUBE_ERR_INVALID;
  }
  return guard([&] {
    pcube::CensusReport report = pcube::census_over_lines(
        split_lines(graph6_lines), pcube::CensusBudget{}, workers,
        per_graph != 0 || csv_out != nullptr);
    if (parse_error_count)
      *parse_error_count = static_cast<int32_t>(report.parse_errors.size());
    census_common(std::move(report), per_graph, json_out, csv_out,
                  violation_count);
  });
}

pcube_status pcube_census_qd(int32_t dim, int32_t max_n, int32_t per_graph,
                             int32_t workers, char** json_out, char** csv_out,
                             int32_t* violation_count) {
  if (!json_out) {
    g_last_error = "null argument";
    return PCUBE_ERR_INVALID;
  }
  return guard([&] {
    pcube::CensusReport report =
        pcube::census_over_qd(dim, max_n, pcube::CensusBudget{}, workers,
                              per_graph != 0 || csv_out != nullptr);
    census_common(std::move(report), per_graph, json_out, csv_out,
                  violation_count);
  });
}

}  // extern "C"
