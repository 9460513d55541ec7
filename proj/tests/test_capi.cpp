#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "pcube.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { pcube_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

}  // namespace

TEST_CASE("graph lifecycle through the C interface") {
  pcube_graph* g = nullptr;
  REQUIRE(pcube_graph_from_graph6("EhEG", &g) == PCUBE_OK);
  CHECK(pcube_graph_order(g) == 6);
  CHECK(pcube_graph_size(g) == 6);

  Str g6;
  REQUIRE(pcube_graph_to_graph6(g, &g6.p) == PCUBE_OK);
  CHECK(g6.str() == "EhEG");

  Str dot;
  REQUIRE(pcube_graph_to_dot(g, &dot.p) == PCUBE_OK);
  CHECK(dot.str().find("graph g {") == 0);

  int32_t verdict = 0;
  REQUIRE(pcube_is_partial_cube(g, &verdict) == PCUBE_OK);
  CHECK(verdict == 1);
  pcube_graph_free(g);
}

TEST_CASE("parse errors surface as status codes") {
  pcube_graph* g = nullptr;
  CHECK(pcube_graph_from_graph6("not a graph", &g) == PCUBE_ERR_PARSE);
  CHECK(std::strlen(pcube_last_error()) > 0);
  CHECK(pcube_graph_from_graph6(nullptr, &g) == PCUBE_ERR_INVALID);
  CHECK(std::string(pcube_status_name(PCUBE_ERR_PARSE)) == "parse error");
}

TEST_CASE("generation") {
  pcube_graph* g = nullptr;
  int32_t p3[] = {3};
  REQUIRE(pcube_graph_generate("cycle", p3, 1, &g) == PCUBE_OK);
  Str g6;
  REQUIRE(pcube_graph_to_graph6(g, &g6.p) == PCUBE_OK);
  CHECK(g6.str() == "EhEG");
  pcube_graph_free(g);

  int32_t pm[] = {1, 2};
  REQUIRE(pcube_graph_generate("product", pm, 2, &g) == PCUBE_OK);
  CHECK(pcube_graph_order(g) == 8);
  CHECK(pcube_graph_size(g) == 12);
  pcube_graph_free(g);

  REQUIRE(pcube_graph_generate("x-graph", nullptr, 0, &g) == PCUBE_OK);
  CHECK(pcube_graph_order(g) == 10);
  pcube_graph_free(g);

  CHECK(pcube_graph_generate("nonsense", nullptr, 0, &g) == PCUBE_ERR_INVALID);
  int32_t bad[] = {99};
  CHECK(pcube_graph_generate("hypercube", bad, 1, &g) == PCUBE_ERR_LIMIT);
}

TEST_CASE("analyze json") {
  pcube_graph* g = nullptr;
  REQUIRE(pcube_graph_from_graph6("EhEG", &g) == PCUBE_OK);
  Str json;
  REQUIRE(pcube_analyze_json(g, &json.p) == PCUBE_OK);
  auto j = nlohmann::json::parse(json.str());
  CHECK(j["schema_version"] == 1);
  CHECK(j["partial_cube"]["verdict"] == true);
  CHECK(j["theta"]["class_count"] == 3);
  CHECK(j["euler"]["i"] == 3);
  CHECK(j["euler"]["ce"] == 1);
  CHECK(j["euler"]["value"] == 2);
  CHECK(j["euler"]["tree_zone"] == true);
  CHECK(j["cycles"].size() == 1);
  pcube_graph_free(g);

  // A non partial cube still analyzes.
  REQUIRE(pcube_graph_from_graph6("D]o", &g) == PCUBE_OK);
  Str j2;
  REQUIRE(pcube_analyze_json(g, &j2.p) == PCUBE_OK);
  auto parsed = nlohmann::json::parse(j2.str());
  CHECK(parsed["partial_cube"]["verdict"] == false);
  CHECK(parsed["theta"].is_null());
  pcube_graph_free(g);
}

TEST_CASE("zone dot") {
  pcube_graph* g = nullptr;
  REQUIRE(pcube_graph_from_graph6("EhEG", &g) == PCUBE_OK);
  Str dot;
  REQUIRE(pcube_zone_dot(g, 0, &dot.p) == PCUBE_OK);
  CHECK(dot.str().find("graph zone_0") == 0);
  Str bad;
  CHECK(pcube_zone_dot(g, 12, &bad.p) == PCUBE_ERR_INVALID);
  pcube_graph_free(g);
}

TEST_CASE("verify json") {
  pcube_graph* g = nullptr;
  int32_t t2[] = {2};
  REQUIRE(pcube_graph_generate("middle-levels", t2, 1, &g) == PCUBE_OK);
  Str json;
  int32_t violations = -1;
  REQUIRE(pcube_verify_json(g, &json.p, &violations) == PCUBE_OK);
  CHECK(violations == 0);
  auto j = nlohmann::json::parse(json.str());
  CHECK(j["partial_cube"]["verdict"] == true);
  CHECK(j["invariants"]["girth"] == 6);
  CHECK(j["row"]["has_x"] == true);
  pcube_graph_free(g);
}

TEST_CASE("census over lines and determinism across workers") {
  const char* text = "EhEG\nD]o\nA_\n";
  Str j1, c1;
  int32_t v1 = -1, pe1 = -1;
  REQUIRE(pcube_census_lines(text, 1, 1, &j1.p, &c1.p, &v1, &pe1) == PCUBE_OK);
  CHECK(v1 == 0);
  CHECK(pe1 == 0);
  auto j = nlohmann::json::parse(j1.str());
  CHECK(j["counts"]["scanned"] == 3);
  CHECK(j["counts"]["partial_cubes"] == 2);

  Str j2;
  int32_t v2 = -1;
  REQUIRE(pcube_census_lines(text, 1, 4, &j2.p, nullptr, &v2, nullptr) ==
          PCUBE_OK);
  CHECK(j1.str() == j2.str());

  Str j3;
  int32_t pe3 = -1;
  REQUIRE(pcube_census_lines("EhEG\n?!bad\n", 0, 1, &j3.p, nullptr, nullptr,
                             &pe3) == PCUBE_OK);
  CHECK(pe3 == 1);

  Str jq;
  int32_t vq = -1;
  REQUIRE(pcube_census_qd(2, 4, 0, 1, &jq.p, nullptr, &vq) == PCUBE_OK);
  CHECK(vq == 0);
  auto q = nlohmann::json::parse(jq.str());
  CHECK(q["counts"]["partial_cubes"] == 4);
}
