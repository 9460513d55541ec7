#pragma once

#include <string>

#include "pcube/census.hpp"
#include "pcube/graph.hpp"

namespace pcube {

// JSON report texts consumed by the command line front end. All output is
// deterministic for a fixed input: key order is fixed and no timing or
// host information is included.

// Full single-graph report: invariants, classes, coordinates, cycles,
// zones, euler data and obstruction search.
std::string analyze_json(const Graph& g);

struct VerifyOutcome {
  std::string json;
  long violations = 0;
};

// Single-graph run of the whole property suite. A graph that is not a
// partial cube yields a report with the recognition verdict and vacuous
// checks rather than an error.
VerifyOutcome verify_json(const Graph& g);

std::string census_report_json(const CensusReport& report);
std::string census_report_csv(const CensusReport& report);

}  // namespace pcube
