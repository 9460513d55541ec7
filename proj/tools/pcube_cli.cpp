// Command line front end. Talks to the library exclusively through the C
// interface in pcube.h. Exit codes: 0 clean, 1 violations found, 2 bad
// input or usage.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcube.h"

namespace {

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { pcube_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

std::string read_stdin_line() {
  std::string line;
  if (!std::getline(std::cin, line)) return {};
  return line;
}

std::string read_all(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// The analyze and verify subcommands take a graph6 string or '-' for one
// line from standard input.
int load_graph(const std::string& arg, pcube_graph** out) {
  std::string line = arg == "-" ? read_stdin_line() : arg;
  pcube_status st = pcube_graph_from_graph6(line.c_str(), out);
  if (st != PCUBE_OK) {
    std::cerr << "error: " << pcube_status_name(st) << ": " << pcube_last_error()
              << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial cube structure toolkit"};
  app.require_subcommand(1);

  // analyze
  std::string analyze_input;
  std::string analyze_dot_dir;
  auto* analyze = app.add_subcommand(
      "analyze", "full structure report for one graph (JSON to stdout)");
  analyze->add_option("graph6", analyze_input, "graph6 string or '-' for stdin")
      ->required();
  analyze->add_option("--dot", analyze_dot_dir,
                      "directory for DOT exports of the graph and its zones");

  // generate
  std::string family;
  std::vector<int32_t> params;
  auto* generate = app.add_subcommand(
      "generate", "emit a named graph as graph6 on stdout");
  generate
      ->add_option("family", family,
                   "hypercube | cycle | middle-levels | product | x-graph")
      ->required();
  generate->add_option("params", params, "family parameters");

  // census
  std::string source = "-";
  int dim = 3;
  int max_n = 8;
  int workers = 1;
  bool per_graph = false;
  std::string csv_path;
  auto* census = app.add_subcommand(
      "census", "filter partial cubes and verify the structural law suite");
  census->add_option("--source", source,
                     "graph6 file, '-' for stdin, or 'qd' for the built-in "
                     "d-cube enumeration");
  census->add_option("--dim", dim, "cube dimension for --source qd");
  census->add_option("--max-n", max_n, "vertex bound for --source qd");
  census->add_option("--workers", workers, "worker thread count");
  census->add_flag("--per-graph", per_graph, "include per-graph rows in JSON");
  census->add_option("--csv", csv_path, "write the per-graph table as CSV");

  // verify
  std::string verify_input;
  auto* verify = app.add_subcommand(
      "verify", "run the whole property suite on one graph (JSON to stdout)");
  verify->add_option("graph6", verify_input, "graph6 string or '-' for stdin")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (analyze->parsed()) {
    pcube_graph* g = nullptr;
    if (int rc = load_graph(analyze_input, &g)) return rc;
    OwnedString json;
    pcube_status st = pcube_analyze_json(g, &json.p);
    if (st != PCUBE_OK) {
      std::cerr << "error: " << pcube_last_error() << "\n";
      pcube_graph_free(g);
      return 2;
    }
    std::cout << json.str();
    if (!analyze_dot_dir.empty()) {
      OwnedString dot;
      if (pcube_graph_to_dot(g, &dot.p) == PCUBE_OK) {
        std::ofstream(analyze_dot_dir + "/graph.dot") << dot.str();
      }
      int32_t verdict = 0;
      if (pcube_is_partial_cube(g, &verdict) == PCUBE_OK && verdict) {
        for (int32_t k = 0;; ++k) {
          OwnedString zdot;
          if (pcube_zone_dot(g, k, &zdot.p) != PCUBE_OK) break;
          std::ofstream(analyze_dot_dir + "/zone_" + std::to_string(k) + ".dot")
              << zdot.str();
        }
      }
    }
    pcube_graph_free(g);
    return 0;
  }

  if (generate->parsed()) {
    pcube_graph* g = nullptr;
    pcube_status st = pcube_graph_generate(family.c_str(), params.data(),
                                           params.size(), &g);
    if (st != PCUBE_OK) {
      std::cerr << "error: " << pcube_status_name(st) << ": "
                << pcube_last_error() << "\n";
      return 2;
    }
    OwnedString g6;
    st = pcube_graph_to_graph6(g, &g6.p);
    pcube_graph_free(g);
    if (st != PCUBE_OK) {
      std::cerr << "error: " << pcube_last_error() << "\n";
      return 2;
    }
    std::cout << g6.str() << "\n";
    return 0;
  }

  if (census->parsed()) {
    OwnedString json, csv;
    int32_t violations = 0;
    int32_t parse_errors = 0;
    pcube_status st;
    char** csv_slot = csv_path.empty() ? nullptr : &csv.p;
    if (source == "qd") {
      st = pcube_census_qd(dim, max_n, per_graph ? 1 : 0, workers, &json.p,
                           csv_slot, &violations);
    } else {
      std::string text;
      if (source == "-") {
        text = read_all(std::cin);
      } else {
        std::ifstream f(source);
        if (!f) {
          std::cerr << "error: cannot open " << source << "\n";
          return 2;
        }
        text = read_all(f);
      }
      st = pcube_census_lines(text.c_str(), per_graph ? 1 : 0, workers, &json.p,
                              csv_slot, &violations, &parse_errors);
    }
    if (st != PCUBE_OK) {
      std::cerr << "error: " << pcube_status_name(st) << ": "
                << pcube_last_error() << "\n";
      return 2;
    }
    std::cout << json.str();
    if (!csv_path.empty()) {
      std::ofstream f(csv_path);
      if (!f) {
        std::cerr << "error: cannot write " << csv_path << "\n";
        return 2;
      }
      f << csv.str();
    }
    if (parse_errors > 0) return 2;
    return violations > 0 ? 1 : 0;
  }

  if (verify->parsed()) {
    pcube_graph* g = nullptr;
    if (int rc = load_graph(verify_input, &g)) return rc;
    OwnedString json;
    int32_t violations = 0;
    pcube_status st = pcube_verify_json(g, &json.p, &violations);
    pcube_graph_free(g);
    if (st != PCUBE_OK) {
      std::cerr << "error: " << pcube_last_error() << "\n";
      return 2;
    }
    std::cout << json.str();
    return violations > 0 ? 1 : 0;
  }

  return 2;
}
