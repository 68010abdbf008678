// Copyright 2026 The pstlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pstlab/errors.hpp"
#include "pstlab/pst.hpp"
#include "pstlab/report.hpp"
#include "pstlab/walk.hpp"

namespace {

using namespace pstlab;

enum Exit { kOk = 0, kNegative = 1, kInputError = 2, kRefused = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

InputFormat parse_format(const std::string& name) {
  if (name == "g6") return InputFormat::Graph6;
  if (name == "edges") return InputFormat::EdgeList;
  return InputFormat::Auto;
}

Vertex vertex_named(const Graph& g, const std::string& name) {
  if (auto v = g.find_label(name)) return *v;
  throw InputError("unknown vertex label '" + name + "'");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("cannot write " + path);
}

struct Common {
  std::string input = "-";
  std::string format = "auto";
  std::string output;
  double tol = 1e-9;
};

Tolerances tolerances(const Common& c) {
  Tolerances t;
  t.cluster = c.tol;
  return t;
}

int run_analyze(const Common& c, bool table, const ClassifyOptions& options) {
  SpectralGraph sg(parse_graph(read_input(c.input), parse_format(c.format)), tolerances(c));
  const GraphReport rep = classify_graph(sg, options);
  emit(table ? render_table(rep) : report_json(rep).dump(2) + "\n", c.output);
  return rep.critical.empty() ? kOk : kRefused;
}

int run_pst(const Common& c, const std::string& u_name, const std::string& v_name) {
  const Graph g = parse_graph(read_input(c.input), parse_format(c.format));
  const Vertex u = vertex_named(g, u_name);
  const Vertex v = vertex_named(g, v_name);
  SpectralGraph sg(g, tolerances(c));
  const PairVerdict verdict = pst_decide_pair(sg, u, v);
  emit(verdict_json(verdict, sg.graph()).dump(2) + "\n", c.output);
  if (verdict.reason == NoPstReason::TrivialPair) return kInputError;
  return verdict.pst() ? kOk : kNegative;
}

int run_scan(const Common& c, bool json, bool strict, const ClassifyOptions& options) {
  std::istringstream lines(read_input(c.input));
  std::ostringstream out;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (!json) out << scan_header() << "\n";
  std::string line;
  std::size_t number = 0;
  int status = kOk;
  while (std::getline(lines, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const ScanRow row = scan_graph6_line(number, line, tolerances(c), options);
    if (json) {
      rows.push_back(scan_row_json(row));
    } else {
      out << render_scan_row(row) << "\n";
    }
    if (!row.error.empty()) std::cerr << "line " << number << ": " << row.error << "\n";
    if (strict && (!row.error.empty() || row.critical > 0)) {
      status = row.error.empty() ? kRefused : kInputError;
      break;
    }
  }
  emit(json ? rows.dump(2) + "\n" : out.str(), c.output);
  return status;
}

int run_walk(const Common& c, const std::string& u_name, const std::string& v_name, double t_max, int steps) {
  if (steps < 2) throw InputError("--steps must be at least 2");
  if (!(t_max > 0)) throw InputError("--t-max must be positive");
  const Graph g = parse_graph(read_input(c.input), parse_format(c.format));
  const Vertex u = vertex_named(g, u_name);
  const Vertex v = vertex_named(g, v_name);
  SpectralGraph sg(g, tolerances(c));
  std::ostringstream csv;
  write_csv(csv, fidelity_series(sg, u, v, t_max, steps));
  emit(csv.str(), c.output);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect state transfer and strong cospectrality analysis for small graphs"};
  app.set_version_flag("--version", PSTLAB_VERSION);
  app.require_subcommand(1);

  Common common;
  if (const char* env = std::getenv("PSTLAB_TOL")) {
    try {
      common.tol = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "error: PSTLAB_TOL is not a number: " << env << "\n";
      return kInputError;
    }
  }
  bool table = false;
  bool json = false;
  bool strict = false;
  ClassifyOptions options;
  std::string u_name, v_name;
  double t_max = 2 * 3.14159265358979323846;
  int steps = 201;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", common.tol, "eigenvalue clustering tolerance (default 1e-9, or PSTLAB_TOL)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", common.format, "input format")
        ->check(CLI::IsMember({"g6", "edges", "auto"}))
        ->capture_default_str();
    sub->add_option("-o,--output", common.output, "output file (default stdout)");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full classification report");
  analyze->add_option("input", common.input, "graph file, or - for stdin")->capture_default_str();
  add_common(analyze);
  auto* as_json = analyze->add_flag("--json", "JSON report (default)");
  analyze->add_flag("--table", table, "human-readable table")->excludes(as_json);
  analyze->add_flag("--verify-oracle", options.verify_oracle, "refutation scan for every verdict");
  analyze->add_option("--t-max", options.t_max, "refutation scan horizon")->check(CLI::PositiveNumber);

  CLI::App* pst = app.add_subcommand("pst", "decide perfect state transfer between two vertices");
  pst->add_option("input", common.input, "graph file, or - for stdin")->required();
  pst->add_option("u", u_name, "source vertex label")->required();
  pst->add_option("v", v_name, "target vertex label")->required();
  add_common(pst);

  CLI::App* scan = app.add_subcommand("scan", "one summary row per graph6 line");
  scan->add_option("census", common.input, "file of graph6 lines, or - for stdin")->required();
  add_common(scan);
  scan->add_flag("--json", json, "JSON rows instead of a table");
  scan->add_flag("--table", "tab-separated table (default)");
  scan->add_flag("--verify-oracle", options.verify_oracle, "refutation scan for every verdict");
  scan->add_flag("--strict", strict, "stop at the first malformed graph or failed cross-check");
  scan->add_option("--t-max", options.t_max, "refutation scan horizon")->check(CLI::PositiveNumber);

  CLI::App* walk = app.add_subcommand("walk", "fidelity time series as CSV");
  walk->add_option("input", common.input, "graph file, or - for stdin")->required();
  walk->add_option("u", u_name, "start vertex label")->required();
  walk->add_option("v", v_name, "target vertex label")->required();
  add_common(walk);
  walk->add_option("--t-max", t_max, "end of the time grid")->capture_default_str();
  walk->add_option("--steps", steps, "number of samples")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) return run_analyze(common, table, options);
    if (*pst) return run_pst(common, u_name, v_name);
    if (*scan) return run_scan(common, json, strict, options);
    if (*walk) return run_walk(common, u_name, v_name, t_max, steps);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "analysis refused: " << e.what() << "\n";
    return kRefused;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "analysis refused: " << e.what() << "\n";
    return kRefused;
  }
  return kOk;
}
