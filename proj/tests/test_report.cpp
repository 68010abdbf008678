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


#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fixtures.hpp"
#include "pstlab/census.hpp"
#include "pstlab/report.hpp"

using namespace pstlab;
namespace tg = pstlab::testing;
using std::numbers::pi;

TEST_CASE("cube report") {
  const SpectralGraph q3(tg::hypercube(3));
  const GraphReport rep = classify_graph(q3);
  CHECK(rep.critical.empty());
  CHECK(rep.spectrally_extremal);
  CHECK(rep.pst_pairs() == 4);
  CHECK(rep.antipodal_pairs() == 4);
  CHECK(rep.strongly_cospectral_pairs() == 4);
  CHECK(rep.distance_regularity.distance_regular);
  REQUIRE(rep.antipodal_drg.has_value());
  CHECK(*rep.antipodal_drg);
  CHECK(rep.pst_partition_hypotheses);
  REQUIRE(rep.graph_verdict.has_value());
  CHECK(rep.graph_verdict->pass);
  for (const auto& c : rep.certificates()) CHECK(c.tau == doctest::Approx(pi / 2));
}

TEST_CASE("Petersen report") {
  const GraphReport rep = classify_graph(SpectralGraph(tg::petersen()), {.verify_oracle = true});
  CHECK(rep.critical.empty());
  CHECK(rep.spectrally_extremal);
  CHECK(rep.distance_regularity.distance_regular);
  CHECK(rep.strongly_cospectral_pairs() == 0);
  CHECK(rep.pst_pairs() == 0);
  CHECK_FALSE(rep.pst_partition_hypotheses);
  REQUIRE(rep.identity.has_value());
  CHECK_FALSE(rep.identity->equal);
  std::size_t scanned = 0;
  for (const auto& pr : rep.pairs)
    if (pr.oracle) {
      ++scanned;
      CHECK(pr.oracle->best.fidelity < 1 - kRefuteFidelity);
    }
  CHECK(scanned == 30);
}

TEST_CASE("P4 report") {
  const GraphReport rep = classify_graph(SpectralGraph(tg::path(4)), {.verify_oracle = true});
  CHECK(rep.critical.empty());
  CHECK(rep.spectrum.kind == SpectrumKind::Floating);
  bool seen = false;
  for (const auto& pr : rep.pairs) {
    if (pr.u != 0 || pr.v != 3) continue;
    seen = true;
    CHECK(pr.strong.has_value());
    CHECK(pr.antipodal.holds());
    REQUIRE(pr.verdict.has_value());
    CHECK(pr.verdict->reason == NoPstReason::NoQuadraticForm);
    REQUIRE(pr.oracle.has_value());
    CHECK_FALSE(pr.oracle->hit.has_value());
  }
  CHECK(seen);
  CHECK(rep.pst_pairs() == 0);
}

TEST_CASE("JSON report layout") {
  const SpectralGraph p3(tg::path(3));
  const auto j = report_json(classify_graph(p3));
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"tool", "version", "tolerances", "graph", "spectrum", "decomposition_check",
                                         "regular_degree", "diameter", "spectrally_extremal", "vertices", "pairs",
                                         "certificates", "antipodal_identity", "graph_pst", "distance_regularity",
                                         "pst_partition_hypotheses", "summary", "critical", "notes"});
  CHECK(j["spectrum"]["kind"] == "quadratic");
  CHECK(j["spectrum"]["eigenvalues"][0]["delta"] == 2);
  REQUIRE(j["certificates"].size() == 1);
  const auto& cert = j["certificates"][0];
  std::vector<std::string> ckeys;
  for (const auto& item : cert.items()) ckeys.push_back(item.key());
  CHECK(ckeys == std::vector<std::string>{"u", "v", "alpha", "delta", "tau", "sigma", "fidelity"});
  CHECK(cert["tau"].get<double>() == doctest::Approx(pi / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(cert["sigma"] == nlohmann::json::array({1, -1, 1}));
  CHECK(j["regular_degree"].is_null());

  // determinism
  CHECK(report_json(classify_graph(p3)).dump() == j.dump());
  CHECK(report_json(classify_graph(SpectralGraph(tg::hypercube(3)))).dump() ==
        report_json(classify_graph(SpectralGraph(tg::hypercube(3)))).dump());
}

TEST_CASE("labels are carried into reports") {
  const SpectralGraph g(parse_edge_list("left mid\nmid right\n"));
  const auto j = report_json(classify_graph(g));
  CHECK(j["certificates"][0]["u"] == "left");
  CHECK(j["certificates"][0]["v"] == "right");
  const std::string table = render_table(classify_graph(g));
  CHECK(table.find("left") != std::string::npos);
  CHECK(table.find("sqrt(2)") != std::string::npos);
}

TEST_CASE("round15") {
  CHECK(round15(pi) == 3.14159265358979);
  CHECK(round15(0.0) == 0.0);
  CHECK(round15(-1.0 / 3) == -0.333333333333333);
}

TEST_CASE("scan rows") {
  const Tolerances tol;
  const ScanRow c4 = scan_graph6_line(1, "Cl", tol, {});
  CHECK(c4.error.empty());
  CHECK(c4.n == 4);
  CHECK(c4.kind == "exact-integer");
  CHECK(c4.pst_pairs == 2);
  CHECK(c4.distance_regular);
  CHECK(c4.identity == true);

  const ScanRow bad = scan_graph6_line(2, "not-a-graph", tol, {});
  CHECK_FALSE(bad.error.empty());
  CHECK(render_scan_row(bad).find("ERROR") != std::string::npos);
  CHECK(scan_row_json(bad).contains("error"));

  const ScanRow split = scan_graph6_line(3, "Cc", tol, {});  // two disjoint edges
  CHECK_FALSE(split.error.empty());

  CHECK(scan_header().rfind("line\tgraph6\tn", 0) == 0);
}

TEST_CASE("census: connected graphs on four vertices") {
  std::size_t with_pst = 0;
  for (const Graph& g : connected_graphs(4)) {
    const ScanRow row = scan_graph6_line(1, encode_graph6(g), Tolerances{}, {.verify_oracle = true});
    REQUIRE(row.error.empty());
    CHECK(row.critical == 0);
    if (encode_graph6(g) == "Cl") CHECK(row.pst_pairs == 2);
    if (encode_graph6(g) == "Ch") {
      CHECK(row.pst_pairs == 0);
      CHECK(row.antipodal_pairs >= 1);
    }
    if (row.pst_pairs > 0) ++with_pst;
  }
  CHECK(with_pst == 1);
}

TEST_CASE("census: no internal cross-check fails") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs(n)) {
      const GraphReport rep = classify_graph(SpectralGraph(g), {.verify_oracle = n <= 5});
      CHECK_MESSAGE(rep.critical.empty(), encode_graph6(g) << ": " << (rep.critical.empty() ? "" : rep.critical[0]));
    }
}
