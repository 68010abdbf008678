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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pstlab/cospectrality.hpp"
#include "pstlab/partitions.hpp"
#include "pstlab/pst.hpp"
#include "pstlab/spectral.hpp"
#include "pstlab/walk.hpp"

namespace pstlab {

struct ClassifyOptions {
  bool verify_oracle = false;  // run refutation scans for every NoPST verdict
  double t_max = kDefaultScanHorizon;
  int coarse_steps = 2000;
};

struct VertexReport {
  Vertex vertex = 0;
  int eccentricity = 0;
  EigenSupport support;
  bool extremal = false;
};

struct PairReport {
  Vertex u = 0;
  Vertex v = 0;
  int distance = 0;
  bool cospectral = false;
  std::optional<SignPattern> strong;
  AntipodalEvidence antipodal;
  std::optional<PairVerdict> verdict;  // when the pair (in some order) meets the PST hypotheses
  std::optional<OracleSearch> oracle;  // filled with verify_oracle
};

struct GraphReport {
  std::string graph6;
  std::vector<std::string> labels;
  std::size_t edge_count = 0;
  Tolerances tolerances;
  Spectrum spectrum;
  IntPolynomial char_poly;
  DecompositionCheck decomposition;
  std::optional<int> regular_degree;
  int diameter = 0;
  bool spectrally_extremal = false;
  std::vector<VertexReport> vertices;
  std::vector<PairReport> pairs;  // cospectral or PST-eligible pairs, u < v
  std::optional<IdentityEvaluation> identity;
  std::optional<GraphVerdict> graph_verdict;
  DistanceRegularity distance_regularity;
  std::optional<bool> antipodal_drg;
  bool pst_partition_hypotheses = false;  // regular, extremal, all ecc = d, PST pairs at distance d cover V
  std::vector<std::string> critical;      // internal cross-checks that failed
  std::vector<std::string> notes;

  std::size_t strongly_cospectral_pairs() const;
  std::size_t antipodal_pairs() const;
  std::size_t pst_pairs() const;
  std::vector<PstCertificate> certificates() const;
};

GraphReport classify_graph(const SpectralGraph& sg, const ClassifyOptions& options = {});

/// Rounds to 15 significant digits.
double round15(double x);

nlohmann::ordered_json certificate_json(const PstCertificate& cert, const Graph& g);
nlohmann::ordered_json verdict_json(const PairVerdict& verdict, const Graph& g);
nlohmann::ordered_json report_json(const GraphReport& report);
std::string render_table(const GraphReport& report);

struct ScanRow {
  std::size_t line = 0;
  std::string input;
  std::string error;  // non-empty marks an ERROR row
  int n = 0;
  std::string kind;
  bool extremal = false;
  std::size_t strong_pairs = 0;
  std::size_t antipodal_pairs = 0;
  std::size_t pst_pairs = 0;
  bool distance_regular = false;
  std::optional<bool> identity;
  std::size_t critical = 0;
};

ScanRow scan_graph6_line(std::size_t line, const std::string& text, const Tolerances& tol,
                         const ClassifyOptions& options);
std::string scan_header();
std::string render_scan_row(const ScanRow& row);
nlohmann::ordered_json scan_row_json(const ScanRow& row);

}  // namespace pstlab
