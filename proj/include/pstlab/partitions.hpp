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

#include <Eigen/Dense>

#include "pstlab/cospectrality.hpp"
#include "pstlab/exact.hpp"
#include "pstlab/spectral.hpp"

namespace pstlab {

struct Partition {
  std::vector<std::vector<Vertex>> classes;
  std::optional<Vertex> root;  // set for distance partitions

  /// Class index of every vertex; throws if the classes do not partition 0..n-1.
  std::vector<int> class_of(int n) const;
};

template <class T>
struct EquitableResult {
  struct Witness {
    Vertex vertex = 0;
    std::size_t target_class = 0;
    T expected{};
    T actual{};
  };

  bool equitable = false;
  std::vector<std::vector<T>> parameters;  // [own class][target class], only when equitable
  std::optional<Witness> witness;
};

struct PerronWeights {
  Eigen::VectorXd nu;  // positive, unit norm
};

Partition distance_partition(const SpectralGraph& sg, Vertex u);
/// Distance partition from plain BFS data; no spectral requirements.
Partition distance_partition(const DistanceInfo& dist, Vertex u);

EquitableResult<int> is_equitable(const Graph& g, const Partition& part);

PerronWeights perron_weights(const SpectralGraph& sg);

/// Equitability of D^{-1} A D with D = diag(nu): the sums of nu_w / nu_v over
/// neighbours w of v in each class depend only on the class of v.
EquitableResult<double> is_pseudo_equitable(const Graph& g, const Partition& part, const PerronWeights& w,
                                            double tol);

/// nu_w / nu_u on the vertices at distance ecc(u) from u, zero elsewhere.
/// For regular graphs this is the 01 indicator of the outermost class.
Eigen::VectorXd weighted_far_indicator(const SpectralGraph& sg, Vertex u);

struct AntipodalEvidence {
  bool definitional = false;
  bool spectral = false;
  std::string definitional_failure;  // first failed clause, empty on success
  std::optional<SignPattern> sign_pattern;

  bool agree() const { return definitional == spectral; }
  bool holds() const { return definitional && spectral; }
};

/// Two independent tests: the partition-based definition, and the spectral
/// one (u extremal, d(u,v) = ecc(u), E_r e_v = (-1)^r E_r e_u on the support).
AntipodalEvidence are_antipodal(const SpectralGraph& sg, Vertex u, Vertex v);

struct IdentityEvaluation {
  std::optional<Rational> exact_lhs;
  std::optional<Rational> exact_rhs;
  double lhs = 0.0;
  double rhs = 0.0;
  bool equal = false;
};

/// n prod_{s != 0} 1/(theta_0 - theta_s) against
/// sum_r (-1)^r prod_{s != r} 1/(theta_r - theta_s). Requires a regular graph
/// with diameter + 1 distinct eigenvalues.
IdentityEvaluation antipodal_spectral_identity(const SpectralGraph& sg);

/// Graph-level spectral extremality: distinct eigenvalue count = diameter + 1.
bool is_spectrally_extremal_graph(const SpectralGraph& sg);

struct DistanceRegularity {
  bool distance_regular = false;
  std::string reason;                          // why not, when false
  std::vector<std::vector<int>> parameters;   // common distance-partition parameters
  std::vector<int> b;                          // intersection array {b_0..b_{d-1}; c_1..c_d}
  std::vector<int> c;
};

DistanceRegularity is_distance_regular(const Graph& g);
/// Requires is_distance_regular(g).
bool is_antipodal_drg(const Graph& g);

}  // namespace pstlab
