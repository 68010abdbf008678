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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pstlab/exact.hpp"
#include "pstlab/graph.hpp"

namespace pstlab {

/// Numerical thresholds used throughout the analysis. Every one of them is
/// written into the JSON report.
struct Tolerances {
  double cluster = 1e-9;           // eigenvalues closer than this are one eigenvalue
  double snap = 1e-6;              // distance to an integer / quadratic value before exact verification
  double support = 1e-8;           // ||E_r e_u|| above this puts theta_r in the support of u
  double pseudo_equitable = 1e-7;  // weighted class sums compared within this
  double membership = 1e-6;        // residual above which a target is outside the walk module
};

enum class SpectrumKind { ExactInteger, Quadratic, Floating };

std::string to_string(SpectrumKind kind);

/// theta_r = (a + b_r sqrt(delta)) / 2 with delta square-free.
struct QuadraticForm {
  std::int64_t delta = 1;
  std::int64_t a = 0;
  std::vector<std::int64_t> b;

  double value(std::size_t r) const;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // distinct, strictly descending
  std::vector<int> multiplicities;
  SpectrumKind kind = SpectrumKind::Floating;
  std::vector<BigInt> integer_values;     // ExactInteger only, aligned with eigenvalues
  std::optional<QuadraticForm> quadratic;  // Quadratic only

  std::size_t size() const { return eigenvalues.size(); }
  bool is_integral() const { return kind == SpectrumKind::ExactInteger; }
};

/// Spectral idempotents E_r aligned with Spectrum::eigenvalues. `numeric` is
/// always filled; `exact` only for integral spectra (and then numeric is its
/// rounding).
struct Projectors {
  std::vector<Eigen::MatrixXd> numeric;
  std::vector<RationalMatrix> exact;

  bool is_exact() const { return !exact.empty(); }
};

struct SpectralDecomposition {
  Spectrum spectrum;
  Projectors projectors;
};

/// Eigenvalues (ascending) and orthonormal eigenvectors (columns) of a real
/// symmetric matrix by cyclic Jacobi rotations.
struct SymmetricEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};
SymmetricEigen jacobi_eigen(Eigen::MatrixXd a, int max_sweeps = 64);

/// det(xI - A), exact, ascending coefficients, monic of degree n.
IntPolynomial char_poly(const Graph& g);

/// Fits theta_r = (a + b_r sqrt(delta))/2 with fixed a to the descending
/// `values`, confirming each value by exact division of `charpoly` by its
/// minimal polynomial (raised to `multiplicities[r]` when given). Integral
/// inputs yield delta = 1, a = 0, b_r = 2 theta_r. `conjugate_pool` lists
/// candidate Galois conjugates (normally the whole spectrum).
std::optional<QuadraticForm> fit_quadratic_family(const std::vector<double>& values,
                                                  const std::vector<double>& conjugate_pool,
                                                  const IntPolynomial& charpoly, double snap,
                                                  const std::vector<int>& multiplicities = {});

/// A = sum_r theta_r E_r. Requires a connected graph.
SpectralDecomposition eigen_decompose(const Graph& g, const Tolerances& tol = {});

struct DecompositionCheck {
  bool passed = true;
  bool exact = false;
  std::string failed_identity;  // empty when passed
  double max_residual = 0.0;    // over all identities checked
};

/// Checks sum E_r = I, E_r^T = E_r, E_r E_s = delta_rs E_r, sum theta_r E_r = A
/// and trace E_r = m_r; exactly when exact projectors are present.
DecompositionCheck verify_decomposition(const SpectralDecomposition& d, const Graph& g, double tol);

/// A connected graph with its distances and certified spectral
/// decomposition. Every analysis in the library reads from one of these.
class SpectralGraph {
 public:
  explicit SpectralGraph(Graph g, Tolerances tol = {});

  const Graph& graph() const { return graph_; }
  const DistanceInfo& distances() const { return dist_; }
  const Spectrum& spectrum() const { return decomposition_.spectrum; }
  const Projectors& projectors() const { return decomposition_.projectors; }
  const SpectralDecomposition& decomposition() const { return decomposition_; }
  const IntPolynomial& characteristic_polynomial() const { return charpoly_; }
  const Tolerances& tolerances() const { return tol_; }
  int order() const { return graph_.order(); }

  /// Column u of E_r.
  Eigen::VectorXd projection(std::size_t r, Vertex u) const;

 private:
  Graph graph_;
  Tolerances tol_;
  DistanceInfo dist_;
  IntPolynomial charpoly_;
  SpectralDecomposition decomposition_;
};

}  // namespace pstlab
