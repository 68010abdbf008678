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

#include <complex>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pstlab/spectral.hpp"

namespace pstlab {

/// U(t) e_u for U(t) = exp(i t A).
struct Amplitudes {
  double t = 0.0;
  Eigen::VectorXcd amp;
};

struct FidelitySample {
  double t = 0.0;
  double fidelity = 0.0;
};

struct FidelitySeries {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<FidelitySample> samples;
};

struct OracleHit {
  double t = 0.0;
  double fidelity = 0.0;
};

struct OracleSearch {
  std::optional<OracleHit> hit;  // earliest time reaching 1 - eps
  OracleHit best;                // global maximum seen
};

inline constexpr double kConfirmFidelity = 1e-9;  // certified time must reach 1 - this
inline constexpr double kRefuteFidelity = 1e-6;   // refutation scans must stay below 1 - this
inline constexpr double kDefaultScanHorizon = 20.0 * 3.14159265358979323846;

/// Spectral-sum evaluation of the walk from a fixed start vertex. Caches
/// E_r e_u so repeated time samples cost O(d n).
class WalkFrom {
 public:
  WalkFrom(const SpectralGraph& sg, Vertex u);

  Amplitudes evolve(double t) const;
  std::complex<double> amplitude(Vertex v, double t) const;
  double fidelity(Vertex v, double t) const { return std::abs(amplitude(v, t)); }

 private:
  std::vector<double> theta_;
  std::vector<Eigen::VectorXd> components_;  // E_r e_u for supported r
};

Amplitudes evolve(const SpectralGraph& sg, Vertex u, double t);
double fidelity(const SpectralGraph& sg, Vertex u, Vertex v, double t);

/// Uniform grid on [0, t_max]; steps >= 2.
FidelitySeries fidelity_series(const SpectralGraph& sg, Vertex u, Vertex v, double t_max, int steps);

/// Coarse scan of [0, t_max] followed by golden-section refinement around
/// every local maximum. The grid is refined automatically so that the
/// fastest spectral frequency is sampled at least 16 times per period.
OracleSearch pst_oracle_search(const SpectralGraph& sg, Vertex u, Vertex v, double t_max, int coarse_steps,
                               double eps);

/// CSV with header `t,fidelity`, 15 significant digits.
void write_csv(std::ostream& out, const FidelitySeries& series);

}  // namespace pstlab
