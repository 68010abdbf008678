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
#include <vector>

#include "pstlab/exact.hpp"
#include "pstlab/spectral.hpp"

namespace pstlab {

/// Indices r (into the descending spectrum) with E_r e_u != 0.
struct EigenSupport {
  Vertex vertex = 0;
  std::vector<std::size_t> support;

  int dual_degree() const { return static_cast<int>(support.size()) - 1; }
};

/// sigmas[i] is the sign with E_r e_v = sigmas[i] E_r e_u for r = support[i].
struct SignPattern {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<std::size_t> support;
  std::vector<int> sigmas;
};

/// p with p(A) e_u = target, stored both as its values on the support of u
/// and in the monomial basis (ascending). Exact fields are filled for
/// integral spectra.
struct TransferPolynomial {
  std::vector<std::size_t> support;
  std::vector<double> values;
  std::vector<double> coefficients;
  std::vector<Rational> exact_values;
  RationalPolynomial exact_coefficients;
  int degree = 0;

  bool is_exact() const { return !exact_values.empty(); }
};

EigenSupport eigenvalue_support(const SpectralGraph& sg, Vertex u);
bool is_spectrally_extremal(const SpectralGraph& sg, Vertex u);
bool are_cospectral(const SpectralGraph& sg, Vertex u, Vertex v);
std::optional<SignPattern> are_strongly_cospectral(const SpectralGraph& sg, Vertex u, Vertex v);

/// Solves for p of minimum degree with p(A) e_u = target by expanding the
/// target in the orthogonal basis {E_r e_u : r in support(u)}. Returns
/// nothing when the target is outside the walk module of u; throws
/// AnalysisRefusal when the floating solve is inconclusive.
std::optional<TransferPolynomial> walk_module_polynomial(const SpectralGraph& sg, Vertex u,
                                                         const std::vector<int>& target);

/// Whether a real target lies in W_u, by the projection residual against
/// tol.membership.
bool in_walk_module(const SpectralGraph& sg, Vertex u, const Eigen::VectorXd& target);

/// walk_module_polynomial with target e_v. For cospectral u, v also checks
/// p(A) e_v = e_u and p(theta_r) = +-1 on the support, raising
/// CriticalFailure when either fails.
std::optional<TransferPolynomial> transfer_polynomial(const SpectralGraph& sg, Vertex u, Vertex v);

struct UniquenessWitness {
  bool holds = true;
  std::optional<Vertex> counterexample;
};
/// v is the only vertex at distance d(u,v) from u. Requires u extremal and
/// (u, v) strongly cospectral.
UniquenessWitness unique_at_distance_check(const SpectralGraph& sg, Vertex u, Vertex v);

struct WalkMaximalityViolation {
  Vertex z = 0;
  Vertex w = 0;
  BigInt walks;
  bool exceeds = false;             // (A^g)_{z,w} > (A^g)_{u,v}
  bool tie_without_strong = false;  // equality but (z,w) not strongly cospectral
  bool strong_without_tie = false;  // strongly cospectral but fewer walks
};

struct WalkMaximalityScan {
  int distance = 0;
  BigInt reference_walks;
  std::vector<std::pair<Vertex, Vertex>> ties;  // ordered pairs achieving equality
  std::vector<WalkMaximalityViolation> violations;
};
/// Over z with the same support as u and w at distance g = d(u,v) from z:
/// (A^g)_{z,w} <= (A^g)_{u,v}, with equality exactly for strongly cospectral
/// (z,w).
WalkMaximalityScan walk_maximality_scan(const SpectralGraph& sg, Vertex u, Vertex v);

/// p(A') e_u = 0 in the component X' of X \ v containing u, and no lower
/// degree polynomial annihilates e_u there.
bool minimal_poly_in_deleted_graph(const SpectralGraph& sg, Vertex u, Vertex v, const TransferPolynomial& p);

/// True when no three consecutive entries are equal.
bool no_three_consecutive_equal(const std::vector<int>& sigmas);
/// Checks the hypotheses (both ends extremal, strongly cospectral) and then
/// no_three_consecutive_equal.
bool sign_pattern_sanity(const SpectralGraph& sg, const SignPattern& sp);

}  // namespace pstlab
