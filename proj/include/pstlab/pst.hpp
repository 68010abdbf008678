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
#include <utility>
#include <vector>

#include "pstlab/cospectrality.hpp"
#include "pstlab/exact.hpp"
#include "pstlab/partitions.hpp"
#include "pstlab/spectral.hpp"

namespace pstlab {

/// Exponent of 2 in m; throws std::invalid_argument for m = 0.
int two_adic_valuation(const BigInt& m);

/// The (delta, a, b_r) form of the eigenvalues indexed by `support`, or
/// nothing when they are neither all integers nor of one quadratic family.
std::optional<QuadraticForm> quadratic_form_of_support(const SpectralGraph& sg,
                                                       const std::vector<std::size_t>& support);

/// Valuation conditions on b_0 - b_r: constant alpha over odd r, strictly
/// larger over even r >= 2.
struct ValuationCheck {
  bool ok = false;
  int alpha = 0;
  std::vector<int> valuations;  // v2(b_0 - b_r), r = 1..
  std::string failure;          // empty when ok
};
ValuationCheck check_valuations(const std::vector<BigInt>& gaps);
ValuationCheck check_valuations(const QuadraticForm& form);

/// 2 pi / (2^alpha sqrt(delta)).
double pst_time(int alpha, std::int64_t delta);

enum class NoPstReason {
  None,
  TrivialPair,
  NotExtremal,
  NotAtMaximalDistance,
  NotAntipodal,
  NoQuadraticForm,
  OddValuationsDiffer,
  EvenValuationTooSmall,
};
std::string to_string(NoPstReason reason);

struct PstCertificate {
  Vertex u = 0;
  Vertex v = 0;
  int alpha = 0;
  std::int64_t delta = 1;
  double tau = 0.0;
  QuadraticForm form;
  std::vector<std::size_t> support;
  std::vector<int> sigmas;
  double fidelity = 0.0;

  bool oracle_confirmed() const;
};

struct PairVerdict {
  Vertex u = 0;
  Vertex v = 0;
  std::optional<PstCertificate> certificate;
  NoPstReason reason = NoPstReason::None;
  std::string detail;

  bool pst() const { return certificate.has_value(); }
  bool hypotheses_met() const {
    return reason != NoPstReason::TrivialPair && reason != NoPstReason::NotExtremal &&
           reason != NoPstReason::NotAtMaximalDistance;
  }
};

/// Decision for a spectrally extremal u and v at maximal distance from u.
/// Unmet hypotheses come back as reasons, never as exceptions.
PairVerdict pst_decide_pair(const SpectralGraph& sg, Vertex u, Vertex v);

struct GraphVerdict {
  bool pass = false;
  int first_failed = 0;             // 1..4, 0 on pass
  std::vector<int> failed;          // every failed condition
  std::string detail;
  std::vector<BigInt> theta_gaps;   // theta_0 - theta_r, r = 1..d
  std::vector<int> valuations;
  int alpha = 0;
  IdentityEvaluation identity;
  double tau = 0.0;                 // pi / 2^alpha on pass
};

/// "PST between every pair at distance d" for a connected regular graph with
/// d + 1 distinct eigenvalues; throws PreconditionError otherwise.
GraphVerdict pst_decide_graph(const SpectralGraph& sg);

struct InducedTransfer {
  Vertex z = 0;
  Vertex w = 0;
  double fidelity = 0.0;
};

struct TieTransfer {
  BigInt reference_walks;
  std::vector<InducedTransfer> pairs;                  // unordered pairs tying the certificate's walk count
  std::vector<std::pair<Vertex, Vertex>> exceeding;    // pairs with more walks (must be empty)
  bool all_confirmed() const;
};

/// All pairs at distance d whose d-walk count equals the certified pair's,
/// each checked for PST at the certificate's time.
TieTransfer pst_transfer_along_ties(const SpectralGraph& sg, const PstCertificate& known);

}  // namespace pstlab
