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

#include "pstlab/pst.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pstlab/errors.hpp"
#include "pstlab/walk.hpp"

namespace pstlab {

int two_adic_valuation(const BigInt& m) {
  if (m == 0) throw std::invalid_argument("two_adic_valuation: zero has no 2-adic valuation");
  const BigInt x = abs(m);
  return static_cast<int>(boost::multiprecision::lsb(x));
}

std::optional<QuadraticForm> quadratic_form_of_support(const SpectralGraph& sg,
                                                       const std::vector<std::size_t>& support) {
  std::vector<double> values;
  values.reserve(support.size());
  for (std::size_t r : support) values.push_back(sg.spectrum().eigenvalues[r]);
  return fit_quadratic_family(values, sg.spectrum().eigenvalues, sg.characteristic_polynomial(),
                              sg.tolerances().snap);
}

ValuationCheck check_valuations(const std::vector<BigInt>& gaps) {
  ValuationCheck out;
  if (gaps.empty()) {
    out.failure = "support has a single eigenvalue";
    return out;
  }
  for (const auto& g : gaps) out.valuations.push_back(two_adic_valuation(g));
  out.alpha = out.valuations.front();
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    const std::size_t r = i + 1;
    if (r % 2 == 1 && out.valuations[i] != out.alpha) {
      out.failure = "v2 of the gap at odd index " + std::to_string(r) + " is " + std::to_string(out.valuations[i]) +
                    ", not alpha = " + std::to_string(out.alpha);
      return out;
    }
  }
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    const std::size_t r = i + 1;
    if (r % 2 == 0 && out.valuations[i] <= out.alpha) {
      out.failure = "v2 of the gap at even index " + std::to_string(r) + " is " +
                    std::to_string(out.valuations[i]) + ", not above alpha = " + std::to_string(out.alpha);
      return out;
    }
  }
  out.ok = true;
  return out;
}

ValuationCheck check_valuations(const QuadraticForm& form) {
  std::vector<BigInt> gaps;
  for (std::size_t r = 1; r < form.b.size(); ++r) gaps.emplace_back(form.b[0] - form.b[r]);
  return check_valuations(gaps);
}

double pst_time(int alpha, std::int64_t delta) {
  return 2.0 * std::numbers::pi / (std::ldexp(1.0, alpha) * std::sqrt(static_cast<double>(delta)));
}

std::string to_string(NoPstReason reason) {
  switch (reason) {
    case NoPstReason::None:
      return "none";
    case NoPstReason::TrivialPair:
      return "trivial pair rejected";
    case NoPstReason::NotExtremal:
      return "hypothesis unmet: u is not spectrally extremal";
    case NoPstReason::NotAtMaximalDistance:
      return "hypothesis unmet: v is not at maximal distance from u";
    case NoPstReason::NotAntipodal:
      return "not antipodal";
    case NoPstReason::NoQuadraticForm:
      return "support eigenvalues have no integral or quadratic form";
    case NoPstReason::OddValuationsDiffer:
      return "2-adic valuations differ over odd indices";
    case NoPstReason::EvenValuationTooSmall:
      return "2-adic valuation at an even index does not exceed alpha";
  }
  return "unknown";
}

bool PstCertificate::oracle_confirmed() const { return fidelity >= 1.0 - kConfirmFidelity; }

PairVerdict pst_decide_pair(const SpectralGraph& sg, Vertex u, Vertex v) {
  PairVerdict out;
  out.u = u;
  out.v = v;
  auto reject = [&](NoPstReason reason, std::string detail = {}) {
    out.reason = reason;
    out.detail = detail.empty() ? to_string(reason) : std::move(detail);
    return out;
  };
  if (u == v) return reject(NoPstReason::TrivialPair);
  if (!is_spectrally_extremal(sg, u)) return reject(NoPstReason::NotExtremal);
  if (sg.distances()(u, v) != sg.distances().ecc[u]) return reject(NoPstReason::NotAtMaximalDistance);

  const AntipodalEvidence anti = are_antipodal(sg, u, v);
  if (!anti.holds()) {
    std::string detail = to_string(NoPstReason::NotAntipodal);
    if (!anti.definitional) detail += ": " + anti.definitional_failure;
    if (!anti.agree()) detail += " (definitional and sign-pattern tests disagree)";
    return reject(NoPstReason::NotAntipodal, detail);
  }

  const auto& support = anti.sign_pattern->support;
  const auto form = quadratic_form_of_support(sg, support);
  if (!form) return reject(NoPstReason::NoQuadraticForm);
  const ValuationCheck val = check_valuations(*form);
  if (!val.ok) {
    bool odd_failed = false;
    for (std::size_t i = 0; i < val.valuations.size(); ++i)
      if ((i + 1) % 2 == 1 && val.valuations[i] != val.alpha) odd_failed = true;
    return reject(odd_failed ? NoPstReason::OddValuationsDiffer : NoPstReason::EvenValuationTooSmall, val.failure);
  }

  PstCertificate cert;
  cert.u = u;
  cert.v = v;
  cert.alpha = val.alpha;
  cert.delta = form->delta;
  cert.tau = pst_time(val.alpha, form->delta);
  cert.form = *form;
  cert.support = support;
  cert.sigmas = anti.sign_pattern->sigmas;
  cert.fidelity = fidelity(sg, u, v, cert.tau);
  out.certificate = std::move(cert);
  return out;
}

GraphVerdict pst_decide_graph(const SpectralGraph& sg) {
  if (!regular_degree(sg.graph())) throw PreconditionError("pst_decide_graph: graph is not regular");
  if (!is_spectrally_extremal_graph(sg))
    throw PreconditionError("pst_decide_graph: graph is not spectrally extremal");
  GraphVerdict out;
  const auto& spec = sg.spectrum();
  auto fail = [&](int condition, const std::string& why) {
    out.failed.push_back(condition);
    if (out.detail.empty()) out.detail = why;
  };

  if (!spec.is_integral()) {
    fail(1, "eigenvalues are not all integers");
  } else {
    for (std::size_t r = 1; r < spec.size(); ++r)
      out.theta_gaps.push_back(spec.integer_values[0] - spec.integer_values[r]);
    for (const auto& g : out.theta_gaps) out.valuations.push_back(two_adic_valuation(g));
    out.alpha = out.valuations.empty() ? 0 : out.valuations.front();
    for (std::size_t i = 0; i < out.valuations.size(); ++i)
      if ((i + 1) % 2 == 1 && out.valuations[i] != out.alpha) {
        fail(2, "v2(theta_0 - theta_" + std::to_string(i + 1) + ") differs from alpha");
        break;
      }
    for (std::size_t i = 0; i < out.valuations.size(); ++i)
      if ((i + 1) % 2 == 0 && out.valuations[i] <= out.alpha) {
        fail(3, "v2(theta_0 - theta_" + std::to_string(i + 1) + ") = " + std::to_string(out.valuations[i]) +
                    " does not exceed alpha = " + std::to_string(out.alpha));
        break;
      }
  }
  out.identity = antipodal_spectral_identity(sg);
  if (!out.identity.equal) fail(4, "spectral identity for antipodal pairs fails");

  out.pass = out.failed.empty();
  out.first_failed = out.pass ? 0 : out.failed.front();
  if (out.pass) out.tau = std::numbers::pi / std::ldexp(1.0, out.alpha);
  return out;
}

bool TieTransfer::all_confirmed() const {
  if (!exceeding.empty()) return false;
  for (const auto& p : pairs)
    if (p.fidelity < 1.0 - kConfirmFidelity) return false;
  return true;
}

TieTransfer pst_transfer_along_ties(const SpectralGraph& sg, const PstCertificate& known) {
  if (!is_spectrally_extremal_graph(sg))
    throw PreconditionError("pst_transfer_along_ties: graph is not spectrally extremal");
  const int d = sg.distances().diameter;
  if (sg.distances()(known.u, known.v) != d)
    throw PreconditionError("pst_transfer_along_ties: certified pair is not at distance d");
  TieTransfer out;
  out.reference_walks = walk_count(sg.graph(), d, known.u, known.v);
  for (Vertex z = 0; z < sg.order(); ++z) {
    const auto walks = walk_counts_from(sg.graph(), d, z);
    const WalkFrom walk(sg, z);
    for (Vertex w = z + 1; w < sg.order(); ++w) {
      if (sg.distances()(z, w) != d) continue;
      if (walks[w] > out.reference_walks) out.exceeding.emplace_back(z, w);
      if (walks[w] == out.reference_walks) out.pairs.push_back({z, w, walk.fidelity(w, known.tau)});
    }
  }
  return out;
}

}  // namespace pstlab
