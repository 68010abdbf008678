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

#include "pstlab/cospectrality.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pstlab/errors.hpp"

namespace pstlab {

namespace {

std::vector<Rational> apply_polynomial(const Graph& g, const RationalPolynomial& p, Vertex u) {
  const int n = g.order();
  std::vector<Rational> y(n, Rational(0));
  for (std::size_t i = p.size(); i-- > 0;) {
    std::vector<Rational> next(n, Rational(0));
    for (Vertex x = 0; x < n; ++x) {
      if (y[x] == 0) continue;
      for (Vertex z : g.neighbors(x)) next[z] += y[x];
    }
    next[u] += p[i];
    y = std::move(next);
  }
  return y;
}

// Unique coefficients a_0..a_{m-1} with sum a_i A^i e_u = target, where
// m = dimension of the walk module; nothing if target is outside it.
std::optional<RationalPolynomial> krylov_solve(const Graph& g, Vertex u, const std::vector<int>& target,
                                               std::size_t module_dim) {
  const int n = g.order();
  const std::size_t cols = module_dim + 1;
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(cols));
  std::vector<BigInt> krylov(n, 0);
  krylov[u] = 1;
  for (std::size_t i = 0; i < module_dim; ++i) {
    for (int x = 0; x < n; ++x) aug[x][i] = krylov[x];
    std::vector<BigInt> next(n, 0);
    for (Vertex x = 0; x < n; ++x)
      for (Vertex z : g.neighbors(x)) next[z] += krylov[x];
    krylov = std::move(next);
  }
  for (int x = 0; x < n; ++x) aug[x][module_dim] = target[x];

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < module_dim && row < static_cast<std::size_t>(n); ++c) {
    std::size_t p = row;
    while (p < static_cast<std::size_t>(n) && aug[p][c] == 0) ++p;
    if (p == static_cast<std::size_t>(n)) continue;
    std::swap(aug[p], aug[row]);
    const Rational lead = aug[row][c];
    for (std::size_t j = c; j < cols; ++j) aug[row][j] /= lead;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      if (i == row || aug[i][c] == 0) continue;
      const Rational f = aug[i][c];
      for (std::size_t j = c; j < cols; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  if (pivot_col.size() != module_dim) throw CriticalFailure("walk module dimension differs from support size");
  for (std::size_t i = row; i < static_cast<std::size_t>(n); ++i)
    if (aug[i][module_dim] != 0) return std::nullopt;
  RationalPolynomial coeffs(module_dim, Rational(0));
  for (std::size_t k = 0; k < pivot_col.size(); ++k) coeffs[pivot_col[k]] = aug[k][module_dim];
  trim(coeffs);
  return coeffs;
}

void require(bool condition, const std::string& what) {
  if (!condition) throw PreconditionError(what);
}

void require_extremal_and_strong(const SpectralGraph& sg, Vertex u, Vertex v, const char* op) {
  require(is_spectrally_extremal(sg, u), std::string(op) + ": vertex " + sg.graph().label(u) +
                                             " is not spectrally extremal");
  require(are_strongly_cospectral(sg, u, v).has_value(), std::string(op) + ": vertices " + sg.graph().label(u) +
                                                             " and " + sg.graph().label(v) +
                                                             " are not strongly cospectral");
}

}  // namespace

EigenSupport eigenvalue_support(const SpectralGraph& sg, Vertex u) {
  EigenSupport out;
  out.vertex = u;
  const auto& proj = sg.projectors();
  for (std::size_t r = 0; r < sg.spectrum().size(); ++r) {
    const bool present = proj.is_exact() ? proj.exact[r](u, u) != 0
                                         : proj.numeric[r].col(u).norm() > sg.tolerances().support;
    if (present) out.support.push_back(r);
  }
  return out;
}

bool is_spectrally_extremal(const SpectralGraph& sg, Vertex u) {
  return sg.distances().ecc[u] == eigenvalue_support(sg, u).dual_degree();
}

bool are_cospectral(const SpectralGraph& sg, Vertex u, Vertex v) {
  const auto& proj = sg.projectors();
  for (std::size_t r = 0; r < sg.spectrum().size(); ++r) {
    if (proj.is_exact()) {
      if (proj.exact[r](u, u) != proj.exact[r](v, v)) return false;
    } else if (std::abs(proj.numeric[r](u, u) - proj.numeric[r](v, v)) > sg.tolerances().support) {
      return false;
    }
  }
  return true;
}

std::optional<SignPattern> are_strongly_cospectral(const SpectralGraph& sg, Vertex u, Vertex v) {
  const auto& proj = sg.projectors();
  const double tol = sg.tolerances().support;
  const int n = sg.order();
  SignPattern sp{u, v, {}, {}};
  for (std::size_t r = 0; r < sg.spectrum().size(); ++r) {
    int sigma = 0;
    if (proj.is_exact()) {
      const RationalMatrix& e = proj.exact[r];
      const bool zu = e(u, u) == 0;
      const bool zv = e(v, v) == 0;
      if (zu && zv) continue;
      if (zu != zv) return std::nullopt;
      for (int i = 0; i < n && sigma == 0; ++i) {
        if (e(i, u) == 0) continue;
        if (e(i, v) == e(i, u)) {
          sigma = 1;
        } else if (e(i, v) == -e(i, u)) {
          sigma = -1;
        } else {
          return std::nullopt;
        }
      }
      for (int i = 0; i < n; ++i)
        if (e(i, v) != sigma * e(i, u)) return std::nullopt;
    } else {
      const Eigen::VectorXd xu = proj.numeric[r].col(u);
      const Eigen::VectorXd xv = proj.numeric[r].col(v);
      const bool zu = xu.norm() <= tol;
      const bool zv = xv.norm() <= tol;
      if (zu && zv) continue;
      if (zu != zv) return std::nullopt;
      for (int i = 0; i < n && sigma == 0; ++i) {
        if (std::abs(xu(i)) <= tol) continue;
        if (std::abs(xv(i)) <= tol) return std::nullopt;
        sigma = (xu(i) > 0) == (xv(i) > 0) ? 1 : -1;
      }
      if ((xv - sigma * xu).cwiseAbs().maxCoeff() > tol) return std::nullopt;
    }
    sp.support.push_back(r);
    sp.sigmas.push_back(sigma);
  }
  return sp;
}

std::optional<TransferPolynomial> walk_module_polynomial(const SpectralGraph& sg, Vertex u,
                                                         const std::vector<int>& target) {
  const auto& proj = sg.projectors();
  const auto& spec = sg.spectrum();
  const int n = sg.order();
  const EigenSupport sup = eigenvalue_support(sg, u);

  TransferPolynomial p;
  p.support = sup.support;
  Eigen::VectorXd t(n);
  for (int i = 0; i < n; ++i) t(i) = target[i];
  Eigen::VectorXd rebuilt = Eigen::VectorXd::Zero(n);
  for (std::size_t r : sup.support) {
    if (proj.is_exact()) {
      const RationalMatrix& e = proj.exact[r];
      Rational dot = 0;
      for (int i = 0; i < n; ++i) dot += e(i, u) * target[i];
      p.exact_values.push_back(dot / e(u, u));
      p.values.push_back(to_double(p.exact_values.back()));
    } else {
      const Eigen::VectorXd x = proj.numeric[r].col(u);
      p.values.push_back(x.dot(t) / x(u));
    }
    rebuilt += p.values.back() * proj.numeric[r].col(u);
  }
  const double residual = (rebuilt - t).cwiseAbs().maxCoeff();

  const auto coeffs = krylov_solve(sg.graph(), u, target, sup.support.size());
  const bool in_module_numeric = residual <= sg.tolerances().membership;
  if (coeffs.has_value() != in_module_numeric) {
    std::ostringstream msg;
    msg << "walk module membership of the target at vertex " << sg.graph().label(u)
        << " is inconclusive: projection residual " << residual << " but exact Krylov solve "
        << (coeffs ? "succeeds" : "fails");
    throw AnalysisRefusal(msg.str());
  }
  if (!coeffs) return std::nullopt;

  p.exact_coefficients = *coeffs;
  p.degree = degree(p.exact_coefficients);
  for (const auto& c : p.exact_coefficients) p.coefficients.push_back(to_double(c));

  // The two routes must agree on p(theta_r).
  for (std::size_t k = 0; k < sup.support.size(); ++k) {
    const std::size_t r = sup.support[k];
    if (p.is_exact()) {
      if (evaluate(p.exact_coefficients, Rational(spec.integer_values[r])) != p.exact_values[k])
        throw CriticalFailure("transfer polynomial: Krylov and projection solutions disagree");
      continue;
    }
    const double x = spec.eigenvalues[r];
    double value = 0.0;
    double scale = 0.0;
    for (std::size_t i = p.coefficients.size(); i-- > 0;) {
      value = value * x + p.coefficients[i];
      scale = scale * std::abs(x) + std::abs(p.coefficients[i]);
    }
    if (std::abs(value - p.values[k]) > std::sqrt(sg.tolerances().cluster) * std::max(1.0, scale)) {
      std::ostringstream msg;
      msg << "transfer polynomial: ill-conditioned solve, p(theta_" << r << ") = " << value
          << " but projection coefficient is " << p.values[k];
      throw AnalysisRefusal(msg.str());
    }
  }
  return p;
}

bool in_walk_module(const SpectralGraph& sg, Vertex u, const Eigen::VectorXd& target) {
  Eigen::VectorXd rebuilt = Eigen::VectorXd::Zero(sg.order());
  for (std::size_t r : eigenvalue_support(sg, u).support) {
    const Eigen::VectorXd x = sg.projection(r, u);
    rebuilt += (x.dot(target) / x(u)) * x;
  }
  return (rebuilt - target).cwiseAbs().maxCoeff() <= sg.tolerances().membership;
}

std::optional<TransferPolynomial> transfer_polynomial(const SpectralGraph& sg, Vertex u, Vertex v) {
  std::vector<int> target(sg.order(), 0);
  target[v] = 1;
  auto p = walk_module_polynomial(sg, u, target);
  if (!p || !are_cospectral(sg, u, v)) return p;

  const auto back = apply_polynomial(sg.graph(), p->exact_coefficients, v);
  for (int i = 0; i < sg.order(); ++i)
    if (back[i] != (i == u ? 1 : 0))
      throw CriticalFailure("transfer polynomial maps e_u to e_v but not e_v to e_u for cospectral " +
                            sg.graph().label(u) + ", " + sg.graph().label(v));
  for (std::size_t k = 0; k < p->values.size(); ++k) {
    const bool unit = p->is_exact() ? (p->exact_values[k] == 1 || p->exact_values[k] == -1)
                                    : std::abs(std::abs(p->values[k]) - 1.0) <= sg.tolerances().membership;
    if (!unit) throw CriticalFailure("transfer polynomial takes a non-unit value on the support");
  }
  return p;
}

UniquenessWitness unique_at_distance_check(const SpectralGraph& sg, Vertex u, Vertex v) {
  require_extremal_and_strong(sg, u, v, "unique_at_distance_check");
  UniquenessWitness out;
  const int g = sg.distances()(u, v);
  for (Vertex w : sg.distances().at_distance(u, g)) {
    if (w != v) {
      out.holds = false;
      out.counterexample = w;
      break;
    }
  }
  return out;
}

WalkMaximalityScan walk_maximality_scan(const SpectralGraph& sg, Vertex u, Vertex v) {
  require_extremal_and_strong(sg, u, v, "walk_maximality_scan");
  const auto& dist = sg.distances();
  const Graph& g = sg.graph();
  WalkMaximalityScan scan;
  scan.distance = dist(u, v);
  scan.reference_walks = walk_count(g, scan.distance, u, v);
  const auto support_u = eigenvalue_support(sg, u).support;
  for (Vertex z = 0; z < sg.order(); ++z) {
    if (eigenvalue_support(sg, z).support != support_u) continue;
    const auto walks = walk_counts_from(g, scan.distance, z);
    for (Vertex w : dist.at_distance(z, scan.distance)) {
      const bool strong = are_strongly_cospectral(sg, z, w).has_value();
      const bool tie = walks[w] == scan.reference_walks;
      WalkMaximalityViolation viol{z, w, walks[w], walks[w] > scan.reference_walks, tie && !strong,
                                   strong && !tie};
      if (tie) scan.ties.emplace_back(z, w);
      if (viol.exceeds || viol.tie_without_strong || viol.strong_without_tie) scan.violations.push_back(viol);
    }
  }
  return scan;
}

bool minimal_poly_in_deleted_graph(const SpectralGraph& sg, Vertex u, Vertex v, const TransferPolynomial& p) {
  require(u != v, "minimal_poly_in_deleted_graph: u and v must differ");
  require_extremal_and_strong(sg, u, v, "minimal_poly_in_deleted_graph");
  const Graph& g = sg.graph();

  std::vector<Vertex> component;
  std::vector<char> seen(g.order(), 0);
  seen[v] = 1;
  seen[u] = 1;
  component.push_back(u);
  for (std::size_t head = 0; head < component.size(); ++head)
    for (Vertex y : g.neighbors(component[head]))
      if (!seen[y]) {
        seen[y] = 1;
        component.push_back(y);
      }
  std::sort(component.begin(), component.end());
  const Graph sub = g.induced_subgraph(component);
  const Vertex root =
      static_cast<Vertex>(std::lower_bound(component.begin(), component.end(), u) - component.begin());

  const auto image = apply_polynomial(sub, p.exact_coefficients, root);
  if (std::any_of(image.begin(), image.end(), [](const Rational& x) { return x != 0; })) return false;

  std::vector<std::vector<BigInt>> krylov;
  std::vector<BigInt> x(sub.order(), 0);
  x[root] = 1;
  for (int i = 0; i < p.degree; ++i) {
    krylov.push_back(x);
    std::vector<BigInt> next(sub.order(), 0);
    for (Vertex a = 0; a < sub.order(); ++a)
      for (Vertex b : sub.neighbors(a)) next[b] += x[a];
    x = std::move(next);
  }
  return rank(krylov) == static_cast<std::size_t>(p.degree);
}

bool no_three_consecutive_equal(const std::vector<int>& sigmas) {
  for (std::size_t i = 0; i + 2 < sigmas.size(); ++i)
    if (sigmas[i] == sigmas[i + 1] && sigmas[i + 1] == sigmas[i + 2]) return false;
  return true;
}

bool sign_pattern_sanity(const SpectralGraph& sg, const SignPattern& sp) {
  require(is_spectrally_extremal(sg, sp.v), "sign_pattern_sanity: vertex " + sg.graph().label(sp.v) +
                                                " is not spectrally extremal");
  require_extremal_and_strong(sg, sp.u, sp.v, "sign_pattern_sanity");
  return no_three_consecutive_equal(sp.sigmas);
}

}  // namespace pstlab
