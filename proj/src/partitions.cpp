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

#include "pstlab/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pstlab/errors.hpp"

namespace pstlab {

std::vector<int> Partition::class_of(int n) const {
  std::vector<int> owner(n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw std::invalid_argument("partition: empty class");
    for (Vertex x : classes[c]) {
      if (x < 0 || x >= n || owner[x] != -1) throw std::invalid_argument("partition: classes overlap or out of range");
      owner[x] = static_cast<int>(c);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end())
    throw std::invalid_argument("partition: classes do not cover the vertex set");
  return owner;
}

Partition distance_partition(const DistanceInfo& dist, Vertex u) {
  if (!dist.connected) throw PreconditionError("distance_partition: graph is disconnected");
  Partition p;
  p.root = u;
  p.classes.resize(dist.ecc[u] + 1);
  for (Vertex v = 0; v < dist.n; ++v) p.classes[dist(u, v)].push_back(v);
  return p;
}

Partition distance_partition(const SpectralGraph& sg, Vertex u) { return distance_partition(sg.distances(), u); }

EquitableResult<int> is_equitable(const Graph& g, const Partition& part) {
  const auto owner = part.class_of(g.order());
  const std::size_t k = part.classes.size();
  EquitableResult<int> out;
  std::vector<std::vector<int>> params(k, std::vector<int>(k, 0));
  for (std::size_t c = 0; c < k; ++c) {
    bool first = true;
    for (Vertex x : part.classes[c]) {
      std::vector<int> counts(k, 0);
      for (Vertex y : g.neighbors(x)) ++counts[owner[y]];
      if (first) {
        params[c] = counts;
        first = false;
        continue;
      }
      for (std::size_t t = 0; t < k; ++t) {
        if (counts[t] != params[c][t]) {
          out.witness = typename EquitableResult<int>::Witness{x, t, params[c][t], counts[t]};
          return out;
        }
      }
    }
  }
  out.equitable = true;
  out.parameters = std::move(params);
  return out;
}

PerronWeights perron_weights(const SpectralGraph& sg) {
  const Eigen::MatrixXd& e0 = sg.projectors().numeric.front();
  Eigen::Index best = 0;
  e0.diagonal().maxCoeff(&best);
  Eigen::VectorXd nu = e0.col(best);
  nu /= nu.norm();
  if (nu.sum() < 0) nu = -nu;
  if (nu.minCoeff() <= 0.0) throw CriticalFailure("Perron vector of a connected graph is not positive");
  const Eigen::VectorXd residual = sg.graph().adjacency_matrix() * nu - sg.spectrum().eigenvalues.front() * nu;
  if (residual.cwiseAbs().maxCoeff() > 1e3 * sg.tolerances().cluster * std::max(1.0, sg.spectrum().eigenvalues.front()))
    throw CriticalFailure("Perron vector is not an eigenvector of the largest eigenvalue");
  return {nu};
}

EquitableResult<double> is_pseudo_equitable(const Graph& g, const Partition& part, const PerronWeights& w,
                                            double tol) {
  const auto owner = part.class_of(g.order());
  const std::size_t k = part.classes.size();
  EquitableResult<double> out;
  std::vector<std::vector<double>> params(k, std::vector<double>(k, 0.0));
  for (std::size_t c = 0; c < k; ++c) {
    bool first = true;
    for (Vertex x : part.classes[c]) {
      std::vector<double> sums(k, 0.0);
      for (Vertex y : g.neighbors(x)) sums[owner[y]] += w.nu(y) / w.nu(x);
      if (first) {
        params[c] = sums;
        first = false;
        continue;
      }
      for (std::size_t t = 0; t < k; ++t) {
        if (std::abs(sums[t] - params[c][t]) > tol) {
          out.witness = typename EquitableResult<double>::Witness{x, t, params[c][t], sums[t]};
          return out;
        }
      }
    }
  }
  out.equitable = true;
  out.parameters = std::move(params);
  return out;
}

Eigen::VectorXd weighted_far_indicator(const SpectralGraph& sg, Vertex u) {
  const PerronWeights w = perron_weights(sg);
  const auto& dist = sg.distances();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(sg.order());
  for (Vertex x : dist.at_distance(u, dist.ecc[u])) out(x) = w.nu(x) / w.nu(u);
  return out;
}

AntipodalEvidence are_antipodal(const SpectralGraph& sg, Vertex u, Vertex v) {
  AntipodalEvidence ev;
  const auto& dist = sg.distances();
  const int d = dist(u, v);

  auto definitional = [&]() -> std::string {
    if (u == v) return "u and v coincide";
    if (dist.ecc[u] != d || dist.ecc[v] != d) return "d(u,v) is not the eccentricity of both vertices";
    const Partition pu = distance_partition(dist, u);
    const Partition pv = distance_partition(dist, v);
    for (int i = 0; i <= d; ++i)
      if (pu.classes[i] != pv.classes[d - i]) return "distance partitions of u and v differ";
    if (pu.classes[d].size() != 1) return "v is not a singleton class";
    if (!is_pseudo_equitable(sg.graph(), pu, perron_weights(sg), sg.tolerances().pseudo_equitable).equitable)
      return "distance partition is not pseudo-equitable";
    if (!are_cospectral(sg, u, v)) return "u and v are not cospectral";
    return {};
  };
  ev.definitional_failure = definitional();
  ev.definitional = ev.definitional_failure.empty();

  ev.sign_pattern = are_strongly_cospectral(sg, u, v);
  if (ev.sign_pattern && u != v && dist.ecc[u] == d && is_spectrally_extremal(sg, u)) {
    ev.spectral = true;
    for (std::size_t i = 0; i < ev.sign_pattern->sigmas.size(); ++i)
      if (ev.sign_pattern->sigmas[i] != (i % 2 == 0 ? 1 : -1)) ev.spectral = false;
  }
  return ev;
}

bool is_spectrally_extremal_graph(const SpectralGraph& sg) {
  return static_cast<int>(sg.spectrum().size()) == sg.distances().diameter + 1;
}

IdentityEvaluation antipodal_spectral_identity(const SpectralGraph& sg) {
  if (!regular_degree(sg.graph())) throw PreconditionError("spectral identity: graph is not regular");
  if (!is_spectrally_extremal_graph(sg))
    throw PreconditionError("spectral identity: graph is not spectrally extremal");
  const auto& spec = sg.spectrum();
  const std::size_t m = spec.size();
  const int n = sg.order();
  IdentityEvaluation out;
  if (spec.is_integral()) {
    const auto& th = spec.integer_values;
    Rational lhs = n;
    for (std::size_t s = 1; s < m; ++s) lhs /= Rational(th[0] - th[s]);
    Rational rhs = 0;
    for (std::size_t r = 0; r < m; ++r) {
      Rational term = r % 2 == 0 ? 1 : -1;
      for (std::size_t s = 0; s < m; ++s)
        if (s != r) term /= Rational(th[r] - th[s]);
      rhs += term;
    }
    out.lhs = to_double(lhs);
    out.rhs = to_double(rhs);
    out.equal = lhs == rhs;
    out.exact_lhs = lhs;
    out.exact_rhs = rhs;
    return out;
  }
  const auto& th = spec.eigenvalues;
  double lhs = n;
  for (std::size_t s = 1; s < m; ++s) lhs /= th[0] - th[s];
  double rhs = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    double term = r % 2 == 0 ? 1.0 : -1.0;
    for (std::size_t s = 0; s < m; ++s)
      if (s != r) term /= th[r] - th[s];
    rhs += term;
  }
  out.lhs = lhs;
  out.rhs = rhs;
  out.equal = std::abs(lhs - rhs) <= sg.tolerances().pseudo_equitable * std::max(1.0, std::abs(lhs));
  return out;
}

DistanceRegularity is_distance_regular(const Graph& g) {
  const DistanceInfo dist = distances(g);
  if (!dist.connected) throw PreconditionError("is_distance_regular: graph is disconnected");
  DistanceRegularity out;
  if (!regular_degree(g)) {
    out.reason = "not regular";
    return out;
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto eq = is_equitable(g, distance_partition(dist, u));
    if (!eq.equitable) {
      out.reason = "distance partition of vertex " + g.label(u) + " is not equitable";
      return out;
    }
    if (u == 0) {
      out.parameters = eq.parameters;
    } else if (eq.parameters != out.parameters) {
      // Cannot happen for regular graphs with all distance partitions equitable.
      throw CriticalFailure("equitable distance partitions of a regular graph have differing parameters");
    }
  }
  out.distance_regular = true;
  const int d = dist.diameter;
  for (int i = 0; i < d; ++i) out.b.push_back(out.parameters[i][i + 1]);
  for (int i = 1; i <= d; ++i) out.c.push_back(out.parameters[i][i - 1]);
  return out;
}

bool is_antipodal_drg(const Graph& g) {
  if (!is_distance_regular(g).distance_regular)
    throw PreconditionError("is_antipodal_drg: graph is not distance-regular");
  const DistanceInfo dist = distances(g);
  const int d = dist.diameter;
  auto block = [&](Vertex x) {
    std::vector<Vertex> s = dist.at_distance(x, d);
    s.push_back(x);
    std::sort(s.begin(), s.end());
    return s;
  };
  for (Vertex x = 0; x < g.order(); ++x) {
    const auto bx = block(x);
    for (Vertex y : bx)
      if (block(y) != bx) return false;
  }
  return true;
}

}  // namespace pstlab
