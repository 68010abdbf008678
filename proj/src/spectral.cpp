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

#include "pstlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pstlab/errors.hpp"

namespace pstlab {

namespace {

// Integer matrix stored row-major; used for exact Lagrange products.
using IntMatrix = std::vector<BigInt>;

IntMatrix shifted_adjacency(const Graph& g, const BigInt& shift) {
  const int n = g.order();
  IntMatrix m(static_cast<std::size_t>(n) * n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) m[u * n + v] = 1;
    m[u * n + u] = -shift;
  }
  return m;
}

IntMatrix matmul(const IntMatrix& x, const IntMatrix& y, int n) {
  IntMatrix out(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const BigInt& a = x[i * n + k];
      if (a == 0) continue;
      for (int j = 0; j < n; ++j)
        if (y[k * n + j] != 0) out[i * n + j] += a * y[k * n + j];
    }
  return out;
}

bool poly_power_divides(const RationalPolynomial& factor, int power, const RationalPolynomial& target) {
  RationalPolynomial f = {Rational(1)};
  for (int i = 0; i < power; ++i) f = multiply(f, factor);
  return divides(f, target);
}

// Exact confirmation that `value` is an integer root of multiplicity >= m.
bool integer_root_confirmed(double value, double snap, const IntPolynomial& charpoly, long long& root) {
  const double nearest = std::round(value);
  if (std::abs(value - nearest) > snap) return false;
  root = static_cast<long long>(nearest);
  return evaluate(charpoly, BigInt(root)) == 0;
}

struct Cluster {
  double center = 0.0;
  std::vector<int> members;  // indices into the ascending Jacobi output
};

std::vector<Cluster> cluster_descending(const Eigen::VectorXd& ascending, double tol) {
  std::vector<Cluster> clusters;
  const int n = static_cast<int>(ascending.size());
  for (int i = n - 1; i >= 0; --i) {
    if (!clusters.empty() && ascending(clusters.back().members.back()) - ascending(i) <= tol) {
      clusters.back().members.push_back(i);
      continue;
    }
    if (!clusters.empty()) {
      const double gap = ascending(clusters.back().members.back()) - ascending(i);
      if (gap <= 10.0 * tol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "eigenvalue clusters at " << ascending(clusters.back().members.back()) << " and " << ascending(i)
            << " are separated by " << gap << ", within 10*tol of merging";
        throw AnalysisRefusal(msg.str());
      }
    }
    clusters.push_back({0.0, {i}});
  }
  for (auto& c : clusters) {
    double sum = 0.0;
    for (int i : c.members) sum += ascending(i);
    c.center = sum / static_cast<double>(c.members.size());
  }
  return clusters;
}

SpectralDecomposition decompose(const Graph& g, const IntPolynomial& charpoly, const Tolerances& tol) {
  if (!is_connected(g)) throw PreconditionError("eigen_decompose: graph is disconnected");
  const int n = g.order();
  const SymmetricEigen eig = jacobi_eigen(g.adjacency_matrix());
  const std::vector<Cluster> clusters = cluster_descending(eig.values, tol.cluster);

  SpectralDecomposition out;
  Spectrum& spec = out.spectrum;
  for (const auto& c : clusters) {
    spec.eigenvalues.push_back(c.center);
    spec.multiplicities.push_back(static_cast<int>(c.members.size()));
  }

  std::vector<long long> roots(clusters.size());
  bool all_integer = true;
  for (std::size_t r = 0; r < clusters.size() && all_integer; ++r)
    all_integer = integer_root_confirmed(clusters[r].center, tol.snap, charpoly, roots[r]);

  if (all_integer) {
    RationalPolynomial product = {Rational(1)};
    for (std::size_t r = 0; r < clusters.size(); ++r)
      for (int k = 0; k < spec.multiplicities[r]; ++k) product = multiply(product, {Rational(-roots[r]), Rational(1)});
    if (product == to_rational(charpoly)) {
      spec.kind = SpectrumKind::ExactInteger;
      for (std::size_t r = 0; r < clusters.size(); ++r) {
        spec.integer_values.emplace_back(roots[r]);
        spec.eigenvalues[r] = static_cast<double>(roots[r]);
      }
    }
  } else if (auto form = fit_quadratic_family(spec.eigenvalues, spec.eigenvalues, charpoly, tol.snap,
                                              spec.multiplicities)) {
    spec.kind = SpectrumKind::Quadratic;
    for (std::size_t r = 0; r < clusters.size(); ++r) spec.eigenvalues[r] = form->value(r);
    spec.quadratic = std::move(form);
  }

  Projectors& proj = out.projectors;
  if (spec.kind == SpectrumKind::ExactInteger) {
    const std::size_t d = clusters.size();
    for (std::size_t r = 0; r < d; ++r) {
      IntMatrix numer = shifted_adjacency(g, 0);
      numer.assign(numer.size(), 0);
      for (int i = 0; i < n; ++i) numer[i * n + i] = 1;
      BigInt denom = 1;
      for (std::size_t s = 0; s < d; ++s) {
        if (s == r) continue;
        numer = matmul(numer, shifted_adjacency(g, spec.integer_values[s]), n);
        denom *= spec.integer_values[r] - spec.integer_values[s];
      }
      if (denom < 0) {
        denom = -denom;
        for (auto& x : numer) x = -x;
      }
      RationalMatrix e(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e(i, j) = Rational(numer[i * n + j], denom);
      Eigen::MatrixXd approx(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) approx(i, j) = to_double(e(i, j));
      proj.exact.push_back(std::move(e));
      proj.numeric.push_back(std::move(approx));
    }
  } else {
    for (const auto& c : clusters) {
      Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
      for (int i : c.members) e.noalias() += eig.vectors.col(i) * eig.vectors.col(i).transpose();
      proj.numeric.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace

std::string to_string(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::ExactInteger:
      return "exact-integer";
    case SpectrumKind::Quadratic:
      return "quadratic";
    case SpectrumKind::Floating:
      return "floating";
  }
  return "unknown";
}

double QuadraticForm::value(std::size_t r) const {
  return (static_cast<double>(a) + static_cast<double>(b[r]) * std::sqrt(static_cast<double>(delta))) / 2.0;
}

SymmetricEigen jacobi_eigen(Eigen::MatrixXd a, int max_sweeps) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double scale = std::max(a.norm(), 1.0);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) <= 1e-15 * scale) break;

    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });
  SymmetricEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[k], order[k]);
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

IntPolynomial char_poly(const Graph& g) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  const int n = g.order();
  IntPolynomial c(n + 1, 0);
  c[n] = 1;
  IntMatrix m(static_cast<std::size_t>(n) * n, 0);
  for (int k = 1; k <= n; ++k) {
    IntMatrix am(static_cast<std::size_t>(n) * n, 0);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex x : g.neighbors(i))
        for (int j = 0; j < n; ++j) am[i * n + j] += m[x * n + j];
    for (int i = 0; i < n; ++i) am[i * n + i] += c[n - k + 1];
    m = std::move(am);
    BigInt trace = 0;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex x : g.neighbors(i)) trace += m[x * n + i];
    c[n - k] = -trace / k;
  }
  return c;
}

std::optional<QuadraticForm> fit_quadratic_family(const std::vector<double>& values,
                                                  const std::vector<double>& conjugate_pool,
                                                  const IntPolynomial& charpoly, double snap,
                                                  const std::vector<int>& multiplicities) {
  if (values.empty()) return std::nullopt;
  const RationalPolynomial target = to_rational(charpoly);
  auto power_of = [&](std::size_t r) { return multiplicities.empty() ? 1 : multiplicities[r]; };

  bool integral = true;
  std::vector<long long> roots(values.size());
  for (std::size_t r = 0; r < values.size() && integral; ++r)
    integral = integer_root_confirmed(values[r], snap, charpoly, roots[r]) &&
               poly_power_divides({Rational(-roots[r]), Rational(1)}, power_of(r), target);
  if (integral) {
    QuadraticForm form;
    for (long long root : roots) form.b.push_back(2 * root);
    return form;
  }

  // (2(theta_0 - theta_r))^2 = (b_0 - b_r)^2 delta must be integers sharing one square-free part.
  std::int64_t delta = 0;
  std::vector<std::int64_t> b_gap(values.size(), 0);
  for (std::size_t r = 1; r < values.size(); ++r) {
    const double sq = std::pow(2.0 * (values[0] - values[r]), 2);
    const double nearest = std::round(sq);
    if (nearest < 1.0 || std::abs(sq - nearest) > snap * std::max(1.0, nearest)) return std::nullopt;
    const auto big_n = static_cast<long long>(nearest);
    const long long sf = square_free_part(big_n);
    if (delta == 0) delta = sf;
    if (sf != delta) return std::nullopt;
    const auto gap = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(big_n / sf))));
    if (gap * gap * sf != big_n) return std::nullopt;
    b_gap[r] = gap;
  }

  const double x0 = values[0];
  for (double partner : conjugate_pool) {
    const double trace = x0 + partner;
    const double a_near = std::round(trace);
    if (std::abs(trace - a_near) > snap) continue;
    const auto a = static_cast<std::int64_t>(a_near);
    // Without other support values the conjugate pair fixes delta.
    std::int64_t d = delta;
    if (d == 0) {
      const double sq = std::pow(x0 - partner, 2);
      const double nearest = std::round(sq);
      if (nearest < 1.0 || std::abs(sq - nearest) > snap * std::max(1.0, nearest)) continue;
      d = square_free_part(static_cast<long long>(nearest));
    }
    if (d == 1) continue;  // rational values were handled by the integral branch
    const double root_d = std::sqrt(static_cast<double>(d));
    const auto b0 = static_cast<std::int64_t>(std::llround((2.0 * x0 - static_cast<double>(a)) / root_d));
    QuadraticForm form{d, a, {}};
    for (std::size_t r = 0; r < values.size(); ++r) form.b.push_back(b0 - b_gap[r]);

    bool ok = true;
    for (std::size_t r = 0; r < values.size() && ok; ++r) {
      if (std::abs(form.value(r) - values[r]) > snap) {
        ok = false;
        break;
      }
      const std::int64_t br = form.b[r];
      if (br == 0) {
        ok = a % 2 == 0 && poly_power_divides({Rational(-a / 2), Rational(1)}, power_of(r), target);
      } else {
        const std::int64_t disc = a * a - br * br * d;
        ok = disc % 4 == 0 &&
             poly_power_divides({Rational(disc / 4), Rational(-a), Rational(1)}, power_of(r), target);
      }
    }
    if (ok) return form;
  }
  return std::nullopt;
}

SpectralDecomposition eigen_decompose(const Graph& g, const Tolerances& tol) {
  return decompose(g, char_poly(g), tol);
}

DecompositionCheck verify_decomposition(const SpectralDecomposition& d, const Graph& g, double tol) {
  DecompositionCheck check;
  const auto& spec = d.spectrum;
  const auto& proj = d.projectors;
  const int n = g.order();
  const std::size_t m = spec.size();
  if (proj.numeric.size() != m || (proj.is_exact() && proj.exact.size() != m)) {
    check.passed = false;
    check.failed_identity = "projector count matches spectrum";
    return check;
  }
  auto fail = [&](const std::string& name, double residual) {
    check.max_residual = std::max(check.max_residual, residual);
    if (check.passed) {
      check.passed = false;
      check.failed_identity = name;
    }
  };

  if (proj.is_exact()) {
    check.exact = true;
    auto residual = [](const RationalMatrix& x, const RationalMatrix& y) {
      double worst = 0.0;
      for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) worst = std::max(worst, std::abs(to_double(x(i, j) - y(i, j))));
      return worst;
    };
    RationalMatrix sum(n, n);
    RationalMatrix weighted(n, n);
    RationalMatrix adjacency(n, n);
    for (auto [u, v] : g.edges()) adjacency(u, v) = adjacency(v, u) = 1;
    for (std::size_t r = 0; r < m; ++r) {
      sum = sum + proj.exact[r];
      RationalMatrix scaled = proj.exact[r];
      scaled *= Rational(spec.integer_values[r]);
      weighted = weighted + scaled;
    }
    if (sum != RationalMatrix::identity(n)) fail("sum E_r = I", residual(sum, RationalMatrix::identity(n)));
    for (std::size_t r = 0; r < m; ++r)
      if (proj.exact[r] != proj.exact[r].transpose()) fail("E_r^T = E_r", residual(proj.exact[r], proj.exact[r].transpose()));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t s = r; s < m; ++s) {
        const RationalMatrix prod = proj.exact[r] * proj.exact[s];
        const RationalMatrix expect = r == s ? proj.exact[r] : RationalMatrix(n, n);
        if (prod != expect) fail("E_r E_s = delta_rs E_r", residual(prod, expect));
      }
    if (weighted != adjacency) fail("sum theta_r E_r = A", residual(weighted, adjacency));
    for (std::size_t r = 0; r < m; ++r)
      if (proj.exact[r].trace() != spec.multiplicities[r])
        fail("trace E_r = multiplicity", std::abs(to_double(proj.exact[r].trace()) - spec.multiplicities[r]));
    return check;
  }

  auto record = [&](const std::string& name, double residual) {
    if (residual > tol) fail(name, residual);
    check.max_residual = std::max(check.max_residual, residual);
  };
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd weighted = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t r = 0; r < m; ++r) {
    sum += proj.numeric[r];
    weighted += spec.eigenvalues[r] * proj.numeric[r];
  }
  record("sum E_r = I", (sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff());
  for (std::size_t r = 0; r < m; ++r)
    record("E_r^T = E_r", (proj.numeric[r] - proj.numeric[r].transpose()).cwiseAbs().maxCoeff());
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = r; s < m; ++s) {
      const Eigen::MatrixXd prod = proj.numeric[r] * proj.numeric[s];
      const Eigen::MatrixXd expect = r == s ? proj.numeric[r] : Eigen::MatrixXd::Zero(n, n);
      record("E_r E_s = delta_rs E_r", (prod - expect).cwiseAbs().maxCoeff());
    }
  record("sum theta_r E_r = A", (weighted - g.adjacency_matrix()).cwiseAbs().maxCoeff());
  for (std::size_t r = 0; r < m; ++r)
    record("trace E_r = multiplicity", std::abs(proj.numeric[r].trace() - spec.multiplicities[r]));
  return check;
}

SpectralGraph::SpectralGraph(Graph g, Tolerances tol)
    : graph_(std::move(g)), tol_(tol), dist_(pstlab::distances(graph_)) {
  if (!dist_.connected) throw PreconditionError("spectral analysis requires a connected graph");
  charpoly_ = char_poly(graph_);
  decomposition_ = decompose(graph_, charpoly_, tol_);
}

Eigen::VectorXd SpectralGraph::projection(std::size_t r, Vertex u) const {
  return decomposition_.projectors.numeric[r].col(u);
}

}  // namespace pstlab
