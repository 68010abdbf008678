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

#include "pstlab/walk.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace pstlab {

namespace {

constexpr double kGoldenRatio = 0.6180339887498949;

double golden_max(const WalkFrom& walk, Vertex v, double lo, double hi, double& arg) {
  double a = lo;
  double b = hi;
  double x1 = b - kGoldenRatio * (b - a);
  double x2 = a + kGoldenRatio * (b - a);
  double f1 = walk.fidelity(v, x1);
  double f2 = walk.fidelity(v, x2);
  for (int it = 0; it < 200 && b - a > 1e-13 * std::max(1.0, std::abs(b)); ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGoldenRatio * (b - a);
      f2 = walk.fidelity(v, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGoldenRatio * (b - a);
      f1 = walk.fidelity(v, x1);
    }
  }
  arg = f1 >= f2 ? x1 : x2;
  return std::max(f1, f2);
}

}  // namespace

WalkFrom::WalkFrom(const SpectralGraph& sg, Vertex u) {
  const auto& spec = sg.spectrum();
  for (std::size_t r = 0; r < spec.size(); ++r) {
    Eigen::VectorXd x = sg.projection(r, u);
    if (x.norm() <= sg.tolerances().support) continue;
    theta_.push_back(spec.eigenvalues[r]);
    components_.push_back(std::move(x));
  }
}

Amplitudes WalkFrom::evolve(double t) const {
  Amplitudes out;
  out.t = t;
  out.amp = Eigen::VectorXcd::Zero(components_.empty() ? 0 : components_.front().size());
  for (std::size_t r = 0; r < theta_.size(); ++r)
    out.amp += std::polar(1.0, t * theta_[r]) * components_[r].cast<std::complex<double>>();
  return out;
}

std::complex<double> WalkFrom::amplitude(Vertex v, double t) const {
  std::complex<double> acc = 0.0;
  for (std::size_t r = 0; r < theta_.size(); ++r) acc += std::polar(components_[r](v), t * theta_[r]);
  return acc;
}

Amplitudes evolve(const SpectralGraph& sg, Vertex u, double t) { return WalkFrom(sg, u).evolve(t); }

double fidelity(const SpectralGraph& sg, Vertex u, Vertex v, double t) { return WalkFrom(sg, u).fidelity(v, t); }

FidelitySeries fidelity_series(const SpectralGraph& sg, Vertex u, Vertex v, double t_max, int steps) {
  if (steps < 2) throw std::invalid_argument("fidelity_series: need at least 2 steps");
  if (!(t_max >= 0.0)) throw std::invalid_argument("fidelity_series: t_max must be nonnegative");
  const WalkFrom walk(sg, u);
  FidelitySeries series{u, v, {}};
  series.samples.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double t = t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
    series.samples.push_back({t, walk.fidelity(v, t)});
  }
  return series;
}

OracleSearch pst_oracle_search(const SpectralGraph& sg, Vertex u, Vertex v, double t_max, int coarse_steps,
                               double eps) {
  if (!(t_max > 0.0)) throw std::invalid_argument("pst_oracle_search: t_max must be positive");
  const WalkFrom walk(sg, u);
  const auto& theta = sg.spectrum().eigenvalues;
  const double width = theta.front() - theta.back();
  const double period = width > 0.0 ? 2.0 * 3.14159265358979323846 / width : t_max;
  const auto needed = static_cast<long long>(std::ceil(16.0 * t_max / period));
  const long long steps = std::max<long long>({static_cast<long long>(coarse_steps), needed, 3});

  std::vector<double> f(steps + 1);
  const double h = t_max / static_cast<double>(steps);
  for (long long i = 0; i <= steps; ++i) f[i] = walk.fidelity(v, h * static_cast<double>(i));

  OracleSearch out;
  out.best = {0.0, f[0]};
  auto consider = [&](double t, double value) {
    if (value > out.best.fidelity) out.best = {t, value};
    if (!out.hit && value >= 1.0 - eps) out.hit = OracleHit{t, value};
  };
  consider(0.0, f[0]);
  for (long long i = 1; i <= steps && !out.hit; ++i) {
    const bool left_ok = f[i] >= f[i - 1];
    const bool right_ok = i == steps || f[i] >= f[i + 1];
    if (!(left_ok && right_ok)) continue;
    const double lo = h * static_cast<double>(i - 1);
    const double hi = std::min(t_max, h * static_cast<double>(i + 1));
    double arg = h * static_cast<double>(i);
    const double peak = golden_max(walk, v, lo, hi, arg);
    if (peak >= f[i]) {
      consider(arg, peak);
    } else {
      consider(h * static_cast<double>(i), f[i]);
    }
  }
  return out;
}

void write_csv(std::ostream& out, const FidelitySeries& series) {
  out << "t,fidelity\n";
  char buf[64];
  for (const auto& s : series.samples) {
    std::snprintf(buf, sizeof buf, "%.15g,%.15g\n", s.t, s.fidelity);
    out << buf;
  }
}

}  // namespace pstlab
