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

#include "pstlab/exact.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace pstlab {

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch in product");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (rhs(k, j) != 0) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("RationalMatrix: shape mismatch");
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("RationalMatrix: shape mismatch");
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

std::vector<Rational> RationalMatrix::column(std::size_t j) const {
  std::vector<Rational> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void trim(RationalPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const RationalPolynomial& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

RationalPolynomial to_rational(const IntPolynomial& p) {
  RationalPolynomial out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(c);
  return out;
}

RationalPolynomial multiply(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  RationalPolynomial out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

PolynomialDivision divide(const RationalPolynomial& dividend, const RationalPolynomial& divisor) {
  RationalPolynomial d = divisor;
  trim(d);
  if (d.empty()) throw std::invalid_argument("polynomial division by zero");
  RationalPolynomial r = dividend;
  trim(r);
  const int dd = degree(d);
  PolynomialDivision out;
  if (degree(r) < dd) {
    out.remainder = r;
    return out;
  }
  out.quotient.assign(r.size() - d.size() + 1, Rational(0));
  const Rational lead = d.back();
  for (int k = degree(r); k >= dd; --k) {
    const Rational c = r[k] / lead;
    if (c == 0) continue;
    out.quotient[k - dd] = c;
    for (int i = 0; i <= dd; ++i) r[k - dd + i] -= c * d[i];
  }
  trim(r);
  trim(out.quotient);
  out.remainder = std::move(r);
  return out;
}

bool divides(const RationalPolynomial& divisor, const RationalPolynomial& dividend) {
  return divide(dividend, divisor).remainder.empty();
}

Rational evaluate(const RationalPolynomial& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

BigInt evaluate(const IntPolynomial& p, const BigInt& x) {
  BigInt acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

RationalPolynomial interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values) {
  assert(nodes.size() == values.size());
  const std::size_t m = nodes.size();
  // Newton divided differences, then expand to the monomial basis.
  std::vector<Rational> coef = values;
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      const Rational gap = nodes[i] - nodes[i - level];
      if (gap == 0) throw std::invalid_argument("interpolate: repeated node");
      coef[i] = (coef[i] - coef[i - 1]) / gap;
    }
  }
  RationalPolynomial p;
  for (std::size_t i = m; i-- > 0;) {
    // p <- p * (x - nodes[i]) + coef[i]
    RationalPolynomial next(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= p[k] * nodes[i];
    }
    next[0] += coef[i];
    p = std::move(next);
  }
  trim(p);
  return p;
}

std::size_t rank(std::vector<std::vector<BigInt>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  BigInt prev_pivot = 1;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    // Bareiss step: entries stay integral, division is exact.
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) / prev_pivot;
      }
      rows[i][c] = 0;
    }
    prev_pivot = rows[r][c];
    ++r;
  }
  return r;
}

long long square_free_part(long long m) {
  if (m <= 0) throw std::invalid_argument("square_free_part: argument must be positive");
  long long s = 1;
  for (long long p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2 == 1) s *= p;
  }
  return s * m;
}

}  // namespace pstlab
