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

// Exact integer/rational arithmetic: dense rational matrices and
// polynomials with ascending coefficient vectors (c[0] is the constant).

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pstlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& q);
std::string to_string(const Rational& q);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalMatrix& operator*=(const Rational& s);

  bool operator==(const RationalMatrix& rhs) const = default;

  Rational trace() const;
  RationalMatrix transpose() const;
  std::vector<Rational> column(std::size_t j) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using IntPolynomial = std::vector<BigInt>;
using RationalPolynomial = std::vector<Rational>;

/// Drops trailing zero coefficients; the zero polynomial becomes empty.
void trim(RationalPolynomial& p);
int degree(const RationalPolynomial& p);

RationalPolynomial to_rational(const IntPolynomial& p);
RationalPolynomial multiply(const RationalPolynomial& a, const RationalPolynomial& b);

struct PolynomialDivision {
  RationalPolynomial quotient;
  RationalPolynomial remainder;
};
/// Long division over Q. `divisor` must be nonzero.
PolynomialDivision divide(const RationalPolynomial& dividend, const RationalPolynomial& divisor);
bool divides(const RationalPolynomial& divisor, const RationalPolynomial& dividend);

Rational evaluate(const RationalPolynomial& p, const Rational& x);
BigInt evaluate(const IntPolynomial& p, const BigInt& x);

/// Coefficients of the unique polynomial of degree < nodes.size() with
/// p(nodes[i]) = values[i]. Nodes must be distinct.
RationalPolynomial interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values);

/// Rank of a list of integer vectors (fraction-free elimination).
std::size_t rank(std::vector<std::vector<BigInt>> rows);

/// Largest square-free divisor s of m > 0 with m = s * k^2.
long long square_free_part(long long m);

}  // namespace pstlab
