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


#include "doctest.h"
#include "pstlab/exact.hpp"

using namespace pstlab;

namespace {

RationalPolynomial poly(std::initializer_list<long long> c) {
  RationalPolynomial p;
  for (long long x : c) p.emplace_back(x);
  return p;
}

}  // namespace

TEST_CASE("rational formatting") {
  CHECK(to_string(Rational(1, 6)) == "1/6");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(to_double(Rational(1, 8)) == doctest::Approx(0.125));
}

TEST_CASE("polynomial division and divisibility") {
  // x^3 - 2x = x (x^2 - 2)
  const auto p = poly({0, -2, 0, 1});
  const auto d = divide(p, poly({-2, 0, 1}));
  CHECK(d.quotient == poly({0, 1}));
  CHECK(d.remainder.empty());
  CHECK(divides(poly({0, 1}), p));
  CHECK_FALSE(divides(poly({-1, 1}), p));
  const auto r = divide(poly({1, 0, 1}), poly({-1, 1}));
  CHECK(r.quotient == poly({1, 1}));
  CHECK(r.remainder == poly({2}));
  CHECK_THROWS(divide(p, RationalPolynomial{}));
}

TEST_CASE("multiply, trim and degree") {
  auto p = multiply(poly({-1, 1}), poly({1, 1}));
  CHECK(p == poly({-1, 0, 1}));
  RationalPolynomial z = poly({0, 0, 0});
  trim(z);
  CHECK(z.empty());
  CHECK(degree(p) == 2);
}

TEST_CASE("evaluation") {
  CHECK(evaluate(poly({-1, 0, 1}), Rational(3, 2)) == Rational(5, 4));
  const IntPolynomial q = {BigInt(0), BigInt(-4), BigInt(0), BigInt(1)};
  CHECK(evaluate(q, BigInt(2)) == 0);
  CHECK(evaluate(q, BigInt(-3)) == -15);
}

TEST_CASE("interpolation reproduces the sampled polynomial") {
  const std::vector<Rational> nodes = {Rational(2), Rational(0), Rational(-2)};
  const std::vector<Rational> values = {Rational(1), Rational(-1), Rational(1)};
  // p(2) = 1, p(0) = -1, p(-2) = 1  =>  p = x^2/2 - 1
  CHECK(interpolate(nodes, values) == RationalPolynomial{Rational(-1), Rational(0), Rational(1, 2)});

  const auto target = poly({3, -1, 0, 2});
  std::vector<Rational> xs, ys;
  for (int i = -2; i <= 1; ++i) {
    xs.emplace_back(i, 3);
    ys.push_back(evaluate(target, xs.back()));
  }
  CHECK(interpolate(xs, ys) == target);
}

TEST_CASE("fraction-free rank") {
  using Row = std::vector<BigInt>;
  CHECK(rank({Row{1, 2}, Row{2, 4}}) == 1);
  CHECK(rank({Row{0, 1, 0}, Row{0, 0, 1}, Row{0, 1, 1}}) == 2);
  CHECK(rank({Row{0, 0}, Row{0, 0}}) == 0);
  CHECK(rank({Row{1, 0, 0}, Row{0, 0, 1}, Row{0, 1, 0}}) == 3);
  CHECK(rank({Row{0, 2, 4}, Row{1, 1, 1}, Row{1, 2, 3}}) == 2);
  CHECK(rank({}) == 0);
}

TEST_CASE("square-free part") {
  CHECK(square_free_part(8) == 2);
  CHECK(square_free_part(20) == 5);
  CHECK(square_free_part(36) == 1);
  CHECK(square_free_part(30) == 30);
}

TEST_CASE("rational matrices") {
  RationalMatrix m(2, 2);
  m(0, 1) = Rational(1, 2);
  m(1, 0) = 3;
  const auto id = RationalMatrix::identity(2);
  CHECK(m * id == m);
  CHECK((m + id)(0, 0) == 1);
  CHECK((m - m) == RationalMatrix(2, 2));
  CHECK(m.transpose()(1, 0) == Rational(1, 2));
  CHECK((m * m)(0, 0) == Rational(3, 2));
  CHECK(id.trace() == 2);
  auto s = m;
  s *= Rational(2);
  CHECK(s.column(0) == std::vector<Rational>{Rational(0), Rational(6)});
}
