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


#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "pstlab/census.hpp"
#include "pstlab/cospectrality.hpp"
#include "pstlab/errors.hpp"

using namespace pstlab;
namespace tg = pstlab::testing;

using Indices = std::vector<std::size_t>;

TEST_CASE("eigenvalue supports and dual degrees") {
  const SpectralGraph p3(tg::path(3));
  CHECK(eigenvalue_support(p3, 0).support == Indices{0, 1, 2});
  CHECK(eigenvalue_support(p3, 0).dual_degree() == 2);
  CHECK(eigenvalue_support(p3, 1).support == Indices{0, 2});
  CHECK(eigenvalue_support(p3, 1).dual_degree() == 1);
  const SpectralGraph k2(tg::complete(2));
  CHECK(eigenvalue_support(k2, 0).support == Indices{0, 1});
}

TEST_CASE("spectral extremality") {
  const SpectralGraph p3(tg::path(3));
  CHECK(is_spectrally_extremal(p3, 0));
  const SpectralGraph paw(tg::paw());
  // the -1 eigenvector (0,0,1,-1) vanishes on the pendant and the hub
  CHECK(eigenvalue_support(paw, 0).dual_degree() == 2);
  CHECK(is_spectrally_extremal(paw, 0));
  CHECK(eigenvalue_support(paw, 2).dual_degree() == 3);
  CHECK(paw.distances().ecc[2] == 2);
  CHECK_FALSE(is_spectrally_extremal(paw, 2));
  CHECK_FALSE(is_spectrally_extremal(paw, 1));
  for (int n = 2; n <= 6; ++n) {
    const SpectralGraph kn(tg::complete(n));
    for (Vertex u = 0; u < n; ++u) CHECK(is_spectrally_extremal(kn, u));
  }
}

TEST_CASE("cospectral vertices") {
  const SpectralGraph p3(tg::path(3));
  CHECK(are_cospectral(p3, 0, 2));
  CHECK_FALSE(are_cospectral(p3, 0, 1));
  CHECK(are_cospectral(p3, 1, 1));
}

TEST_CASE("strongly cospectral vertices and their sign patterns") {
  const SpectralGraph p3(tg::path(3));
  const auto sp = are_strongly_cospectral(p3, 0, 2);
  REQUIRE(sp.has_value());
  CHECK(sp->sigmas == std::vector<int>{1, -1, 1});

  const SpectralGraph q3(tg::hypercube(3));
  const auto cube = are_strongly_cospectral(q3, 0, 7);
  REQUIRE(cube.has_value());
  CHECK(cube->sigmas == std::vector<int>{1, -1, 1, -1});

  const SpectralGraph star(tg::star(3));
  CHECK(are_cospectral(star, 1, 2));
  CHECK_FALSE(are_strongly_cospectral(star, 1, 2).has_value());
}

TEST_CASE("transfer polynomials") {
  const SpectralGraph k2(tg::complete(2));
  const auto x = transfer_polynomial(k2, 0, 1);
  REQUIRE(x.has_value());
  REQUIRE(x->is_exact());
  CHECK(x->exact_coefficients == RationalPolynomial{Rational(0), Rational(1)});
  CHECK(x->degree == 1);

  const SpectralGraph p3(tg::path(3));
  const auto p = transfer_polynomial(p3, 0, 2);
  REQUIRE(p.has_value());
  CHECK(p->degree == 2);
  REQUIRE(p->coefficients.size() == 3);
  CHECK(p->coefficients[0] == doctest::Approx(-1.0));
  CHECK(p->coefficients[1] == doctest::Approx(0.0));
  CHECK(p->coefficients[2] == doctest::Approx(1.0));
  CHECK(p->exact_coefficients == RationalPolynomial{Rational(-1), Rational(0), Rational(1)});
  CHECK(p->values[0] == doctest::Approx(1.0));
  CHECK(p->values[1] == doctest::Approx(-1.0));

  const SpectralGraph star(tg::star(3));
  CHECK_FALSE(transfer_polynomial(star, 1, 2).has_value());
}

TEST_CASE("walk module polynomial for an indicator target") {
  const SpectralGraph q3(tg::hypercube(3));
  // indicator of the vertices at distance 2 from 0
  std::vector<int> target(8, 0);
  for (Vertex w : {3, 5, 6}) target[w] = 1;
  const auto p = walk_module_polynomial(q3, 0, target);
  REQUIRE(p.has_value());
  CHECK(p->degree == 2);
  // (A^2 - 3I)/2 e_0
  CHECK(p->exact_coefficients == RationalPolynomial{Rational(-3, 2), Rational(0), Rational(1, 2)});

  const SpectralGraph paw(tg::paw());
  std::vector<int> lone(4, 0);
  lone[2] = 1;  // a single triangle vertex is not reachable by polynomials in A from e_0
  CHECK_FALSE(walk_module_polynomial(paw, 0, lone).has_value());
}

TEST_CASE("uniqueness at the distance of a strongly cospectral pair") {
  const SpectralGraph p3(tg::path(3));
  CHECK(unique_at_distance_check(p3, 0, 2).holds);
  const SpectralGraph q3(tg::hypercube(3));
  CHECK(unique_at_distance_check(q3, 0, 7).holds);
  const SpectralGraph paw(tg::paw());
  CHECK_THROWS_AS(unique_at_distance_check(paw, 2, 0), PreconditionError);
  const SpectralGraph petersen(tg::petersen());
  CHECK_THROWS_AS(unique_at_distance_check(petersen, 0, 2), PreconditionError);
}

TEST_CASE("walk-count maximality") {
  const SpectralGraph q3(tg::hypercube(3));
  const auto scan = walk_maximality_scan(q3, 0, 7);
  CHECK(scan.violations.empty());
  CHECK(scan.distance == 3);
  CHECK(scan.reference_walks == 6);
  CHECK(scan.ties.size() == 8);
  for (const auto& [z, w] : scan.ties) CHECK((z ^ w) == 7);

  const SpectralGraph k2(tg::complete(2));
  CHECK(walk_maximality_scan(k2, 0, 1).violations.empty());

  const SpectralGraph c4(tg::cycle(4));
  const auto square = walk_maximality_scan(c4, 0, 2);
  CHECK(square.violations.empty());
  CHECK(square.ties.size() == 4);
  CHECK(square.reference_walks == 2);

  const SpectralGraph paw(tg::paw());
  CHECK_THROWS_AS(walk_maximality_scan(paw, 0, 2), PreconditionError);
}

TEST_CASE("transfer polynomial is the minimal polynomial of u once v is deleted") {
  const SpectralGraph p3(tg::path(3));
  CHECK(minimal_poly_in_deleted_graph(p3, 0, 2, *transfer_polynomial(p3, 0, 2)));
  const SpectralGraph k2(tg::complete(2));
  CHECK(minimal_poly_in_deleted_graph(k2, 0, 1, *transfer_polynomial(k2, 0, 1)));
  const SpectralGraph q3(tg::hypercube(3));
  const auto p = transfer_polynomial(q3, 0, 7);
  REQUIRE(p.has_value());
  CHECK(p->degree == 3);
  CHECK(minimal_poly_in_deleted_graph(q3, 0, 7, *p));
  // a polynomial with the wrong roots does not annihilate e_u
  auto wrong = *p;
  wrong.exact_coefficients = {Rational(0), Rational(1)};
  wrong.coefficients = {0.0, 1.0};
  wrong.degree = 1;
  CHECK_FALSE(minimal_poly_in_deleted_graph(q3, 0, 7, wrong));
}

TEST_CASE("sign patterns never repeat a sign three times") {
  CHECK(no_three_consecutive_equal({1, -1, 1, -1}));
  CHECK(no_three_consecutive_equal({1, 1, -1}));
  CHECK_FALSE(no_three_consecutive_equal({1, 1, 1}));
  const SpectralGraph q3(tg::hypercube(3));
  CHECK(sign_pattern_sanity(q3, *are_strongly_cospectral(q3, 0, 7)));
  SignPattern fake{0, 7, {0, 1, 2, 3}, {1, 1, 1, -1}};
  CHECK_FALSE(sign_pattern_sanity(q3, fake));
  const SpectralGraph star(tg::star(3));
  SignPattern leaves{1, 2, {0, 1, 2}, {1, -1, 1}};
  CHECK_THROWS_AS(sign_pattern_sanity(star, leaves), PreconditionError);
}

TEST_CASE("census: cospectrality relations on every pair") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : connected_graphs(n)) {
      const SpectralGraph sg(g);
      const auto& dist = sg.distances();
      for (Vertex u = 0; u < n; ++u) {
        const auto support = eigenvalue_support(sg, u);
        CHECK(dist.ecc[u] <= support.dual_degree());
        REQUIRE(!support.support.empty());
        CHECK(support.support.front() == 0);
        for (Vertex v = u; v < n; ++v) {
          const bool cospectral = are_cospectral(sg, u, v);
          bool walks_equal = true;
          for (int k = 1; k <= 2 * n && walks_equal; ++k)
            walks_equal = walk_count(g, k, u, u) == walk_count(g, k, v, v);
          CHECK_MESSAGE(cospectral == walks_equal, encode_graph6(g) << " " << u << "," << v);

          const auto strong = are_strongly_cospectral(sg, u, v);
          if (strong) {
            CHECK(cospectral);
            CHECK(strong->sigmas.front() == 1);
          }
          if (n > 6) continue;
          const bool transfer = transfer_polynomial(sg, u, v).has_value();
          CHECK_MESSAGE(strong.has_value() == (cospectral && transfer), encode_graph6(g) << " " << u << "," << v);
        }
      }
    }
}

TEST_CASE("census: consequences for extremal strongly cospectral pairs") {
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : connected_graphs(n)) {
      const SpectralGraph sg(g);
      for (Vertex u = 0; u < n; ++u) {
        if (!is_spectrally_extremal(sg, u)) continue;
        for (Vertex v = 0; v < n; ++v) {
          if (v == u) continue;
          const auto sp = are_strongly_cospectral(sg, u, v);
          if (!sp) continue;
          const std::string tag = encode_graph6(g) + " " + std::to_string(u) + "," + std::to_string(v);
          CHECK_MESSAGE(unique_at_distance_check(sg, u, v).holds, tag);
          CHECK_MESSAGE(walk_maximality_scan(sg, u, v).violations.empty(), tag);
          const auto p = transfer_polynomial(sg, u, v);
          REQUIRE(p.has_value());
          CHECK_MESSAGE(minimal_poly_in_deleted_graph(sg, u, v, *p), tag);
          if (is_spectrally_extremal(sg, v)) CHECK_MESSAGE(sign_pattern_sanity(sg, *sp), tag);
        }
      }
    }
}
