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

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "pstlab/census.hpp"
#include "pstlab/errors.hpp"
#include "pstlab/graph.hpp"

using namespace pstlab;
namespace tg = pstlab::testing;

TEST_CASE("graph6 decodes the standard examples") {
  const Graph k4 = parse_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.edge_count() == 6);

  const Graph k1 = parse_graph6("@");
  CHECK(k1.order() == 1);
  CHECK(k1.edge_count() == 0);

  const Graph c4 = parse_graph6("Cl");
  CHECK(c4.edge_count() == 4);
  CHECK(c4.adjacent(0, 1));
  CHECK(c4.adjacent(1, 2));
  CHECK(c4.adjacent(2, 3));
  CHECK(c4.adjacent(0, 3));
  CHECK_FALSE(c4.adjacent(0, 2));
  CHECK_FALSE(c4.adjacent(1, 3));
}

TEST_CASE("graph6 encoder agrees with the format-note oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) edges.emplace_back(i, j);
    const Graph g(n, edges);
    const std::string s = encode_graph6(g);
    CHECK(s == oracle::graph6_encode(n, oracle::adjacency(g)));
    CHECK(encode_graph6(parse_graph6(s)) == s);
  }
}

TEST_CASE("graph6 accepts a trailing newline and the optional header") {
  CHECK(parse_graph6("Cl\n").edge_count() == 4);
  CHECK(parse_graph6(">>graph6<<C~").edge_count() == 6);
}

TEST_CASE("graph6 rejects malformed input with a byte offset") {
  auto offset_of = [](const char* text) -> long {
    try {
      parse_graph6(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("C") == 1);         // truncated: one payload byte missing
  CHECK(offset_of("C~~") == 2);       // trailing garbage
  CHECK(offset_of("C\x20") == 1);     // byte below 63
  CHECK(offset_of("~") == 0);         // long header, n > 62 unsupported
  CHECK(offset_of("?") == 0);         // zero vertices
  CHECK(offset_of("B`") == 1);        // n = 3 uses 3 bits, low padding bit set
}

TEST_CASE("graph6 refuses to encode more than 62 vertices") {
  CHECK_THROWS_AS(encode_graph6(Graph(63)), std::invalid_argument);
  CHECK(encode_graph6(Graph(62)).size() == 1 + (62 * 61 / 2 + 5) / 6);
}

TEST_CASE("edge lists number vertices by first appearance") {
  const Graph p3 = parse_edge_list("0 1\n1 2");
  CHECK(p3.order() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.adjacent(0, 1));
  CHECK(p3.adjacent(1, 2));

  const Graph k2 = parse_edge_list("a b\nb a");
  CHECK(k2.order() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(k2.label(0) == "a");
  CHECK(k2.find_label("b") == 1);

  const Graph named = parse_edge_list("# comment line\nx y  # trailing\ny z\n");
  CHECK(named.labels() == std::vector<std::string>{"x", "y", "z"});

  CHECK_THROWS_AS(parse_edge_list("0 0"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1 2"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("   \n"), ParseError);
}

TEST_CASE("format auto-detection") {
  CHECK(parse_graph("C~\n").edge_count() == 6);
  CHECK(parse_graph("0 1\n").edge_count() == 1);
  CHECK_THROWS_AS(parse_graph("C~", InputFormat::EdgeList), ParseError);
  CHECK(parse_graph("0 1", InputFormat::EdgeList).order() == 2);
}

TEST_CASE("distances on small graphs") {
  const DistanceInfo p3 = distances(tg::path(3));
  CHECK(p3(0, 2) == 2);
  CHECK(p3.diameter == 2);
  CHECK(p3.ecc == std::vector<int>{2, 1, 2});
  CHECK(p3.connected);

  const DistanceInfo q3 = distances(tg::hypercube(3));
  CHECK(q3.diameter == 3);
  for (int e : q3.ecc) CHECK(e == 3);

  const DistanceInfo split = distances(tg::disjoint_edges());
  CHECK_FALSE(split.connected);
  CHECK(split(0, 2) == kUnreachable);
  CHECK(split.ecc[0] == kUnreachable);
  CHECK(split.diameter == 1);
}

TEST_CASE("BFS distances equal the first nonzero power of A") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const DistanceInfo info = distances(g);
      const auto ref = oracle::distances_by_powers(g);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
          const int d = info(u, v);
          CHECK(d == (ref[u][v] < 0 ? kUnreachable : ref[u][v]));
          CHECK(d == info(v, u));
        }
      if (info.connected)
        for (Vertex u = 0; u < n; ++u)
          for (Vertex v = 0; v < n; ++v)
            for (Vertex w = 0; w < n; ++w) CHECK(info(u, w) <= info(u, v) + info(v, w));
    }
  }
}

TEST_CASE("walk counts") {
  CHECK(walk_count(tg::petersen(), 0, 3, 3) == 1);
  CHECK(walk_count(tg::cycle(4), 2, 0, 2) == 2);
  CHECK(walk_count(tg::complete(2), 3, 0, 1) == 1);
  CHECK(walk_count(tg::hypercube(3), 3, 0, 7) == 6);
  // closed walks in K5: ((n-1)^k + (n-1)(-1)^k) / n
  const BigInt four40 = boost::multiprecision::pow(BigInt(4), 40);
  CHECK(walk_count(tg::complete(5), 40, 0, 0) == (four40 + 4) / 5);
}

TEST_CASE("walk counts match explicit enumeration and are symmetric") {
  for (const Graph& g : {tg::paw(), tg::petersen(), tg::prism(), tg::path(5)}) {
    for (int k = 0; k <= 5; ++k)
      for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v) {
          CHECK(walk_count(g, k, u, v) == oracle::enumerate_walks(g, k, u, v));
          CHECK(walk_count(g, k, u, v) == walk_count(g, k, v, u));
        }
  }
}

TEST_CASE("regularity and connectivity") {
  CHECK(regular_degree(tg::hypercube(3)) == 3);
  CHECK_FALSE(regular_degree(tg::path(3)).has_value());
  CHECK(regular_degree(tg::complete(4)) == 3);
  CHECK(is_connected(tg::petersen()));
  CHECK_FALSE(is_connected(tg::disjoint_edges()));
}

TEST_CASE("graph construction rejects loops and bad endpoints") {
  std::vector<std::pair<Vertex, Vertex>> loop = {{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
  std::vector<std::pair<Vertex, Vertex>> bad = {{0, 3}};
  CHECK_THROWS_AS(Graph(3, bad), std::out_of_range);
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
}

TEST_CASE("census sizes match the known graph counts") {
  const std::vector<std::size_t> all = {1, 2, 4, 11, 34, 156, 1044};
  const std::vector<std::size_t> connected = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CHECK(all_graphs(n).size() == all[n - 1]);
    CHECK(connected_graphs(n).size() == connected[n - 1]);
  }
}
