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

// Named graphs used across the test suites.

#include <utility>
#include <vector>

#include "pstlab/graph.hpp"

namespace pstlab::testing {

inline Graph from_edges(int n, std::vector<std::pair<Vertex, Vertex>> edges) { return Graph(n, edges); }

inline Graph path(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

inline Graph hypercube(int dim) {
  const int n = 1 << dim;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int x = 0; x < n; ++x)
    for (int k = 0; k < dim; ++k)
      if (x < (x ^ (1 << k))) e.emplace_back(x, x ^ (1 << k));
  return Graph(n, e);
}

// Triangle 1-2-3 with pendant 0 attached to 1.
inline Graph paw() { return from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}}); }

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, i + 5);
  }
  return Graph(10, e);
}

// Triangular prism: triangles 0-1-2 and 3-4-5 joined by i -- i+3.
inline Graph prism() {
  return from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline Graph disjoint_edges() { return from_edges(4, {{0, 1}, {2, 3}}); }

}  // namespace pstlab::testing
