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

#include "pstlab/census.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

namespace pstlab {

namespace {

using Code = std::uint64_t;

// Upper-triangle bits in graph6 column order, first bit most significant.
Code code_under(const std::vector<std::uint8_t>& adj, int n, const std::vector<int>& order) {
  Code c = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) c = (c << 1) | adj[order[i] * n + order[j]];
  return c;
}

Code canonical_code(const std::vector<std::uint8_t>& adj, int n) {
  std::vector<int> deg(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) deg[u] += adj[u * n + v];
  std::vector<std::vector<int>> key(n);
  for (int u = 0; u < n; ++u) {
    key[u].push_back(deg[u]);
    std::vector<int> nd;
    for (int v = 0; v < n; ++v)
      if (adj[u * n + v]) nd.push_back(deg[v]);
    std::sort(nd.begin(), nd.end());
    key[u].insert(key[u].end(), nd.begin(), nd.end());
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });

  std::vector<std::pair<int, int>> cells;  // [begin, end) ranges of equal keys
  for (int i = 0; i < n;) {
    int j = i + 1;
    while (j < n && key[order[j]] == key[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  for (auto [b, e] : cells) std::sort(order.begin() + b, order.begin() + e);

  Code best = ~Code{0};
  // Odometer over the per-cell permutations.
  while (true) {
    best = std::min(best, code_under(adj, n, order));
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto [b, e] = cells[c];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (c == cells.size()) break;
  }
  return best;
}

Graph graph_from_code(Code code, int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> --bit) & 1U) edges.emplace_back(i, j);
  return Graph(n, edges);
}

std::vector<std::uint8_t> adjacency_of(Code code, int n) {
  std::vector<std::uint8_t> adj(n * n, 0);
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> --bit) & 1U) adj[i * n + j] = adj[j * n + i] = 1;
  return adj;
}

std::vector<Code> codes_of_order(int n) {
  if (n == 1) return {0};
  const int m = n - 1;
  std::vector<Code> smaller = codes_of_order(m);
  std::map<Code, bool> seen;
  for (Code c : smaller) {
    const auto base = adjacency_of(c, m);
    for (unsigned mask = 0; mask < (1U << m); ++mask) {
      std::vector<std::uint8_t> adj(n * n, 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) adj[i * n + j] = base[i * m + j];
      for (int i = 0; i < m; ++i)
        if (mask & (1U << i)) adj[i * n + m] = adj[m * n + i] = 1;
      seen.emplace(canonical_code(adj, n), true);
    }
  }
  std::vector<Code> out;
  out.reserve(seen.size());
  for (const auto& [code, unused] : seen) out.push_back(code);
  return out;
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
  if (n < 1 || n > kMaxCensusOrder) throw std::invalid_argument("census: order out of range");
  std::vector<Graph> out;
  for (Code c : codes_of_order(n)) out.push_back(graph_from_code(c, n));
  return out;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace pstlab
