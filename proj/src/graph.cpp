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

#include "pstlab/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "pstlab/errors.hpp"

namespace pstlab {

namespace {

constexpr int kGraph6Bias = 63;
constexpr int kGraph6MaxShortOrder = 62;

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph::Graph(int n) : Graph(n, std::span<const std::pair<Vertex, Vertex>>{}) {}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges, std::vector<std::string> labels)
    : n_(n), adj_(static_cast<std::size_t>(n > 0 ? n : 0) * (n > 0 ? n : 0), 0), nbrs_(n > 0 ? n : 0) {
  if (n < 1) throw std::invalid_argument("Graph: vertex count must be positive");
  if (labels.empty()) labels = default_labels(n);
  if (static_cast<int>(labels.size()) != n) throw std::invalid_argument("Graph: label count does not match order");
  labels_ = std::move(labels);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + labels_[u]);
    if (adjacent(u, v)) continue;
    adj_[static_cast<std::size_t>(u) * n + v] = 1;
    adj_[static_cast<std::size_t>(v) * n + u] = 1;
    nbrs_[u].push_back(v);
    nbrs_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& list : nbrs_) std::sort(list.begin(), list.end());
}

std::optional<Vertex> Graph::find_label(std::string_view name) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == name) return i;
  return std::nullopt;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : nbrs_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Eigen::MatrixXd Graph::adjacency_matrix() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : nbrs_[u]) a(u, v) = 1.0;
  return a;
}

Graph Graph::induced_subgraph(const std::vector<Vertex>& keep) const {
  std::vector<int> index(n_, -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    index[keep[i]] = static_cast<int>(i);
    labels.push_back(labels_[keep[i]]);
  }
  std::vector<std::pair<Vertex, Vertex>> sub;
  for (auto [u, v] : edges())
    if (index[u] >= 0 && index[v] >= 0) sub.emplace_back(index[u], index[v]);
  return Graph(static_cast<int>(keep.size()), sub, std::move(labels));
}

Graph parse_graph6(std::string_view text) {
  text = strip(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (text.empty()) throw ParseError("graph6: empty input", base);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kGraph6Bias || c > 126) throw ParseError("graph6: byte outside [63,126]", base + i);
  }
  const int header = static_cast<unsigned char>(text[0]);
  if (header == 126) throw ParseError("graph6: orders above 62 are not supported", base);
  const int n = header - kGraph6Bias;
  if (n < 1) throw ParseError("graph6: graph must have at least one vertex", base);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() < expected) throw ParseError("graph6: truncated adjacency payload", base + text.size());
  if (text.size() > expected) throw ParseError("graph6: trailing bytes after payload", base + expected);

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - kGraph6Bias;
      if (byte & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  }
  for (; k % 6 != 0; ++k) {
    const int byte = static_cast<unsigned char>(text[1 + k / 6]) - kGraph6Bias;
    if (byte & (1 << (5 - k % 6))) throw ParseError("graph6: nonzero padding bits", base + 1 + k / 6);
  }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxShortOrder) throw std::invalid_argument("graph6: orders above 62 are not supported");
  std::string out(1, static_cast<char>(n + kGraph6Bias));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Bias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Bias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
    } else {
      const std::size_t start = pos;
      while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '#') ++pos;
      tokens.emplace_back(text.substr(start, pos - start));
    }
  }
  if (tokens.empty()) throw ParseError("edge list: no edges", 0);
  if (tokens.size() % 2 != 0) throw ParseError("edge list: odd number of vertex tokens", tokens.size() - 1);

  std::unordered_map<std::string, Vertex> index;
  std::vector<std::string> labels;
  auto vertex_of = [&](const std::string& name) {
    auto [it, inserted] = index.emplace(name, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(name);
    return it->second;
  };
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t t = 0; t < tokens.size(); t += 2) {
    if (tokens[t] == tokens[t + 1]) throw ParseError("edge list: self-loop on '" + tokens[t] + "'", t);
    const Vertex u = vertex_of(tokens[t]);
    const Vertex v = vertex_of(tokens[t + 1]);
    edges.emplace_back(u, v);
  }
  const int n = static_cast<int>(labels.size());
  return Graph(n, edges, std::move(labels));
}

Graph parse_graph(std::string_view text, InputFormat format) {
  switch (format) {
    case InputFormat::Graph6:
      return parse_graph6(text);
    case InputFormat::EdgeList:
      return parse_edge_list(text);
    case InputFormat::Auto:
      break;
  }
  const std::string_view body = strip(text);
  const bool single_token = !body.empty() && std::none_of(body.begin(), body.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c));
  });
  if (single_token && body.front() != '#') return parse_graph6(body);
  return parse_edge_list(text);
}

std::vector<Vertex> DistanceInfo::at_distance(Vertex u, int k) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if ((*this)(u, v) == k) out.push_back(v);
  return out;
}

DistanceInfo distances(const Graph& g) {
  const int n = g.order();
  DistanceInfo info;
  info.n = n;
  info.dist.assign(static_cast<std::size_t>(n) * n, kUnreachable);
  info.ecc.assign(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    int* row = &info.dist[static_cast<std::size_t>(s) * n];
    row[s] = 0;
    std::queue<Vertex> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      const Vertex x = frontier.front();
      frontier.pop();
      for (Vertex y : g.neighbors(x)) {
        if (row[y] == kUnreachable) {
          row[y] = row[x] + 1;
          frontier.push(y);
        }
      }
    }
  }
  info.diameter = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const int d = info(u, v);
      if (d == kUnreachable) {
        info.connected = false;
        info.ecc[u] = kUnreachable;
      } else {
        info.diameter = std::max(info.diameter, d);
        if (info.ecc[u] != kUnreachable) info.ecc[u] = std::max(info.ecc[u], d);
      }
    }
  }
  return info;
}

std::vector<BigInt> walk_counts_from(const Graph& g, int k, Vertex u) {
  if (k < 0) throw std::invalid_argument("walk_count: negative length");
  std::vector<BigInt> current(g.order(), 0);
  current[u] = 1;
  for (int step = 0; step < k; ++step) {
    std::vector<BigInt> next(g.order(), 0);
    for (Vertex x = 0; x < g.order(); ++x) {
      if (current[x] == 0) continue;
      for (Vertex y : g.neighbors(x)) next[y] += current[x];
    }
    current = std::move(next);
  }
  return current;
}

BigInt walk_count(const Graph& g, int k, Vertex u, Vertex v) { return walk_counts_from(g, k, u)[v]; }

std::optional<int> regular_degree(const Graph& g) {
  const int k = g.degree(0);
  for (Vertex u = 1; u < g.order(); ++u)
    if (g.degree(u) != k) return std::nullopt;
  return k;
}

bool is_connected(const Graph& g) { return distances(g).connected; }

}  // namespace pstlab
