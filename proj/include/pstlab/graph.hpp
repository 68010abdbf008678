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

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pstlab/exact.hpp"

namespace pstlab {

using Vertex = int;

/// Simple undirected graph on vertices 0..n-1 with optional external labels.
/// Immutable after construction.
class Graph {
 public:
  /// Edgeless graph on n >= 1 vertices labelled "0".."n-1".
  explicit Graph(int n);
  /// Duplicate edges are collapsed; self-loops and out-of-range endpoints throw.
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges, std::vector<std::string> labels = {});

  int order() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  const std::vector<Vertex>& neighbors(Vertex u) const { return nbrs_[u]; }
  int degree(Vertex u) const { return static_cast<int>(nbrs_[u].size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Vertex u) const { return labels_[u]; }
  std::optional<Vertex> find_label(std::string_view name) const;

  std::vector<std::pair<Vertex, Vertex>> edges() const;
  Eigen::MatrixXd adjacency_matrix() const;

  /// Subgraph induced on `keep`, relabelled 0..k-1 in the given order;
  /// original labels are carried over.
  Graph induced_subgraph(const std::vector<Vertex>& keep) const;

 private:
  int n_;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<std::string> labels_;
};

/// graph6, single-byte header only (n <= 62). Padding bits must be zero.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// Whitespace separated vertex-name pairs; `#` starts a comment. Vertices are
/// numbered by first appearance.
Graph parse_edge_list(std::string_view text);

enum class InputFormat { Auto, Graph6, EdgeList };

/// Auto picks graph6 when the text is a single token of printable graph6
/// bytes, and the edge-list reader otherwise.
Graph parse_graph(std::string_view text, InputFormat format = InputFormat::Auto);

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

struct DistanceInfo {
  int n = 0;
  std::vector<int> dist;  // row-major n*n, kUnreachable across components
  std::vector<int> ecc;   // kUnreachable for every vertex of a disconnected graph
  int diameter = 0;       // largest finite distance
  bool connected = true;

  int operator()(Vertex u, Vertex v) const { return dist[static_cast<std::size_t>(u) * n + v]; }
  std::vector<Vertex> at_distance(Vertex u, int k) const;
};

DistanceInfo distances(const Graph& g);

/// (A^k)_{u,v} in exact integer arithmetic.
BigInt walk_count(const Graph& g, int k, Vertex u, Vertex v);
/// Column u of A^k.
std::vector<BigInt> walk_counts_from(const Graph& g, int k, Vertex u);

std::optional<int> regular_degree(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace pstlab
