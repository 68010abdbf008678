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

#include <vector>

#include "pstlab/graph.hpp"

namespace pstlab {

inline constexpr int kMaxCensusOrder = 8;

/// All graphs on n vertices up to isomorphism, n in [1, kMaxCensusOrder],
/// sorted by canonical code. Built by one-vertex augmentation with a
/// degree-refined canonical labelling.
std::vector<Graph> all_graphs(int n);

/// The connected members of all_graphs(n).
std::vector<Graph> connected_graphs(int n);

}  // namespace pstlab
