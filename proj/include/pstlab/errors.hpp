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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pstlab {

/// Malformed graph input. `offset()` is the byte (graph6) or token (edge
/// list) position where parsing stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation was called on inputs that violate its hypotheses.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The numerics cannot support a trustworthy answer (ambiguous eigenvalue
/// clusters, ill-conditioned solves).
class AnalysisRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed result contradicts one of the structural results the library
/// relies on. Raised only when an internal cross-check fails.
class CriticalFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pstlab
