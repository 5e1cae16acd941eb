// Copyright 2026 The Inset Authors
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

#ifndef INSET_TYPES_HPP_
#define INSET_TYPES_HPP_

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace inset {

// Vertex ids are 0-based and dense: a graph on n vertices uses 0..n-1.
using Vertex = std::int32_t;

// Distance sums, savings and subtree weights. Wiener(P_n) ~ n^3/6, so 64 bits
// covers every tree this library can hold in memory.
using Count = std::int64_t;

// Unordered vertex pair, stored normalized (first < second) wherever a
// function says so.
struct VertexPair {
  Vertex first = 0;
  Vertex second = 0;

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

inline VertexPair normalized(Vertex u, Vertex v) {
  return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

enum class ErrorCode {
  kMalformedLine,
  kNotATree,
  kDuplicateEdge,
  kIdOutOfRange,
  kSameVertex,
  kAdjacentPair,
  kDisconnected,
  kEmptySet,
  kKTooSmall,
  kCycleTooShort,
  kNoCandidates,
  kOutOfDomain,
  kMismatch,
};

// Stable external name, e.g. "NotATree". Used in CLI error payloads.
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

// Exact non-negative-denominator rational, always stored in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(Count numerator, Count denominator);

  Count numerator() const noexcept { return num_; }
  Count denominator() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  // "p/q"; integers are still written with a denominator ("0/1", "3/1").
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  Count num_ = 0;
  Count den_ = 1;
};

}  // namespace inset

#endif  // INSET_TYPES_HPP_
