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

#ifndef INSET_SEARCH_HPP_
#define INSET_SEARCH_HPP_

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "inset/tree.hpp"

namespace inset {

enum class Strategy {
  kExhaustive,  // every non-adjacent pair, delta_direct
  kPruned,      // leaf pruning, delta_direct
  kOracle,      // every non-adjacent pair, all-pairs BFS
  kSweep,       // leaf-to-leaf path sweeps only; heuristic, may miss the optimum
};

std::string_view strategy_name(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

struct SearchReport {
  // Normalized (u < v), sorted lexicographically, never empty.
  std::vector<VertexPair> best_pairs;
  Count best_delta = 0;
  Rational best_ad_prime;
  // evaluated + pruned == number of non-adjacent pairs.
  Count evaluated = 0;
  Count pruned = 0;
  Strategy strategy = Strategy::kExhaustive;

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

// A leaf-involving pair is only kept at these tree distances.
inline constexpr std::array<int, 4> kLeafExceptionDistances = {2, 3, 4, 6};

// C(n, 2) - (n - 1).
Count non_adjacent_pair_count(const Tree& tree);

// Exhaustive/oracle: every non-adjacent pair. Pruned: drops (u, v) when u or
// v is a leaf and d_T(u, v) is not in kLeafExceptionDistances. Sweep: the
// exhaustive set (the sweep strategy picks its own pairs). Sorted, normalized.
std::vector<VertexPair> candidate_pairs(const Tree& tree, Strategy strategy);

using PairScorer = std::function<Count(const VertexPair&)>;

// Score kernel: OpenMP parallel for over `pairs`, one slot per pair, so the
// result never depends on the thread count. `threads` <= 0 resolves through
// resolve_threads().
std::vector<Count> score_pairs(std::span<const VertexPair> pairs,
                               const PairScorer& scorer, int threads = 0);
// Serial reference for score_pairs.
std::vector<Count> score_pairs_serial(std::span<const VertexPair> pairs,
                                      const PairScorer& scorer);

// All argmax pairs of D'. Deterministic regardless of thread count.
// Throws Error{NoCandidates} when the tree has no non-adjacent pair.
SearchReport best_edge(const Tree& tree, Strategy strategy, int threads = 0);
// Single-threaded reference implementation.
SearchReport best_edge_serial(const Tree& tree, Strategy strategy);

// pruned / total non-adjacent pairs under the pruned strategy.
// Throws Error{NoCandidates}.
Rational pruning_ratio(const Tree& tree);

}  // namespace inset

#endif  // INSET_SEARCH_HPP_
