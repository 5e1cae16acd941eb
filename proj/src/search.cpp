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

#include "inset/search.hpp"

#include <algorithm>
#include <exception>
#include <map>

#include "inset/delta.hpp"
#include "inset/oracle.hpp"
#include "inset/parallel.hpp"
#include "inset/rooted_tree.hpp"
#include "inset/sweep.hpp"

namespace inset {

namespace {

void require_candidates(const Tree& tree) {
  if (non_adjacent_pair_count(tree) == 0) {
    throw Error(ErrorCode::kNoCandidates,
                "a tree on " + std::to_string(tree.size()) +
                    " vertices has no non-adjacent pair");
  }
}

bool is_exception_distance(int d) {
  return std::find(kLeafExceptionDistances.begin(),
                   kLeafExceptionDistances.end(),
                   d) != kLeafExceptionDistances.end();
}

SearchReport reduce(const Tree& tree, std::span<const VertexPair> pairs,
                    std::span<const Count> scores, Strategy strategy) {
  if (pairs.empty()) {
    throw Error(ErrorCode::kNoCandidates, "no pair survived candidate selection");
  }
  SearchReport report;
  report.strategy = strategy;
  report.evaluated = static_cast<Count>(pairs.size());
  report.pruned = non_adjacent_pair_count(tree) - report.evaluated;
  report.best_delta = *std::max_element(scores.begin(), scores.end());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (scores[i] == report.best_delta) report.best_pairs.push_back(pairs[i]);
  }
  std::sort(report.best_pairs.begin(), report.best_pairs.end());
  report.best_ad_prime = ad_prime(report.best_delta, tree.size());
  return report;
}

PairScorer make_scorer(const Tree& tree, Strategy strategy,
                       const RootedTree& rooted, Count tree_wiener) {
  if (strategy == Strategy::kOracle) {
    return [&tree, tree_wiener](const VertexPair& p) {
      return delta_oracle(tree, tree_wiener, p.first, p.second);
    };
  }
  return [&rooted](const VertexPair& p) {
    return delta_direct(rooted.anatomize(p.first, p.second));
  };
}

// Max over every pair emitted by a sweep of some leaf-to-leaf path.
SearchReport sweep_search(const Tree& tree) {
  const std::vector<Vertex> leaf_set = leaves(tree);
  std::map<VertexPair, Count> scored;
  for (std::size_t a = 0; a < leaf_set.size(); ++a) {
    for (std::size_t b = a + 1; b < leaf_set.size(); ++b) {
      if (tree.adjacent(leaf_set[a], leaf_set[b])) continue;
      for (const SweepEntry& e :
           sweep_path(tree, leaf_set[a], leaf_set[b]).entries) {
        scored.emplace(normalized(e.record.x, e.record.y), e.record.d_prime);
      }
    }
  }
  std::vector<VertexPair> pairs;
  std::vector<Count> scores;
  for (const auto& [pair, d] : scored) {
    pairs.push_back(pair);
    scores.push_back(d);
  }
  return reduce(tree, pairs, scores, Strategy::kSweep);
}

}  // namespace

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kExhaustive: return "exhaustive";
    case Strategy::kPruned: return "pruned";
    case Strategy::kOracle: return "oracle";
    case Strategy::kSweep: return "sweep";
  }
  return "exhaustive";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (Strategy s : {Strategy::kExhaustive, Strategy::kPruned,
                     Strategy::kOracle, Strategy::kSweep}) {
    if (strategy_name(s) == name) return s;
  }
  return std::nullopt;
}

Count non_adjacent_pair_count(const Tree& tree) {
  const Count n = tree.size();
  return n * (n - 1) / 2 - (n - 1);
}

std::vector<VertexPair> candidate_pairs(const Tree& tree, Strategy strategy) {
  const RootedTree rooted(tree);
  std::vector<VertexPair> out;
  for (Vertex u = 0; u < tree.size(); ++u) {
    for (Vertex v = u + 1; v < tree.size(); ++v) {
      if (tree.adjacent(u, v)) continue;
      if (strategy == Strategy::kPruned &&
          (tree.degree(u) == 1 || tree.degree(v) == 1) &&
          !is_exception_distance(rooted.distance(u, v))) {
        continue;
      }
      out.push_back({u, v});
    }
  }
  return out;
}

std::vector<Count> score_pairs(std::span<const VertexPair> pairs,
                               const PairScorer& scorer, int threads) {
  const int nthreads = resolve_threads(threads);
  std::vector<Count> scores(pairs.size(), 0);
  const auto m = static_cast<std::int64_t>(pairs.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 32) num_threads(nthreads)
  for (std::int64_t i = 0; i < m; ++i) {
    try {
      scores[i] = scorer(pairs[i]);
    } catch (...) {
#pragma omp critical(inset_score_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return scores;
}

std::vector<Count> score_pairs_serial(std::span<const VertexPair> pairs,
                                      const PairScorer& scorer) {
  std::vector<Count> scores;
  scores.reserve(pairs.size());
  for (const auto& p : pairs) scores.push_back(scorer(p));
  return scores;
}

SearchReport best_edge(const Tree& tree, Strategy strategy, int threads) {
  require_candidates(tree);
  if (strategy == Strategy::kSweep) return sweep_search(tree);
  const std::vector<VertexPair> pairs = candidate_pairs(tree, strategy);
  const RootedTree rooted(tree);
  const Count wiener =
      strategy == Strategy::kOracle ? wiener_tree_linear(tree) : 0;
  const std::vector<Count> scores =
      score_pairs(pairs, make_scorer(tree, strategy, rooted, wiener), threads);
  return reduce(tree, pairs, scores, strategy);
}

SearchReport best_edge_serial(const Tree& tree, Strategy strategy) {
  require_candidates(tree);
  if (strategy == Strategy::kSweep) return sweep_search(tree);
  const std::vector<VertexPair> pairs = candidate_pairs(tree, strategy);
  const RootedTree rooted(tree);
  const Count wiener =
      strategy == Strategy::kOracle ? wiener_tree_linear(tree) : 0;
  const std::vector<Count> scores =
      score_pairs_serial(pairs, make_scorer(tree, strategy, rooted, wiener));
  return reduce(tree, pairs, scores, strategy);
}

Rational pruning_ratio(const Tree& tree) {
  require_candidates(tree);
  const Count total = non_adjacent_pair_count(tree);
  const Count kept =
      static_cast<Count>(candidate_pairs(tree, Strategy::kPruned).size());
  return Rational(total - kept, total);
}

}  // namespace inset
