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

// Parallel kernels against their serial references.

#include "inset/parallel.hpp"

#include <cstdlib>

#include "gtest/gtest.h"
#include "inset/bounds.hpp"
#include "inset/delta.hpp"
#include "inset/randgen.hpp"
#include "inset/search.hpp"
#include "test_util.hpp"

namespace inset {
namespace {

TEST(ResolveThreadsTest, ExplicitThenEnvironment) {
  EXPECT_EQ(resolve_threads(3), 3);
  ::setenv(kThreadsEnv, "5", 1);
  EXPECT_EQ(resolve_threads(0), 5);
  ::setenv(kThreadsEnv, "junk", 1);
  EXPECT_GE(resolve_threads(0), 1);
  ::unsetenv(kThreadsEnv);
  EXPECT_GE(resolve_threads(0), 1);
}

TEST(ScorePairsTest, MatchesSerial) {
  const Tree t = random_labeled_tree(70, 21);
  const auto pairs = candidate_pairs(t, Strategy::kExhaustive);
  const PairScorer scorer = [&t](const VertexPair& p) {
    return delta_direct(anatomize(t, p.first, p.second));
  };
  const std::vector<Count> serial = score_pairs_serial(pairs, scorer);
  for (int threads : {1, 2, 4, 7}) {
    EXPECT_EQ(score_pairs(pairs, scorer, threads), serial) << threads;
  }
}

TEST(ScorePairsTest, PropagatesErrors) {
  const std::vector<VertexPair> pairs{{0, 2}, {0, 1}};
  const Tree t = ::inset::testing::path_tree(3);
  const PairScorer scorer = [&t](const VertexPair& p) {
    return delta_direct(anatomize(t, p.first, p.second));
  };
  EXPECT_INSET_ERROR(score_pairs(pairs, scorer, 2), ErrorCode::kAdjacentPair);
}

TEST(BestEdgeParallelTest, IdenticalAcrossThreadCounts) {
  const Corpus corpus(4, 50, 606, 25);
  for (std::size_t i = 0; i < corpus.count(); ++i) {
    const Tree t = corpus.tree(i);
    for (Strategy s : {Strategy::kExhaustive, Strategy::kPruned, Strategy::kOracle}) {
      const SearchReport serial = best_edge_serial(t, s);
      for (int threads : {1, 3, 8}) {
        ASSERT_EQ(best_edge(t, s, threads), serial);
      }
    }
  }
}

TEST(ScanAllTreesParallelTest, IdenticalToSerial) {
  for (Vertex n : {4, 5, 6, 7}) {
    const ExhaustiveScan serial = scan_all_trees_serial(n);
    for (int threads : {1, 2, 5}) {
      EXPECT_EQ(scan_all_trees(n, threads), serial) << n << " " << threads;
    }
  }
}

}  // namespace
}  // namespace inset
