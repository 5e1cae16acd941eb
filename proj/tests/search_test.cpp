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

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "inset/delta.hpp"
#include "inset/oracle.hpp"
#include "inset/randgen.hpp"
#include "test_util.hpp"

namespace inset {
namespace {

using ::inset::testing::fixture_tree;
using ::inset::testing::oracle_values;
using ::inset::testing::path_tree;
using ::inset::testing::star_tree;
using ::testing::Contains;
using ::testing::Not;

std::vector<VertexPair> fixture_best_pairs(const std::string& name) {
  std::vector<VertexPair> out;
  for (const auto& p : oracle_values().at("best").at(name).at("best_pairs")) {
    out.push_back({p[0], p[1]});
  }
  return out;
}

bool is_star(const Tree& t) {
  for (Vertex v = 0; v < t.size(); ++v) {
    if (t.degree(v) == t.size() - 1) return true;
  }
  return false;
}

TEST(CandidatePairsTest, PathSeven) {
  EXPECT_EQ(candidate_pairs(path_tree(7), Strategy::kExhaustive).size(), 15u);
  const auto pruned = candidate_pairs(path_tree(7), Strategy::kPruned);
  EXPECT_EQ(pruned.size(), 13u);
  EXPECT_THAT(pruned, Not(Contains(VertexPair{0, 5})));
  EXPECT_THAT(pruned, Not(Contains(VertexPair{1, 6})));
  EXPECT_THAT(pruned, Contains(VertexPair{0, 6}));
}

TEST(CandidatePairsTest, StarKeepsEveryLeafPair) {
  EXPECT_EQ(candidate_pairs(star_tree(5), Strategy::kPruned).size(), 6u);
  EXPECT_TRUE(candidate_pairs(path_tree(2), Strategy::kPruned).empty());
}

TEST(BestEdgeTest, OracleFixtures) {
  for (const std::string name : {"p6", "p7", "s5"}) {
    const Tree tree = fixture_tree(name);
    const SearchReport r = best_edge(tree, Strategy::kExhaustive);
    EXPECT_EQ(r.best_delta,
              oracle_values().at("best").at(name).at("best_delta").get<Count>());
    EXPECT_EQ(r.best_pairs, fixture_best_pairs(name)) << name;
    EXPECT_EQ(r.evaluated + r.pruned, non_adjacent_pair_count(tree));
  }
  const SearchReport p7 = best_edge(path_tree(7), Strategy::kExhaustive);
  EXPECT_EQ(p7.best_ad_prime, Rational(16, 21));
}

TEST(BestEdgeTest, NoCandidates) {
  EXPECT_INSET_ERROR(best_edge(path_tree(2), Strategy::kExhaustive),
                     ErrorCode::kNoCandidates);
  EXPECT_INSET_ERROR(best_edge(path_tree(2), Strategy::kPruned),
                     ErrorCode::kNoCandidates);
  EXPECT_INSET_ERROR(pruning_ratio(path_tree(2)), ErrorCode::kNoCandidates);
}

TEST(BestEdgeTest, ExhaustiveAndOracleAgree) {
  const Corpus corpus(4, 30, 777, 60);
  for (std::size_t i = 0; i < corpus.count(); ++i) {
    const Tree t = corpus.tree(i);
    SearchReport a = best_edge(t, Strategy::kExhaustive);
    const SearchReport b = best_edge(t, Strategy::kOracle);
    a.strategy = b.strategy;
    ASSERT_EQ(a, b);
  }
}

TEST(BestEdgeTest, PrunedMatchesExhaustiveOffStars) {
  const Corpus corpus(7, 60, 4242, 80);
  for (std::size_t i = 0; i < corpus.count(); ++i) {
    const Tree t = corpus.tree(i);
    if (is_star(t)) continue;
    const SearchReport full = best_edge(t, Strategy::kExhaustive);
    const SearchReport pruned = best_edge(t, Strategy::kPruned);
    ASSERT_EQ(pruned.best_delta, full.best_delta) << to_edge_list(t);
    ASSERT_EQ(pruned.evaluated + pruned.pruned, full.evaluated);
  }
}

// Argmax of the saving is the argmin of the Wiener index after insertion.
TEST(BestEdgeTest, DualityWithUnicyclicWiener) {
  const Corpus corpus(4, 18, 12, 25);
  for (std::size_t i = 0; i < corpus.count(); ++i) {
    const Tree t = corpus.tree(i);
    Count best_w = -1;
    std::vector<VertexPair> argmin;
    for (const VertexPair& p : candidate_pairs(t, Strategy::kExhaustive)) {
      const Count w =
          wiener_brute(SimpleGraph::with_inset_edge(t, p.first, p.second));
      if (best_w < 0 || w < best_w) {
        best_w = w;
        argmin.clear();
      }
      if (w == best_w) argmin.push_back(p);
    }
    ASSERT_EQ(best_edge(t, Strategy::kExhaustive).best_pairs, argmin);
  }
}

TEST(BestEdgeTest, PendantNeverDecreasesBest) {
  SplitMix64 gen(1);
  for (int trial = 0; trial < 40; ++trial) {
    const Tree t = random_labeled_tree(6 + static_cast<Vertex>(gen.below(25)),
                                       gen.next());
    std::vector<VertexPair> edges = t.edges();
    edges.push_back({static_cast<Vertex>(gen.below(t.size())), t.size()});
    const Tree grown = Tree::from_edges(t.size() + 1, edges);
    ASSERT_GE(best_edge(grown, Strategy::kExhaustive).best_delta,
              best_edge(t, Strategy::kExhaustive).best_delta);
  }
}

TEST(BestEdgeTest, SweepHeuristicNeverBeatsExhaustive) {
  const Corpus corpus(4, 40, 99, 40);
  for (std::size_t i = 0; i < corpus.count(); ++i) {
    const Tree t = corpus.tree(i);
    const SearchReport sweep = best_edge(t, Strategy::kSweep);
    const SearchReport full = best_edge(t, Strategy::kExhaustive);
    ASSERT_LE(sweep.best_delta, full.best_delta);
    for (const VertexPair& p : sweep.best_pairs) {
      ASSERT_EQ(delta_direct(anatomize(t, p.first, p.second)), sweep.best_delta);
    }
  }
  EXPECT_EQ(best_edge(path_tree(7), Strategy::kSweep).best_delta, 16);
}

TEST(PruningRatioTest, Examples) {
  EXPECT_EQ(pruning_ratio(path_tree(7)), Rational(2, 15));
  EXPECT_EQ(pruning_ratio(star_tree(5)), Rational(0, 1));
}

TEST(StrategyTest, NamesRoundTrip) {
  for (Strategy s : {Strategy::kExhaustive, Strategy::kPruned, Strategy::kOracle,
                     Strategy::kSweep}) {
    EXPECT_EQ(parse_strategy(strategy_name(s)), s);
  }
  EXPECT_FALSE(parse_strategy("greedy").has_value());
}

}  // namespace
}  // namespace inset
