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

#include "inset/randgen.hpp"

#include <cmath>
#include <map>
#include <set>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace inset {
namespace {

using ::inset::testing::path_tree;
using ::inset::testing::star_tree;

TEST(SplitMix64Test, ReferenceSequence) {
  // First outputs for seed 1234567 from the published splitmix64.c.
  SplitMix64 gen(1234567);
  EXPECT_EQ(gen.next(), 6457827717110365317ULL);
  EXPECT_EQ(gen.next(), 3203168211198807973ULL);
  EXPECT_EQ(gen.next(), 9817491932198370423ULL);
}

TEST(SplitMix64Test, BelowAndUnitRanges) {
  SplitMix64 gen(3);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(gen.below(7), 7u);
    const double u = gen.unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(RandomLabeledTreeTest, SingleEdge) {
  for (std::uint64_t seed : {0ULL, 1ULL, ~0ULL}) {
    const Tree t = random_labeled_tree(2, seed);
    EXPECT_EQ(t.edges(), (std::vector<VertexPair>{{0, 1}}));
  }
  EXPECT_INSET_ERROR(random_labeled_tree(1, 0), ErrorCode::kOutOfDomain);
}

TEST(RandomLabeledTreeTest, DeterministicPerSeed) {
  EXPECT_EQ(random_labeled_tree(50, 1), random_labeled_tree(50, 1));
  EXPECT_FALSE(random_labeled_tree(50, 1) == random_labeled_tree(50, 2));
}

TEST(RandomLabeledTreeTest, UniformOnThreeVertices) {
  constexpr int kDraws = 30000;
  std::map<Vertex, int> by_center;
  for (int i = 0; i < kDraws; ++i) {
    const Tree t = random_labeled_tree(3, derive_seed(77, i));
    for (Vertex v = 0; v < 3; ++v) {
      if (t.degree(v) == 2) ++by_center[v];
    }
  }
  const double p = 1.0 / 3.0;
  const double sigma = std::sqrt(kDraws * p * (1 - p));
  for (Vertex v = 0; v < 3; ++v) {
    EXPECT_NEAR(by_center[v], kDraws * p, 3 * sigma) << v;
  }
}

// 16 labeled trees on 4 vertices, 40,000 draws; df = 15, critical value at
// significance 0.001 is 37.697.
TEST(RandomLabeledTreeTest, ChiSquareOnFourVertices) {
  constexpr int kDraws = 40000;
  std::map<std::vector<Vertex>, int> counts;
  const Corpus corpus(4, 2026, kDraws);
  for (int i = 0; i < kDraws; ++i) ++counts[prufer_encode(corpus.tree(i))];
  ASSERT_EQ(counts.size(), 16u);
  const double expected = kDraws / 16.0;
  double chi2 = 0.0;
  for (const auto& [code, c] : counts) {
    chi2 += (c - expected) * (c - expected) / expected;
  }
  EXPECT_LT(chi2, 37.697);
}

TEST(PruferTest, RoundTripExhaustive) {
  for (Vertex n = 2; n <= 8; ++n) {
    const std::uint64_t total = labeled_tree_count(n);
    std::set<std::vector<VertexPair>> seen;
    for (std::uint64_t rank = 0; rank < total; ++rank) {
      const std::vector<Vertex> code = prufer_code_from_rank(n, rank);
      const Tree t = prufer_decode(n, code);
      ASSERT_EQ(prufer_encode(t), code);
      if (n <= 6) seen.insert(t.edges());
    }
    if (n <= 6) {
      EXPECT_EQ(seen.size(), total) << n;
    }
  }
}

TEST(PruferTest, Errors) {
  const std::vector<Vertex> short_code{0};
  EXPECT_INSET_ERROR(prufer_decode(4, short_code), ErrorCode::kOutOfDomain);
  const std::vector<Vertex> bad_symbol{0, 9};
  EXPECT_INSET_ERROR(prufer_decode(4, bad_symbol), ErrorCode::kOutOfDomain);
  EXPECT_EQ(labeled_tree_count(8), 262144u);
  EXPECT_INSET_ERROR(labeled_tree_count(40), ErrorCode::kOutOfDomain);
}

TEST(CorpusTest, IndexAddressable) {
  const Corpus a(10, 30, 555, 100);
  const Corpus b(10, 30, 555, 100);
  for (std::size_t i = 100; i-- > 0;) {
    const Tree t = a.tree(i);
    EXPECT_EQ(t, b.tree(i));
    EXPECT_GE(t.size(), 10);
    EXPECT_LE(t.size(), 30);
  }
  EXPECT_INSET_ERROR(Corpus(9, 8, 0, 1), ErrorCode::kOutOfDomain);
}

TEST(LeafStatsTest, Sanity) {
  EXPECT_EQ(leaves(path_tree(12)).size(), 2u);
  EXPECT_EQ(leaves(star_tree(12)).size(), 11u);
  EXPECT_INSET_ERROR(leaf_stats(2, 10, 0), ErrorCode::kOutOfDomain);
  EXPECT_INSET_ERROR(leaf_stats(5, 0, 0), ErrorCode::kOutOfDomain);
  EXPECT_NEAR(expected_leaves(50), 18.9601, 1e-3);
  EXPECT_NEAR(claimed_expected_leaves(50), 18.5809, 1e-3);
}

// Mean over every labeled tree, exactly.
TEST(LeafStatsTest, ExpectationMatchesEnumeration) {
  for (Vertex n = 3; n <= 8; ++n) {
    const std::uint64_t total = labeled_tree_count(n);
    std::uint64_t leaf_sum = 0;
    for (std::uint64_t rank = 0; rank < total; ++rank) {
      leaf_sum += leaves(prufer_decode(n, prufer_code_from_rank(n, rank))).size();
    }
    const double mean = static_cast<double>(leaf_sum) / static_cast<double>(total);
    EXPECT_NEAR(mean, expected_leaves(n), 1e-9) << n;
    EXPECT_GT(mean - claimed_expected_leaves(n), 0.3) << n;
  }
}

TEST(LeafStatsTest, MeanMatchesExactExpectation) {
  for (Vertex n : {10, 50, 200}) {
    const LeafStats s = leaf_stats(n, 4000, 8);
    EXPECT_NEAR(s.mean, expected_leaves(n), 3 * s.standard_error) << n;
  }
}

}  // namespace
}  // namespace inset
