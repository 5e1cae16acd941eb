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

#include "inset/matrix_form.hpp"

#include <initializer_list>

#include "gtest/gtest.h"
#include "inset/delta.hpp"
#include "inset/randgen.hpp"
#include "test_util.hpp"

namespace inset {
namespace {

using ::inset::testing::fixture_tree;
using ::inset::testing::path_tree;
using ::inset::testing::star_tree;

IntMatrix from_rows(std::initializer_list<std::initializer_list<Count>> rows) {
  IntMatrix m(static_cast<int>(rows.size()),
              static_cast<int>(rows.begin()->size()));
  int i = 1;
  for (const auto& row : rows) {
    int j = 1;
    for (Count v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

TEST(BuildFTest, DisplayedMatrices) {
  EXPECT_EQ(build_F(4).entries, from_rows({{2, 0}, {0, 0}}));
  EXPECT_EQ(build_F(5).entries, from_rows({{3, 1}, {1, 0}}));
  EXPECT_EQ(build_F(6).entries,
            from_rows({{4, 2, 0}, {2, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(build_F(7).entries,
            from_rows({{5, 3, 1}, {3, 1, 0}, {1, 0, 0}}));
  EXPECT_EQ(build_F(3).entries, from_rows({{1}}));
}

TEST(BuildFTest, TooSmall) {
  EXPECT_INSET_ERROR(build_F(2), ErrorCode::kKTooSmall);
  EXPECT_INSET_ERROR(build_D(1), ErrorCode::kKTooSmall);
  EXPECT_INSET_ERROR(build_O(0), ErrorCode::kKTooSmall);
}

// The D_k + O_k construction against the per-pair saving coefficient.
TEST(BuildFTest, EntriesAreSavingCoefficients) {
  for (int k = 3; k <= 64; ++k) {
    const CoefficientMatrix f = build_F(k);
    ASSERT_EQ(f.k_prime, k / 2);
    ASSERT_EQ(f.entries.rows(), k / 2);
    ASSERT_EQ(f.entries.at(1, 1), k - 2);
    for (int i = 1; i <= f.k_prime; ++i) {
      for (int j = 1; j <= f.k_prime; ++j) {
        ASSERT_EQ(f.entries.at(i, j), pair_saving(k, i, j))
            << "k=" << k << " i=" << i << " j=" << j;
        if (i > 1 && j < f.k_prime) {
          ASSERT_EQ(f.entries.at(i, j), f.entries.at(i - 1, j + 1));
        }
        if (i + j > f.k_prime + 1 || (k % 2 == 0 && i + j == f.k_prime + 1)) {
          ASSERT_EQ(f.entries.at(i, j), 0);
        }
      }
    }
  }
}

TEST(MatrixAlgebraTest, OuterHadamardNorm) {
  const std::vector<Count> x{2, 1};
  const std::vector<Count> y{1, 3};
  const IntMatrix w = outer_product(x, y);
  EXPECT_EQ(w, from_rows({{2, 6}, {1, 3}}));
  EXPECT_EQ(hadamard(build_F(5).entries, w), from_rows({{6, 6}, {1, 0}}));
  EXPECT_EQ(norm_one(from_rows({{-2, 3}, {0, -1}})), 6);
  EXPECT_EQ(build_D(5) + build_O(5), build_F(5).entries);
  EXPECT_INSET_ERROR(build_D(5) + build_D(7), ErrorCode::kOutOfDomain);
}

TEST(DeltaViaMatrixTest, Examples) {
  EXPECT_EQ(delta_via_matrix(anatomize(path_tree(5), 0, 4)), 5);
  EXPECT_EQ(delta_via_matrix(anatomize(fixture_tree("spider"), 0, 3)), 4);
  EXPECT_EQ(delta_via_matrix(anatomize(star_tree(5), 1, 2)), 1);
}

TEST(DeltaViaMatrixTest, MaterializedStreamedAndDirectAgree) {
  const Corpus corpus(4, 60, 8080, 40);
  for (std::size_t t = 0; t < corpus.count(); ++t) {
    const Tree tree = corpus.tree(t);
    for (Vertex u = 0; u < tree.size(); ++u) {
      for (Vertex v = u + 1; v < tree.size(); ++v) {
        if (tree.adjacent(u, v)) continue;
        const CycleAnatomy a = anatomize(tree, u, v);
        const Count direct = delta_direct(a);
        ASSERT_EQ(delta_via_matrix(a), direct);
        ASSERT_EQ(delta_via_matrix(a, 0), direct);
      }
    }
  }
}

TEST(DeltaViaMatrixTest, MonotoneInEachWeight) {
  std::vector<Vertex> path(9);
  std::vector<Count> weights(9, 1);
  for (int i = 0; i < 9; ++i) path[i] = i;
  Count previous = delta_via_matrix(anatomy_from_path(path, weights));
  for (int step = 0; step < 30; ++step) {
    weights[step % 9] += 1;
    const Count now = delta_via_matrix(anatomy_from_path(path, weights));
    ASSERT_GE(now, previous);
    previous = now;
  }
}

}  // namespace
}  // namespace inset
