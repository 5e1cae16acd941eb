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

// Audit of published extremal claims for the single-inset-edge saving.
//
// The closed forms below (the n^3/16 upper bound, the three per-k case
// formulas, the critical points of their k-derivatives) are treated as
// claims. They are evaluated exactly and compared against values computed by
// the direct saving formula on explicit configurations, by the brute-force
// oracle on built trees, and, for small n, by enumerating every labeled tree.
// Disagreements are reported, never corrected.

#ifndef INSET_BOUNDS_HPP_
#define INSET_BOUNDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inset/tree.hpp"

namespace inset {

// n^3/16 - n^2/32 - 9n/8 + 2, defined for n = 0 (mod 8), n >= 16.
// Throws Error{OutOfDomain} elsewhere.
Count claimed_upper(Vertex n);

enum class CaseFormula {
  kTwoMod4,   // k = 2 (mod 4)
  kZeroMod4,  // k = 0 (mod 4)
  kOdd,       // odd k
};

CaseFormula case_formula_for(int k);
std::string case_formula_name(CaseFormula c);

// Claimed saving of the extremal configuration with cycle length k, with
// m = n - k + 2:
//   k = 2 (mod 4): fl(m/2) ce(m/2)(k-2) + (k-2)(k-4)m/4 + (k-4)(k-6)/2
//                  - (k-6)(k-2)/8
//   k = 0 (mod 4): fl(m/2) ce(m/2)(k-2) + (k-2)(k-4)m/4 + (k-4)(k-6)/2
//                  - (k-4)^2/8
//   odd k:         fl(m/2) ce(m/2)(k-2) + (k-3)^2 m/4 + (k-5)^2/2
//                  - (k-5)(k-3)/8
// Requires 3 <= k <= n. Throws Error{OutOfDomain}.
Count claimed_case_formula(Vertex n, int k);

// Exact saving of a k-cycle whose two anchors carry w_x and w_y and every
// other cycle vertex carries weight 1. Requires k >= 3, w_x, w_y >= 1 and
// w_x + w_y = n - k + 2. Throws Error{OutOfDomain}.
Count family_delta(Vertex n, int k, Count w_x, Count w_y);

struct FamilyOptimum {
  int k = 0;
  Count w_x = 0;  // floor((n - k + 2) / 2)
  Count w_y = 0;  // ceil((n - k + 2) / 2)
  Count value = 0;
  // Best value over every split w_x + w_y = n - k + 2 at the chosen k, and
  // whether the balanced split attains it.
  Count best_split_value = 0;
  Count best_split_w_x = 0;
  bool balanced_is_optimal = true;
};

// Max of family_delta over k in [3, n - 1] with the balanced split; ties go
// to the smaller k. Throws Error{OutOfDomain} for n < 5.
FamilyOptimum family_optimum(Vertex n);

enum class AttachShape { kStar, kPath };

struct FamilyTree {
  Tree tree;
  VertexPair pair;  // (x, y) = (0, k - 1)
};

// Path x = 0, 1, ..., k - 1 = y, with w_x - 1 extra vertices hung off x and
// w_y - 1 off y, as a star or as a path. Same preconditions as family_delta.
FamilyTree build_family_tree(Vertex n, int k, Count w_x, Count w_y,
                             AttachShape shape);

// Candidate maximizer of one claimed case formula, from the roots of its
// k-derivative.
struct CriticalPoint {
  CaseFormula formula = CaseFormula::kOdd;
  bool half_integral = true;  // (n - k + 2)/2 integral branch
  Count numerator = 0;        // value = numerator / (2n - 7)
  Count denominator = 1;
  double value = 0.0;
  // floor / ceil of value clamped to [3, n], each evaluated by the claimed
  // case formula of its own residue class and by family_delta.
  struct Candidate {
    int k = 0;
    Count claimed = 0;
    Count family = 0;
  };
  std::vector<Candidate> candidates;
};

std::vector<CriticalPoint> critical_points(Vertex n);

// Exhaustive scan of every labeled tree on n vertices and every
// non-adjacent pair.
struct ExhaustiveScan {
  Vertex n = 0;
  std::uint64_t trees = 0;
  std::uint64_t pairs = 0;
  Count max_delta = 0;
  // First maximizer in (Pruefer rank, pair) order.
  std::uint64_t argmax_rank = 0;
  VertexPair argmax_pair;
  Count min_delta = 0;
  // Pairs with saving exactly 1, and pairs breaking "saving 1 iff both ends
  // are leaves at distance 2" in either direction.
  std::uint64_t unit_pairs = 0;
  std::uint64_t lower_bound_violations = 0;

  friend bool operator==(const ExhaustiveScan&, const ExhaustiveScan&) = default;
};

// OpenMP over Pruefer ranks with a deterministic merge. n in [4, 10].
// Throws Error{OutOfDomain}.
ExhaustiveScan scan_all_trees(Vertex n, int threads = 0);
// Serial reference for scan_all_trees.
ExhaustiveScan scan_all_trees_serial(Vertex n);

struct CaseValue {
  int k = 0;
  CaseFormula formula = CaseFormula::kOdd;
  Count claimed = 0;
  Count family = 0;  // balanced split
};

struct Discrepancy {
  std::string kind;
  std::string claimed_name;
  Count claimed = 0;
  std::string computed_name;
  Count computed = 0;
};

struct BoundsReport {
  Vertex n = 0;
  std::optional<Count> claimed_upper;
  Count family_max = 0;
  FamilyOptimum family_argmax;
  // delta_oracle on build_family_tree at family_argmax.
  Count family_oracle_delta = 0;
  int remark_window_lo = 0;
  int remark_window_hi = 0;
  std::vector<CaseValue> case_values;
  std::vector<CriticalPoint> critical_points;
  std::optional<ExhaustiveScan> exhaustive;
  // delta_oracle on the empirical argmax tree, when exhaustive ran.
  std::optional<Count> empirical_oracle_delta;
  std::vector<Discrepancy> discrepancies;

  std::optional<Count> empirical_max() const {
    if (!exhaustive) return std::nullopt;
    return exhaustive->max_delta;
  }
};

inline constexpr Vertex kDefaultExhaustiveLimit = 8;

// Throws Error{OutOfDomain} for n < 5.
BoundsReport audit(Vertex n, Vertex exhaustive_limit = kDefaultExhaustiveLimit,
                   int threads = 0);

}  // namespace inset

#endif  // INSET_BOUNDS_HPP_
