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

#include "inset/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <utility>

#include "inset/delta.hpp"
#include "inset/oracle.hpp"
#include "inset/parallel.hpp"
#include "inset/randgen.hpp"
#include "inset/rooted_tree.hpp"

namespace inset {

namespace {

Error out_of_domain(const std::string& what) {
  return Error(ErrorCode::kOutOfDomain, what);
}

Count exact_div(Count numerator, Count denominator, const char* what) {
  if (numerator % denominator != 0) {
    throw out_of_domain(std::string(what) + " is not an integer");
  }
  return numerator / denominator;
}

void require_family(Vertex n, int k, Count w_x, Count w_y) {
  if (k < 3 || w_x < 1 || w_y < 1 || w_x + w_y != n - k + 2) {
    throw out_of_domain("family needs k >= 3, w_x, w_y >= 1, w_x + w_y = n - k + 2"
                        " (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                        ", w_x=" + std::to_string(w_x) +
                        ", w_y=" + std::to_string(w_y) + ")");
  }
}

// Tree-order accumulator for the exhaustive scan. merge() is associative and
// commutative: ties on the maximum resolve to the smallest (rank, pair).
struct ScanAccumulator {
  ExhaustiveScan scan;
  bool any = false;

  void observe(std::uint64_t rank, VertexPair pair, Count d) {
    ++scan.pairs;
    if (!any || d > scan.max_delta ||
        (d == scan.max_delta &&
         std::pair(rank, pair) < std::pair(scan.argmax_rank, scan.argmax_pair))) {
      scan.max_delta = d;
      scan.argmax_rank = rank;
      scan.argmax_pair = pair;
    }
    scan.min_delta = any ? std::min(scan.min_delta, d) : d;
    any = true;
  }

  void merge(const ScanAccumulator& other) {
    if (!other.any) return;
    const std::uint64_t trees = scan.trees + other.scan.trees;
    const std::uint64_t pairs = scan.pairs + other.scan.pairs;
    const std::uint64_t unit = scan.unit_pairs + other.scan.unit_pairs;
    const std::uint64_t bad =
        scan.lower_bound_violations + other.scan.lower_bound_violations;
    if (!any || other.scan.max_delta > scan.max_delta ||
        (other.scan.max_delta == scan.max_delta &&
         (other.scan.argmax_rank < scan.argmax_rank ||
          (other.scan.argmax_rank == scan.argmax_rank &&
           other.scan.argmax_pair < scan.argmax_pair)))) {
      scan.max_delta = other.scan.max_delta;
      scan.argmax_rank = other.scan.argmax_rank;
      scan.argmax_pair = other.scan.argmax_pair;
    }
    scan.min_delta = any ? std::min(scan.min_delta, other.scan.min_delta)
                         : other.scan.min_delta;
    scan.trees = trees;
    scan.pairs = pairs;
    scan.unit_pairs = unit;
    scan.lower_bound_violations = bad;
    any = true;
  }
};

void scan_tree(std::uint64_t rank, Vertex n, ScanAccumulator& acc) {
  const Tree tree = prufer_decode(n, prufer_code_from_rank(n, rank));
  const RootedTree rooted(tree);
  ++acc.scan.trees;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (tree.adjacent(u, v)) continue;
      const CycleAnatomy a = rooted.anatomize(u, v);
      const Count d = delta_direct(a);
      acc.observe(rank, {u, v}, d);
      const bool leaf_pair_at_two =
          a.k == 3 && tree.degree(u) == 1 && tree.degree(v) == 1;
      if (d == 1) ++acc.scan.unit_pairs;
      if (d < 1 || (d == 1) != leaf_pair_at_two) {
        ++acc.scan.lower_bound_violations;
      }
    }
  }
}

void require_scan_order(Vertex n) {
  if (n < 4 || n > 10) {
    throw out_of_domain("exhaustive scan supports 4 <= n <= 10, got " +
                        std::to_string(n));
  }
}

}  // namespace

Count claimed_upper(Vertex n) {
  if (n < 16 || n % 8 != 0) {
    throw out_of_domain("claimed upper bound needs n = 0 (mod 8), n >= 16; got " +
                        std::to_string(n));
  }
  const Count nn = n;
  // 32 * (n^3/16 - n^2/32 - 9n/8 + 2)
  return exact_div(2 * nn * nn * nn - nn * nn - 36 * nn + 64, 32,
                   "claimed upper bound");
}

CaseFormula case_formula_for(int k) {
  if (k % 2 == 1) return CaseFormula::kOdd;
  return k % 4 == 2 ? CaseFormula::kTwoMod4 : CaseFormula::kZeroMod4;
}

std::string case_formula_name(CaseFormula c) {
  switch (c) {
    case CaseFormula::kTwoMod4: return "k=2mod4";
    case CaseFormula::kZeroMod4: return "k=0mod4";
    case CaseFormula::kOdd: return "k_odd";
  }
  return "k_odd";
}

Count claimed_case_formula(Vertex n, int k) {
  if (k < 3 || k > n) {
    throw out_of_domain("case formula needs 3 <= k <= n; got n=" +
                        std::to_string(n) + ", k=" + std::to_string(k));
  }
  const Count kk = k;
  const Count m = n - kk + 2;
  const Count balanced = (m / 2) * ((m + 1) / 2) * (kk - 2);
  // Everything below is 8x the fractional tail.
  Count tail8 = 0;
  switch (case_formula_for(k)) {
    case CaseFormula::kTwoMod4:
      tail8 = 2 * (kk - 2) * (kk - 4) * m + 4 * (kk - 4) * (kk - 6) -
              (kk - 6) * (kk - 2);
      break;
    case CaseFormula::kZeroMod4:
      tail8 = 2 * (kk - 2) * (kk - 4) * m + 4 * (kk - 4) * (kk - 6) -
              (kk - 4) * (kk - 4);
      break;
    case CaseFormula::kOdd:
      tail8 = 2 * (kk - 3) * (kk - 3) * m + 4 * (kk - 5) * (kk - 5) -
              (kk - 5) * (kk - 3);
      break;
  }
  return balanced + exact_div(tail8, 8, "case formula");
}

Count family_delta(Vertex n, int k, Count w_x, Count w_y) {
  require_family(n, k, w_x, w_y);
  std::vector<Vertex> path(k);
  std::vector<Count> weights(k, 1);
  for (int i = 0; i < k; ++i) path[i] = i;
  weights.front() = w_x;
  weights.back() = w_y;
  return delta_direct(anatomy_from_path(path, weights));
}

FamilyOptimum family_optimum(Vertex n) {
  if (n < 5) throw out_of_domain("family optimum needs n >= 5");
  FamilyOptimum best;
  for (int k = 3; k <= n - 1; ++k) {
    const Count m = n - k + 2;
    const Count value = family_delta(n, k, m / 2, m - m / 2);
    if (best.k == 0 || value > best.value) {
      best.k = k;
      best.w_x = m / 2;
      best.w_y = m - m / 2;
      best.value = value;
    }
  }
  const Count m = n - best.k + 2;
  best.best_split_value = best.value;
  best.best_split_w_x = best.w_x;
  for (Count w_x = 1; w_x < m; ++w_x) {
    const Count value = family_delta(n, best.k, w_x, m - w_x);
    if (value > best.best_split_value) {
      best.best_split_value = value;
      best.best_split_w_x = w_x;
    }
  }
  best.balanced_is_optimal = best.best_split_value == best.value;
  return best;
}

FamilyTree build_family_tree(Vertex n, int k, Count w_x, Count w_y,
                             AttachShape shape) {
  require_family(n, k, w_x, w_y);
  std::vector<VertexPair> edges;
  edges.reserve(n - 1);
  for (Vertex v = 0; v + 1 < k; ++v) edges.push_back({v, v + 1});
  Vertex next = k;
  const auto attach = [&](Vertex anchor, Count extra) {
    Vertex tip = anchor;
    for (Count i = 0; i < extra; ++i) {
      edges.push_back({shape == AttachShape::kStar ? anchor : tip, next});
      tip = next++;
    }
  };
  attach(0, w_x - 1);
  attach(k - 1, w_y - 1);
  return {Tree::from_edges(n, edges), {0, static_cast<Vertex>(k - 1)}};
}

std::vector<CriticalPoint> critical_points(Vertex n) {
  const Count nn = n;
  const Count den = 2 * nn - 7;
  struct Branch {
    CaseFormula formula;
    bool half_integral;
    Count numerator;
  };
  const Branch branches[] = {
      {CaseFormula::kTwoMod4, true, nn * nn + 2 * nn - 24},
      {CaseFormula::kZeroMod4, true, nn * nn - 2 * nn - 24},
      {CaseFormula::kOdd, true, nn * nn - 2 * nn - 25},
      {CaseFormula::kTwoMod4, false, nn * nn + 2 * nn - 26},
      {CaseFormula::kZeroMod4, false, nn * nn - 2 * nn - 25},
      {CaseFormula::kOdd, false, nn * nn - 2 * nn - 26},
  };
  std::vector<CriticalPoint> out;
  for (const Branch& s : branches) {
    CriticalPoint cp;
    cp.formula = s.formula;
    cp.half_integral = s.half_integral;
    cp.numerator = s.numerator;
    cp.denominator = den;
    cp.value = static_cast<double>(s.numerator) / static_cast<double>(den);
    const int lo = static_cast<int>(std::floor(cp.value));
    const int hi = static_cast<int>(std::ceil(cp.value));
    for (int k : {lo, hi}) {
      const int clamped = std::clamp(k, 3, static_cast<int>(n));
      if (!cp.candidates.empty() && cp.candidates.back().k == clamped) continue;
      const Count m = n - clamped + 2;
      cp.candidates.push_back({clamped, claimed_case_formula(n, clamped),
                               family_delta(n, clamped, m / 2, m - m / 2)});
    }
    out.push_back(std::move(cp));
  }
  return out;
}

ExhaustiveScan scan_all_trees(Vertex n, int threads) {
  require_scan_order(n);
  const std::uint64_t total = labeled_tree_count(n);
  const int nthreads = resolve_threads(threads);
  ScanAccumulator result;
  result.scan.n = n;
  std::exception_ptr failure;
#pragma omp parallel num_threads(nthreads)
  {
    ScanAccumulator local;
    local.scan.n = n;
#pragma omp for schedule(dynamic, 1024)
    for (std::int64_t rank = 0; rank < static_cast<std::int64_t>(total);
         ++rank) {
      try {
        scan_tree(static_cast<std::uint64_t>(rank), n, local);
      } catch (...) {
#pragma omp critical(inset_scan_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(inset_scan_merge)
    result.merge(local);
  }
  if (failure) std::rethrow_exception(failure);
  return result.scan;
}

ExhaustiveScan scan_all_trees_serial(Vertex n) {
  require_scan_order(n);
  const std::uint64_t total = labeled_tree_count(n);
  ScanAccumulator acc;
  acc.scan.n = n;
  for (std::uint64_t rank = 0; rank < total; ++rank) scan_tree(rank, n, acc);
  return acc.scan;
}

BoundsReport audit(Vertex n, Vertex exhaustive_limit, int threads) {
  if (n < 5) throw out_of_domain("audit needs n >= 5");
  BoundsReport r;
  r.n = n;
  if (n >= 16 && n % 8 == 0) r.claimed_upper = claimed_upper(n);

  r.family_argmax = family_optimum(n);
  r.family_max = r.family_argmax.value;
  const FamilyTree built =
      build_family_tree(n, r.family_argmax.k, r.family_argmax.w_x,
                        r.family_argmax.w_y, AttachShape::kStar);
  r.family_oracle_delta =
      delta_oracle(built.tree, built.pair.first, built.pair.second);

  r.remark_window_lo = (n + 1) / 2 + 1;
  r.remark_window_hi = (n + 1) / 2 + 4;

  for (int k = 3; k <= n; ++k) {
    const Count m = n - k + 2;
    r.case_values.push_back({k, case_formula_for(k), claimed_case_formula(n, k),
                             family_delta(n, k, m / 2, m - m / 2)});
  }
  r.critical_points = critical_points(n);

  if (n <= exhaustive_limit) {
    r.exhaustive = scan_all_trees(n, threads);
    const Tree argmax_tree =
        prufer_decode(n, prufer_code_from_rank(n, r.exhaustive->argmax_rank));
    r.empirical_oracle_delta =
        delta_oracle(argmax_tree, r.exhaustive->argmax_pair.first,
                     r.exhaustive->argmax_pair.second);
  }

  auto flag = [&r](std::string kind, std::string claimed_name, Count claimed,
                   std::string computed_name, Count computed) {
    r.discrepancies.push_back({std::move(kind), std::move(claimed_name),
                               claimed, std::move(computed_name), computed});
  };
  if (r.claimed_upper && *r.claimed_upper != r.family_max) {
    flag("upper_bound", "claimed_upper", *r.claimed_upper, "family_max",
         r.family_max);
  }
  if (r.family_oracle_delta != r.family_max) {
    flag("family_oracle", "family_max", r.family_max, "family_oracle_delta",
         r.family_oracle_delta);
  }
  if (!r.family_argmax.balanced_is_optimal) {
    flag("balanced_split", "balanced_split_value", r.family_max,
         "best_split_value", r.family_argmax.best_split_value);
  }
  if (r.family_argmax.k < r.remark_window_lo ||
      r.family_argmax.k > r.remark_window_hi) {
    flag("remark_window", "remark_window_hi", r.remark_window_hi,
         "family_argmax_k", r.family_argmax.k);
  }
  for (const CaseValue& cv : r.case_values) {
    if (cv.claimed != cv.family) {
      flag("case_formula_k=" + std::to_string(cv.k),
           case_formula_name(cv.formula), cv.claimed, "family_delta",
           cv.family);
    }
  }
  if (r.exhaustive) {
    if (r.exhaustive->max_delta != r.family_max) {
      flag("empirical_max", "family_max", r.family_max, "empirical_max",
           r.exhaustive->max_delta);
    }
    if (*r.empirical_oracle_delta != r.exhaustive->max_delta) {
      flag("empirical_oracle", "empirical_max", r.exhaustive->max_delta,
           "empirical_oracle_delta", *r.empirical_oracle_delta);
    }
    if (r.exhaustive->lower_bound_violations != 0) {
      flag("lower_bound", "lower_bound_violations", 0,
           "lower_bound_violations",
           static_cast<Count>(r.exhaustive->lower_bound_violations));
    }
  }
  return r;
}

}  // namespace inset
