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

// Incremental saving updates between nested inset edges on one tree path.
//
// Starting from the anchor pair (x_1, y_1) on a k-cycle:
//   diagonal step: (x_1, y_1) -> (x_2, y_2), cycle k -> k - 2
//   shift step:    (x_1, y_1) -> (x_2, y_1) or (x_1, y_2), cycle k -> k - 1
// The absorbed anchor's weight merges into the new anchor, and after every
// step the new anchors are relabeled x_1 / y_1.
//
// Each step costs O(k): the state carries the norm of O_k (.) W and prefix
// sums of both weight vectors, so the cross-pair sums needed by the update
// are inclusion-exclusion over those aggregates plus one anti-diagonal.

#ifndef INSET_SWEEP_HPP_
#define INSET_SWEEP_HPP_

#include <cstdint>
#include <vector>

#include "inset/delta.hpp"
#include "inset/tree.hpp"

namespace inset {

struct SweepState {
  CycleAnatomy anatomy;
  Count current_delta = 0;
  // Sum of w_{x_i} w_{y_j} over i + j <= k' + 1.
  Count o_norm = 0;
  // prefix_x[m] = w_{x_1} + ... + w_{x_m}; size k' + 1.
  std::vector<Count> prefix_x;
  std::vector<Count> prefix_y;
  // Weight products evaluated since init_sweep.
  std::uint64_t ops = 0;
};

enum class ShiftSide { kX, kY };

// Throws Error{SameVertex, AdjacentPair, IdOutOfRange}.
SweepState init_sweep(const Tree& tree, Vertex x, Vertex y);
SweepState init_sweep(CycleAnatomy anatomy);

// Saving difference new - old for the step, computed in O(k) from the state.
// Throw Error{CycleTooShort} under the same preconditions as the steps.
Count diagonal_difference(const SweepState& state);
Count shift_difference(const SweepState& state, ShiftSide side);

// Requires k >= 5. Throws Error{CycleTooShort}.
SweepState step_diagonal(const SweepState& state);
// Requires k >= 4. Throws Error{CycleTooShort}.
SweepState step_shift(const SweepState& state, ShiftSide side);

// The comparison criteria as inequalities over the entries w_ij of the
// weight outer product, evaluated literally (O(k^2)):
//   diagonal, even k:  sum_{i,j>1, 4<=i+j<=k'+1} w_ij >= w_11
//   diagonal, odd k:   2 sum_{i,j>1, 4<=i+j<=k'+1} w_ij
//                        + sum_{i+j=k'+2} w_ij >= 2 w_11
//   shift x, even k:   sum_{i>1, j<k', i+j<=k'+1} w_ij >= sum_{j<k'} w_1j
//   shift x, odd k:    sum_{i>1, j<k', i+j<=k'+1} w_ij >= sum_{j<=k'} w_1j
// True exactly when the step does not decrease the saving.
bool diagonal_criterion(const SweepState& state);
bool shift_criterion(const SweepState& state, ShiftSide side);

// Saving after an x-shift through the (F_k + O_k) identity:
// || (F_k + O_k) (.) ((w_x - w_{x_1} e_1 + w_{x_1} e_2) w_y^T) ||.
// An independent O(k^2) route used to cross-check step_shift.
Count shift_via_matrix_identity(const CycleAnatomy& anatomy);

// Mirror image: x-side and y-side exchanged.
CycleAnatomy mirrored(const CycleAnatomy& anatomy);

enum class SweepFamily { kDiagonal, kShiftX, kShiftY };

struct SweepEntry {
  SweepFamily family = SweepFamily::kDiagonal;
  DeltaRecord record;

  friend bool operator==(const SweepEntry&, const SweepEntry&) = default;
};

struct SweepResult {
  // Diagonal pairs (x_i, y_i) first, then (x_{i+1}, y_i), then
  // (x_i, y_{i+1}); pairs that would be adjacent are omitted.
  std::vector<SweepEntry> entries;
  std::uint64_t ops = 0;
};

// O(k^2) beyond the O(n) anatomy. Throws Error{SameVertex, AdjacentPair}.
SweepResult sweep_path(const Tree& tree, Vertex x, Vertex y);

// Reference for sweep_path: every emitted pair re-anatomized and scored with
// delta_direct from scratch. ops counts delta_direct products only.
SweepResult recompute_path(const Tree& tree, Vertex x, Vertex y);

}  // namespace inset

#endif  // INSET_SWEEP_HPP_
