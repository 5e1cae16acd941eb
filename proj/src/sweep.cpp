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

#include "inset/sweep.hpp"

#include <algorithm>
#include <utility>

#include "inset/matrix_form.hpp"
#include "inset/rooted_tree.hpp"

namespace inset {

namespace {

std::vector<Count> prefix_sums(const std::vector<Count>& w) {
  std::vector<Count> p(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) p[i + 1] = p[i] + w[i];
  return p;
}

// Sum of w_{x_i} w_{y_j} over i + j <= k' + 1, one product per row.
Count o_norm_of(const CycleAnatomy& a, const std::vector<Count>& prefix_y,
                std::uint64_t& ops) {
  const int kp = a.k_prime;
  Count total = 0;
  for (int i = 1; i <= kp; ++i) {
    total += a.weights_x[i - 1] * prefix_y[std::min(kp, kp + 1 - i)];
  }
  ops += static_cast<std::uint64_t>(kp);
  return total;
}

void require_cycle(const SweepState& s, int min_k, const char* step) {
  if (s.anatomy.k < min_k) {
    throw Error(ErrorCode::kCycleTooShort,
                std::string(step) + " needs k >= " + std::to_string(min_k) +
                    ", have k = " + std::to_string(s.anatomy.k));
  }
}

SweepState mirrored_state(const SweepState& s) {
  SweepState m = s;
  m.anatomy = mirrored(s.anatomy);
  std::swap(m.prefix_x, m.prefix_y);
  return m;
}

// Finishes a state whose anatomy and delta are set: prefix sums and o_norm.
SweepState finish_state(CycleAnatomy anatomy, Count delta,
                        std::uint64_t ops) {
  SweepState s;
  s.anatomy = std::move(anatomy);
  s.current_delta = delta;
  s.prefix_x = prefix_sums(s.anatomy.weights_x);
  s.prefix_y = prefix_sums(s.anatomy.weights_y);
  s.ops = ops;
  s.o_norm = o_norm_of(s.anatomy, s.prefix_y, s.ops);
  return s;
}

// x-shift on the anatomy alone.
CycleAnatomy shifted_x(const CycleAnatomy& a) {
  const int kp = a.k_prime;
  CycleAnatomy b;
  b.k = a.k - 1;
  b.k_prime = b.k / 2;
  b.x_side.assign(a.x_side.begin() + 1, a.x_side.end());
  b.weights_x.assign(a.weights_x.begin() + 1, a.weights_x.end());
  b.weights_x[0] += a.weights_x[0];
  if (a.k % 2 == 0) {
    // Odd result: y_{k'} becomes the middle vertex.
    b.y_side.assign(a.y_side.begin(), a.y_side.end() - 1);
    b.weights_y.assign(a.weights_y.begin(), a.weights_y.end() - 1);
    b.middle = a.y_side[kp - 1];
    b.weight_middle = a.weights_y[kp - 1];
  } else {
    // Even result: the old middle joins the x-side.
    b.y_side = a.y_side;
    b.weights_y = a.weights_y;
    b.x_side.push_back(*a.middle);
    b.weights_x.push_back(*a.weight_middle);
  }
  b.x = b.x_side.front();
  b.y = b.y_side.front();
  return b;
}

}  // namespace

CycleAnatomy mirrored(const CycleAnatomy& a) {
  CycleAnatomy m = a;
  std::swap(m.x, m.y);
  std::swap(m.x_side, m.y_side);
  std::swap(m.weights_x, m.weights_y);
  return m;
}

SweepState init_sweep(const Tree& tree, Vertex x, Vertex y) {
  return init_sweep(anatomize(tree, x, y));
}

SweepState init_sweep(CycleAnatomy anatomy) {
  std::uint64_t ops = 0;
  const Count delta = delta_direct(anatomy, &ops);
  return finish_state(std::move(anatomy), delta, ops);
}

Count diagonal_difference(const SweepState& s) {
  require_cycle(s, 5, "diagonal step");
  const CycleAnatomy& a = s.anatomy;
  const int kp = a.k_prime;
  const Count x1 = a.weights_x[0];
  const Count y1 = a.weights_y[0];
  const Count w11 = x1 * y1;
  // Cross products with i, j >= 2 and i + j <= k' + 1.
  const Count inner = s.o_norm - x1 * s.prefix_y[kp] - y1 * s.prefix_x[kp] + w11;
  if (a.k % 2 == 0) return 2 * inner - 2 * w11;
  Count anti = 0;
  for (int i = 2; i <= kp; ++i) {
    anti += a.weights_x[i - 1] * a.weights_y[kp + 2 - i - 1];
  }
  return 2 * inner + anti - 2 * w11;
}

Count shift_difference(const SweepState& state, ShiftSide side) {
  require_cycle(state, 4, "shift step");
  if (side == ShiftSide::kY) {
    return shift_difference(mirrored_state(state), ShiftSide::kX);
  }
  const CycleAnatomy& a = state.anatomy;
  const int kp = a.k_prime;
  // x_1 loses the pairs it had at distance > k/2.
  const Count lost =
      a.weights_x[0] * state.prefix_y[a.k % 2 == 0 ? kp - 1 : kp];
  // Every other cross pair with 2d >= k gains one.
  Count gained = 0;
  for (int i = 2; i <= kp; ++i) {
    gained += a.weights_x[i - 1] * state.prefix_y[kp + 1 - i];
  }
  return gained - lost;
}

SweepState step_diagonal(const SweepState& s) {
  const Count diff = diagonal_difference(s);
  const CycleAnatomy& a = s.anatomy;
  CycleAnatomy b;
  b.k = a.k - 2;
  b.k_prime = a.k_prime - 1;
  b.x_side.assign(a.x_side.begin() + 1, a.x_side.end());
  b.y_side.assign(a.y_side.begin() + 1, a.y_side.end());
  b.weights_x.assign(a.weights_x.begin() + 1, a.weights_x.end());
  b.weights_y.assign(a.weights_y.begin() + 1, a.weights_y.end());
  b.weights_x[0] += a.weights_x[0];
  b.weights_y[0] += a.weights_y[0];
  b.middle = a.middle;
  b.weight_middle = a.weight_middle;
  b.x = b.x_side.front();
  b.y = b.y_side.front();
  const std::uint64_t step_ops =
      a.k % 2 == 1 ? static_cast<std::uint64_t>(a.k_prime - 1) : 0;
  return finish_state(std::move(b), s.current_delta + diff, s.ops + step_ops);
}

SweepState step_shift(const SweepState& s, ShiftSide side) {
  const Count diff = shift_difference(s, side);
  const std::uint64_t step_ops = static_cast<std::uint64_t>(s.anatomy.k_prime - 1);
  if (side == ShiftSide::kX) {
    return finish_state(shifted_x(s.anatomy), s.current_delta + diff,
                        s.ops + step_ops);
  }
  return finish_state(mirrored(shifted_x(mirrored(s.anatomy))),
                      s.current_delta + diff, s.ops + step_ops);
}

bool diagonal_criterion(const SweepState& s) {
  require_cycle(s, 5, "diagonal step");
  const CycleAnatomy& a = s.anatomy;
  const int kp = a.k_prime;
  const auto w = [&](int i, int j) {
    return a.weights_x[i - 1] * a.weights_y[j - 1];
  };
  Count band = 0;
  Count anti = 0;
  for (int i = 1; i <= kp; ++i) {
    for (int j = 1; j <= kp; ++j) {
      if (i > 1 && j > 1 && i + j >= 4 && i + j <= kp + 1) band += w(i, j);
      if (i + j == kp + 2) anti += w(i, j);
    }
  }
  if (a.k % 2 == 0) return band >= w(1, 1);
  return 2 * band + anti >= 2 * w(1, 1);
}

bool shift_criterion(const SweepState& s, ShiftSide side) {
  require_cycle(s, 4, "shift step");
  const CycleAnatomy a =
      side == ShiftSide::kX ? s.anatomy : mirrored(s.anatomy);
  const int kp = a.k_prime;
  const auto w = [&](int i, int j) {
    return a.weights_x[i - 1] * a.weights_y[j - 1];
  };
  Count gained = 0;
  Count lost = 0;
  for (int i = 1; i <= kp; ++i) {
    for (int j = 1; j <= kp; ++j) {
      if (i > 1 && j < kp && i + j <= kp + 1) gained += w(i, j);
    }
  }
  const int j_max = a.k % 2 == 0 ? kp - 1 : kp;
  for (int j = 1; j <= j_max; ++j) lost += w(1, j);
  return gained >= lost;
}

Count shift_via_matrix_identity(const CycleAnatomy& a) {
  if (a.k < 4) {
    throw Error(ErrorCode::kCycleTooShort,
                "shift identity needs k >= 4, have k = " + std::to_string(a.k));
  }
  std::vector<Count> moved = a.weights_x;
  moved[1] += moved[0];
  moved[0] = 0;
  const IntMatrix coeff = build_F(a.k).entries + build_O(a.k);
  return norm_one(hadamard(coeff, outer_product(moved, a.weights_y)));
}

SweepResult sweep_path(const Tree& tree, Vertex x, Vertex y) {
  SweepState s = init_sweep(tree, x, y);
  const Count n = tree.size();
  SweepResult result;
  std::vector<SweepEntry> shift_x;
  std::vector<SweepEntry> shift_y;
  std::uint64_t shift_ops = 0;
  while (true) {
    result.entries.push_back(
        {SweepFamily::kDiagonal, make_record(s.anatomy, s.current_delta, n)});
    if (s.anatomy.k >= 4) {
      for (ShiftSide side : {ShiftSide::kX, ShiftSide::kY}) {
        const SweepState t = step_shift(s, side);
        shift_ops += t.ops - s.ops;
        auto& out = side == ShiftSide::kX ? shift_x : shift_y;
        out.push_back({side == ShiftSide::kX ? SweepFamily::kShiftX
                                             : SweepFamily::kShiftY,
                       make_record(t.anatomy, t.current_delta, n)});
      }
    }
    if (s.anatomy.k < 5) break;
    s = step_diagonal(s);
  }
  result.entries.insert(result.entries.end(), shift_x.begin(), shift_x.end());
  result.entries.insert(result.entries.end(), shift_y.begin(), shift_y.end());
  result.ops = s.ops + shift_ops;
  return result;
}

SweepResult recompute_path(const Tree& tree, Vertex x, Vertex y) {
  const std::vector<Vertex> path = path_between(tree, x, y);
  const int k = static_cast<int>(path.size());
  if (k < 3) {
    throw Error(ErrorCode::kAdjacentPair,
                std::to_string(x) + " and " + std::to_string(y) +
                    " are adjacent");
  }
  const RootedTree rooted(tree);
  const Count n = tree.size();
  SweepResult result;
  const auto score = [&](SweepFamily family, int lo, int hi) {
    const CycleAnatomy a = rooted.anatomize(path[lo], path[hi]);
    const Count d = delta_direct(a, &result.ops);
    result.entries.push_back({family, make_record(a, d, n)});
  };
  // Diagonal i covers path[i - 1] .. path[k - i] on a (k - 2i + 2)-cycle.
  for (int i = 1; k - 2 * i + 2 >= 3; ++i) {
    score(SweepFamily::kDiagonal, i - 1, k - i);
  }
  for (int i = 1; k - 2 * i + 2 >= 4; ++i) {
    score(SweepFamily::kShiftX, i, k - i);
  }
  for (int i = 1; k - 2 * i + 2 >= 4; ++i) {
    score(SweepFamily::kShiftY, i - 1, k - i - 1);
  }
  return result;
}

}  // namespace inset
