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

#ifndef INSET_DELTA_HPP_
#define INSET_DELTA_HPP_

#include <cstdint>

#include "inset/tree.hpp"

namespace inset {

// Decrease of the Wiener index (d_prime) and of the average distance
// (ad_prime) caused by one inset edge.
struct DeltaRecord {
  Vertex x = 0;
  Vertex y = 0;
  int k = 0;
  Count d_prime = 0;
  Rational ad_prime;

  friend bool operator==(const DeltaRecord&, const DeltaRecord&) = default;
};

// Saving of the cross pair (x_i, y_j), 1-based cycle indices, on a k-cycle:
// 2 d_T(x_i, y_j) - k when positive, else 0.
constexpr Count pair_saving(int k, int i, int j) {
  const Count twice_d_minus_k = 2 * static_cast<Count>(k + 1 - i - j) - k;
  return twice_d_minus_k > 0 ? twice_d_minus_k : 0;
}

// Largest i + j with a positive saving: 2(k + 1 - s) > k iff s <= ceil(k/2).
constexpr int max_saving_index_sum(int k) { return (k + 1) / 2; }

// Sum over cross pairs (x_i, y_j) with 2 d_T(x_i, y_j) > k of
// (2 d_T(x_i, y_j) - k) w_{x_i} w_{y_j}. Only pairs with
// i + j <= ceil(k/2) are visited. If `ops` is non-null it is incremented once
// per weight product evaluated.
Count delta_direct(const CycleAnatomy& anatomy, std::uint64_t* ops = nullptr);

// D' / C(n, 2) in lowest terms. Throws Error{OutOfDomain} for n < 2.
Rational ad_prime(Count d_prime, Count n);

DeltaRecord make_record(const CycleAnatomy& anatomy, Count d_prime, Count n);

}  // namespace inset

#endif  // INSET_DELTA_HPP_
