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

#include "inset/delta.hpp"

#include <algorithm>

namespace inset {

Count delta_direct(const CycleAnatomy& anatomy, std::uint64_t* ops) {
  const int k = anatomy.k;
  const int kp = anatomy.k_prime;
  const int max_sum = max_saving_index_sum(k);
  Count total = 0;
  std::uint64_t terms = 0;
  for (int i = 1; i <= kp && i + 1 <= max_sum; ++i) {
    const Count wx = anatomy.weights_x[i - 1];
    Count row = 0;
    const int j_max = std::min(kp, max_sum - i);
    for (int j = 1; j <= j_max; ++j) {
      row += pair_saving(k, i, j) * anatomy.weights_y[j - 1];
    }
    terms += static_cast<std::uint64_t>(j_max);
    total += wx * row;
  }
  if (ops) *ops += terms;
  return total;
}

Rational ad_prime(Count d_prime, Count n) {
  if (n < 2) {
    throw Error(ErrorCode::kOutOfDomain,
                "average distance needs n >= 2, got " + std::to_string(n));
  }
  return Rational(d_prime, n * (n - 1) / 2);
}

DeltaRecord make_record(const CycleAnatomy& anatomy, Count d_prime, Count n) {
  return {anatomy.x, anatomy.y, anatomy.k, d_prime, ad_prime(d_prime, n)};
}

}  // namespace inset
