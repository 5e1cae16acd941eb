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

#include <cstdlib>

namespace inset {

namespace {

void require_cycle(int k) {
  if (k < 3) {
    throw Error(ErrorCode::kKTooSmall,
                "cycle length must be >= 3, got " + std::to_string(k));
  }
}

void require_same_shape(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kOutOfDomain, "matrix shapes differ");
  }
}

Count d_entry(int k_prime, int i, int j) {
  return i + j <= k_prime ? 2 * static_cast<Count>(k_prime - i - j + 1) : 0;
}

Count o_entry(int k_prime, int i, int j) {
  return i + j - 1 <= k_prime ? 1 : 0;
}

}  // namespace

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  require_same_shape(a, b);
  IntMatrix out(a.rows(), a.cols());
  for (int i = 1; i <= a.rows(); ++i) {
    for (int j = 1; j <= a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  }
  return out;
}

IntMatrix hadamard(const IntMatrix& a, const IntMatrix& b) {
  require_same_shape(a, b);
  IntMatrix out(a.rows(), a.cols());
  for (int i = 1; i <= a.rows(); ++i) {
    for (int j = 1; j <= a.cols(); ++j) out.at(i, j) = a.at(i, j) * b.at(i, j);
  }
  return out;
}

Count norm_one(const IntMatrix& m) {
  Count total = 0;
  for (int i = 1; i <= m.rows(); ++i) {
    for (int j = 1; j <= m.cols(); ++j) total += std::llabs(m.at(i, j));
  }
  return total;
}

IntMatrix outer_product(std::span<const Count> column,
                        std::span<const Count> row) {
  IntMatrix out(static_cast<int>(column.size()), static_cast<int>(row.size()));
  for (int i = 1; i <= out.rows(); ++i) {
    for (int j = 1; j <= out.cols(); ++j) {
      out.at(i, j) = column[i - 1] * row[j - 1];
    }
  }
  return out;
}

IntMatrix build_D(int k) {
  require_cycle(k);
  const int kp = k / 2;
  IntMatrix d(kp, kp);
  for (int i = 1; i <= kp; ++i) {
    for (int j = 1; j <= kp; ++j) d.at(i, j) = d_entry(kp, i, j);
  }
  return d;
}

IntMatrix build_O(int k) {
  require_cycle(k);
  const int kp = k / 2;
  IntMatrix o(kp, kp);
  for (int i = 1; i <= kp; ++i) {
    for (int j = 1; j <= kp; ++j) o.at(i, j) = o_entry(kp, i, j);
  }
  return o;
}

CoefficientMatrix build_F(int k) {
  require_cycle(k);
  CoefficientMatrix f{k, k / 2, build_D(k)};
  if (k % 2 == 1) f.entries = f.entries + build_O(k);
  return f;
}

Count delta_via_matrix(const CycleAnatomy& anatomy, int materialize_cap) {
  const int k = anatomy.k;
  const int kp = anatomy.k_prime;
  if (kp <= materialize_cap) {
    const CoefficientMatrix f = build_F(k);
    return norm_one(hadamard(
        f.entries, outer_product(anatomy.weights_x, anatomy.weights_y)));
  }
  require_cycle(k);
  const bool odd = k % 2 == 1;
  Count total = 0;
  for (int i = 1; i <= kp; ++i) {
    Count row = 0;
    // Both D_k and O_k vanish once i + j > k' + 1.
    for (int j = 1; j <= kp && i + j <= kp + 1; ++j) {
      const Count coeff = d_entry(kp, i, j) + (odd ? o_entry(kp, i, j) : 0);
      row += coeff * anatomy.weights_y[j - 1];
    }
    total += anatomy.weights_x[i - 1] * row;
  }
  return total;
}

}  // namespace inset
