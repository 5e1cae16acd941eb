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

// Coefficient-matrix form of the inset-edge saving.
//
// For a k-cycle with k' = floor(k/2):
//   D_k[i][j] = 2(k' - i - j + 1)  when i + j <= k', else 0
//   O_k[i][j] = 1                  when i + j - 1 <= k', else 0
//   F_k = D_k + O_k for odd k, D_k for even k
// and the saving equals the norm one of F_k (.) (w_x w_y^T), where (.) is the
// entrywise product. Indices are 1-based cycle indices throughout.

#ifndef INSET_MATRIX_FORM_HPP_
#define INSET_MATRIX_FORM_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "inset/tree.hpp"

namespace inset {

// Dense non-negative integer matrix, row-major, 1-based accessors.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(
      static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Count& at(int i, int j) { return data_[index(i, j)]; }
  Count at(int i, int j) const { return data_[index(i, j)]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * cols_ + (j - 1);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Count> data_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix hadamard(const IntMatrix& a, const IntMatrix& b);
// Sum of absolute entries.
Count norm_one(const IntMatrix& m);
IntMatrix outer_product(std::span<const Count> column, std::span<const Count> row);

struct CoefficientMatrix {
  int k = 0;
  int k_prime = 0;
  IntMatrix entries;
};

// Throw Error{KTooSmall} for k < 3.
IntMatrix build_D(int k);
IntMatrix build_O(int k);
CoefficientMatrix build_F(int k);

// k' above which delta_via_matrix stops materializing F_k and W.
inline constexpr int kDefaultMaterializeCap = 4096;

// Norm one of F_k (.) W. Up to `materialize_cap` the matrices are built
// explicitly; above it the same sum is accumulated entry by entry from the
// D_k / O_k definitions without storage.
Count delta_via_matrix(const CycleAnatomy& anatomy,
                       int materialize_cap = kDefaultMaterializeCap);

}  // namespace inset

#endif  // INSET_MATRIX_FORM_HPP_
