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

#ifndef INSET_RANDGEN_HPP_
#define INSET_RANDGEN_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "inset/tree.hpp"

namespace inset {

// SplitMix64. The whole generator state is the 64-bit seed, so a corpus is
// reproducible bit for bit on any platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform on [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform on [0, 1).
  double unit();

 private:
  std::uint64_t state_;
};

// Independent stream seed for element `index` of a seeded family.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Pruefer decoding: a length n - 2 code over 0..n-1 names one labeled tree.
// Throws Error{OutOfDomain} for n < 2, wrong length or out-of-range symbols.
Tree prufer_decode(Vertex n, std::span<const Vertex> code);
std::vector<Vertex> prufer_encode(const Tree& tree);

// The code with the given rank in base-n order (most significant first);
// rank in [0, n^(n-2)).
std::vector<Vertex> prufer_code_from_rank(Vertex n, std::uint64_t rank);
// n^(n-2). Throws Error{OutOfDomain} if it does not fit in 64 bits.
std::uint64_t labeled_tree_count(Vertex n);

// Uniform over all n^(n-2) labeled trees. Throws Error{OutOfDomain} for
// n < 2.
Tree random_labeled_tree(Vertex n, std::uint64_t seed);

// Seeded family of uniform labeled trees. Tree i depends only on
// (seed, i), so trees can be generated in any order or in parallel.
// With n_min < n_max each tree first draws its size uniformly from
// [n_min, n_max].
class Corpus {
 public:
  Corpus(Vertex n, std::uint64_t seed, std::size_t count)
      : Corpus(n, n, seed, count) {}
  Corpus(Vertex n_min, Vertex n_max, std::uint64_t seed, std::size_t count);

  std::size_t count() const noexcept { return count_; }
  Tree tree(std::size_t index) const;

 private:
  Vertex n_min_;
  Vertex n_max_;
  std::uint64_t seed_;
  std::size_t count_;
};

struct LeafStats {
  double mean = 0.0;
  double standard_error = 0.0;
};

// Sample mean of the leaf count over `samples` uniform labeled trees on n
// vertices. Throws Error{OutOfDomain} for n < 3 or samples < 1.
LeafStats leaf_stats(Vertex n, std::size_t samples, std::uint64_t seed);

// Exact expected leaf count of a uniform labeled tree:
// n (1 - 1/n)^(n - 2), which tends to n / e. A vertex is a leaf iff it is
// absent from the n - 2 uniform Pruefer symbols.
double expected_leaves(Vertex n);

// The published finite-n value n (1 - 1/n)^(n - 1). It undercounts the
// exact mean by a factor (1 - 1/n) and is kept only for audit output.
double claimed_expected_leaves(Vertex n);

}  // namespace inset

#endif  // INSET_RANDGEN_HPP_
