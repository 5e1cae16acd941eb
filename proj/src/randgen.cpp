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

#include "inset/randgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace inset {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void require_order(Vertex n) {
  if (n < 2) {
    throw Error(ErrorCode::kOutOfDomain,
                "labeled trees need n >= 2, got " + std::to_string(n));
  }
}

Tree draw_tree(Vertex n, SplitMix64& gen) {
  std::vector<Vertex> code(n - 2);
  for (Vertex& c : code) c = static_cast<Vertex>(gen.below(n));
  return prufer_decode(n, code);
}

}  // namespace

std::uint64_t SplitMix64::next() {
  state_ += kGolden;
  return mix(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Reject the low sliver that would bias the modulo.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

double SplitMix64::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix(seed + kGolden * (index + 1));
}

Tree prufer_decode(Vertex n, std::span<const Vertex> code) {
  require_order(n);
  if (static_cast<Vertex>(code.size()) != n - 2) {
    throw Error(ErrorCode::kOutOfDomain,
                "Pruefer code for n = " + std::to_string(n) + " needs " +
                    std::to_string(n - 2) + " symbols");
  }
  std::vector<int> degree(n, 1);
  for (Vertex c : code) {
    if (c < 0 || c >= n) {
      throw Error(ErrorCode::kOutOfDomain,
                  "Pruefer symbol " + std::to_string(c) + " out of range");
    }
    ++degree[c];
  }
  std::vector<VertexPair> edges;
  edges.reserve(n - 1);
  Vertex ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex v : code) {
    edges.push_back({leaf, v});
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({leaf, n - 1});
  return Tree::from_edges(n, edges);
}

std::vector<Vertex> prufer_encode(const Tree& tree) {
  const Vertex n = tree.size();
  require_order(n);
  // Root at n - 1 so every other vertex has a parent.
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> stack{n - 1};
  parent[n - 1] = n - 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : tree.neighbors(v)) {
      if (parent[w] < 0) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = tree.degree(v);

  std::vector<Vertex> code;
  code.reserve(n - 2);
  Vertex ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex i = 0; i < n - 2; ++i) {
    const Vertex next = parent[leaf];
    code.push_back(next);
    if (--degree[next] == 1 && next < ptr) {
      leaf = next;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  return code;
}

std::uint64_t labeled_tree_count(Vertex n) {
  require_order(n);
  std::uint64_t total = 1;
  for (Vertex i = 0; i < n - 2; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / n) {
      throw Error(ErrorCode::kOutOfDomain,
                  "n^(n-2) overflows for n = " + std::to_string(n));
    }
    total *= static_cast<std::uint64_t>(n);
  }
  return total;
}

std::vector<Vertex> prufer_code_from_rank(Vertex n, std::uint64_t rank) {
  require_order(n);
  std::vector<Vertex> code(n - 2);
  for (auto it = code.rbegin(); it != code.rend(); ++it) {
    *it = static_cast<Vertex>(rank % n);
    rank /= n;
  }
  return code;
}

Tree random_labeled_tree(Vertex n, std::uint64_t seed) {
  require_order(n);
  SplitMix64 gen(seed);
  return draw_tree(n, gen);
}

Corpus::Corpus(Vertex n_min, Vertex n_max, std::uint64_t seed,
               std::size_t count)
    : n_min_(n_min), n_max_(n_max), seed_(seed), count_(count) {
  require_order(n_min);
  if (n_max < n_min) {
    throw Error(ErrorCode::kOutOfDomain, "corpus size range is empty");
  }
}

Tree Corpus::tree(std::size_t index) const {
  SplitMix64 gen(derive_seed(seed_, index));
  const Vertex n =
      n_min_ + static_cast<Vertex>(gen.below(
                   static_cast<std::uint64_t>(n_max_ - n_min_) + 1));
  return draw_tree(n, gen);
}

LeafStats leaf_stats(Vertex n, std::size_t samples, std::uint64_t seed) {
  if (n < 3 || samples < 1) {
    throw Error(ErrorCode::kOutOfDomain,
                "leaf_stats needs n >= 3 and samples >= 1");
  }
  const Corpus corpus(n, seed, samples);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto leaf_count = static_cast<double>(leaves(corpus.tree(i)).size());
    sum += leaf_count;
    sum_sq += leaf_count * leaf_count;
  }
  const auto m = static_cast<double>(samples);
  LeafStats stats;
  stats.mean = sum / m;
  if (samples > 1) {
    const double variance = (sum_sq - m * stats.mean * stats.mean) / (m - 1);
    stats.standard_error = std::sqrt(std::max(variance, 0.0) / m);
  }
  return stats;
}

double expected_leaves(Vertex n) {
  const double nn = n;
  return nn * std::pow(1.0 - 1.0 / nn, nn - 2.0);
}

double claimed_expected_leaves(Vertex n) {
  const double nn = n;
  return nn * std::pow(1.0 - 1.0 / nn, nn - 1.0);
}

}  // namespace inset
