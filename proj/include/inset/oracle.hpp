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

// Brute-force ground truth. Everything here runs all-pairs BFS and exists to
// check the closed-form paths; none of it is on a production code path.

#ifndef INSET_ORACLE_HPP_
#define INSET_ORACLE_HPP_

#include <span>
#include <vector>

#include "inset/tree.hpp"

namespace inset {

// Undirected simple graph. Connectivity is checked by the functions that
// need it, not at construction.
class SimpleGraph {
 public:
  explicit SimpleGraph(Vertex n);
  static SimpleGraph from_tree(const Tree& tree);
  // tree + {x, y}; the unicyclic graph xyT.
  static SimpleGraph with_inset_edge(const Tree& tree, Vertex x, Vertex y);

  // Throws Error{IdOutOfRange, SameVertex, DuplicateEdge}.
  void add_edge(Vertex u, Vertex v);

  Vertex size() const noexcept {
    return static_cast<Vertex>(adjacency_.size());
  }
  const std::vector<Vertex>& neighbors(Vertex v) const {
    return adjacency_[v];
  }

  // BFS distances from source; -1 marks unreachable vertices.
  std::vector<int> distances_from(Vertex source) const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
};

// Wiener index: sum of d(u, v) over unordered pairs. Throws
// Error{Disconnected}.
Count wiener_brute(const SimpleGraph& graph);

// Edge-split identity: each edge contributes n1 * n2. O(n).
Count wiener_tree_linear(const Tree& tree);

// D(T) - D(T + xy) by all-pairs BFS on both graphs.
// Throws Error{SameVertex, AdjacentPair, IdOutOfRange}.
Count delta_oracle(const Tree& tree, Vertex x, Vertex y);

// Same, with D(T) supplied by the caller (saves one pass when scoring many
// pairs of the same tree).
Count delta_oracle(const Tree& tree, Count tree_wiener, Vertex x, Vertex y);

// Sum of d(a, b) over unordered pairs {a, b} with a in A, b in B and a != b,
// each pair counted once. Disjoint sets give the full cross sum; A == B == V
// gives the Wiener index. Throws Error{EmptySet, Disconnected}.
Count set_distance(const SimpleGraph& graph, std::span<const Vertex> a,
                   std::span<const Vertex> b);

}  // namespace inset

#endif  // INSET_ORACLE_HPP_
