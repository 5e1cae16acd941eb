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

#ifndef INSET_TREE_HPP_
#define INSET_TREE_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "inset/types.hpp"

namespace inset {

// Immutable unweighted tree on vertices 0..n-1.
//
// Construction validates: exactly n-1 edges, no self-loops, no duplicate
// edges, every id in range, and a single BFS reaches all n vertices.
// Neighbor lists are sorted, so adjacency queries are O(log deg).
class Tree {
 public:
  // Throws Error{IdOutOfRange, DuplicateEdge, NotATree}.
  static Tree from_edges(Vertex n, std::span<const VertexPair> edges);

  Vertex size() const noexcept { return n_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  // Normalized (min, max) pairs sorted lexicographically.
  const std::vector<VertexPair>& edges() const noexcept { return edges_; }

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Tree() = default;

  Vertex n_ = 0;
  std::vector<int> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<VertexPair> edges_;
};

// Edge-list document: first non-comment line is n, then one "u v" line per
// edge. '#' starts a comment that runs to end of line; LF or CRLF.
// Throws Error{MalformedLine, NotATree, DuplicateEdge, IdOutOfRange}.
Tree parse_tree(std::string_view text);

// Inverse of parse_tree: LF line endings, header, then edges sorted by
// (min, max).
std::string to_edge_list(const Tree& tree);

// Single-source BFS. result[v] = d_T(source, v).
std::vector<int> bfs_distances(const Tree& tree, Vertex source);

// The unique simple path x..y, both ends included.
std::vector<Vertex> path_between(const Tree& tree, Vertex x, Vertex y);

// Vertices of degree one, ascending.
std::vector<Vertex> leaves(const Tree& tree);

// Decomposition of the cycle created by the inset edge xy.
//
// With k = d_T(x, y) + 1 and k' = floor(k / 2), the cycle splits into the
// x-side x_1..x_k' (closer to x), the y-side y_1..y_k' (closer to y), and
// for odd k a single equidistant middle vertex. x_1 = x, y_1 = y and
// d_T(x_i, y_j) = k + 1 - i - j. Each cycle vertex v carries w_v, the size
// of the component containing v once the k - 1 path edges are removed.
//
// Containers are 0-based; element [i - 1] holds cycle index i.
struct CycleAnatomy {
  Vertex x = 0;
  Vertex y = 0;
  int k = 0;
  int k_prime = 0;
  std::vector<Vertex> x_side;
  std::vector<Vertex> y_side;
  std::optional<Vertex> middle;
  std::vector<Count> weights_x;
  std::vector<Count> weights_y;
  std::optional<Count> weight_middle;

  // Sum of every hanging weight; equals n for a valid anatomy.
  Count total_weight() const;
};

// Deletes the k - 1 path edges and sizes every component in one O(n)
// traversal. Throws Error{SameVertex, AdjacentPair, IdOutOfRange}.
CycleAnatomy anatomize(const Tree& tree, Vertex x, Vertex y);

// Assembles an anatomy from the x..y path and the hanging weight of each
// path vertex (both in path order). Shared by every anatomy builder.
CycleAnatomy anatomy_from_path(std::span<const Vertex> path,
                               std::span<const Count> path_weights);

}  // namespace inset

#endif  // INSET_TREE_HPP_
