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

#ifndef INSET_ROOTED_TREE_HPP_
#define INSET_ROOTED_TREE_HPP_

#include <vector>

#include "inset/tree.hpp"

namespace inset {

// One O(n) rooting of a tree (parent, depth, subtree size) that answers
// distance and anatomy queries for any pair in O(d_T(x, y)).
//
// The hanging weight of a path vertex v is n minus the sizes of the sides
// cut off by its path edges: for a path neighbor c, that side is size(c)
// when c is a child of v and n - size(v) otherwise.
class RootedTree {
 public:
  explicit RootedTree(const Tree& tree, Vertex root = 0);

  Vertex size() const noexcept { return static_cast<Vertex>(parent_.size()); }
  Vertex parent(Vertex v) const { return parent_[v]; }
  int depth(Vertex v) const { return depth_[v]; }
  Count subtree_size(Vertex v) const { return subtree_[v]; }

  int distance(Vertex u, Vertex v) const;
  std::vector<Vertex> path(Vertex x, Vertex y) const;

  // Same contract as inset::anatomize.
  CycleAnatomy anatomize(Vertex x, Vertex y) const;

 private:
  // Size of the component holding `to` after deleting edge {from, to}.
  Count side_size(Vertex from, Vertex to) const;

  std::vector<Vertex> parent_;
  std::vector<int> depth_;
  std::vector<Count> subtree_;
};

}  // namespace inset

#endif  // INSET_ROOTED_TREE_HPP_
