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

#include "inset/rooted_tree.hpp"

#include <algorithm>

namespace inset {

RootedTree::RootedTree(const Tree& tree, Vertex root)
    : parent_(tree.size(), -1),
      depth_(tree.size(), 0),
      subtree_(tree.size(), 1) {
  if (!tree.contains(root)) {
    throw Error(ErrorCode::kIdOutOfRange, "root " + std::to_string(root));
  }
  std::vector<Vertex> order;
  order.reserve(tree.size());
  order.push_back(root);
  parent_[root] = root;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex v = order[head];
    for (Vertex w : tree.neighbors(v)) {
      if (w != parent_[v]) {
        parent_[w] = v;
        depth_[w] = depth_[v] + 1;
        order.push_back(w);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != root) subtree_[parent_[*it]] += subtree_[*it];
  }
}

int RootedTree::distance(Vertex u, Vertex v) const {
  int d = 0;
  while (u != v) {
    if (depth_[u] < depth_[v]) std::swap(u, v);
    u = parent_[u];
    ++d;
  }
  return d;
}

std::vector<Vertex> RootedTree::path(Vertex x, Vertex y) const {
  if (x < 0 || x >= size() || y < 0 || y >= size()) {
    throw Error(ErrorCode::kIdOutOfRange,
                "pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
  }
  if (x == y) {
    throw Error(ErrorCode::kSameVertex,
                "endpoints coincide at " + std::to_string(x));
  }
  std::vector<Vertex> from_x;
  std::vector<Vertex> from_y;
  while (x != y) {
    if (depth_[x] >= depth_[y]) {
      from_x.push_back(x);
      x = parent_[x];
    } else {
      from_y.push_back(y);
      y = parent_[y];
    }
  }
  from_x.push_back(x);
  from_x.insert(from_x.end(), from_y.rbegin(), from_y.rend());
  return from_x;
}

Count RootedTree::side_size(Vertex from, Vertex to) const {
  return parent_[to] == from ? subtree_[to] : size() - subtree_[from];
}

CycleAnatomy RootedTree::anatomize(Vertex x, Vertex y) const {
  const std::vector<Vertex> p = path(x, y);
  if (p.size() < 3) {
    throw Error(ErrorCode::kAdjacentPair,
                std::to_string(x) + " and " + std::to_string(y) +
                    " are adjacent");
  }
  std::vector<Count> weights(p.size(), size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) weights[i] -= side_size(p[i], p[i - 1]);
    if (i + 1 < p.size()) weights[i] -= side_size(p[i], p[i + 1]);
  }
  return anatomy_from_path(p, weights);
}

}  // namespace inset
