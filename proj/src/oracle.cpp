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

#include "inset/oracle.hpp"

#include <algorithm>

namespace inset {

SimpleGraph::SimpleGraph(Vertex n) : adjacency_(n) {}

SimpleGraph SimpleGraph::from_tree(const Tree& tree) {
  SimpleGraph g(tree.size());
  for (const auto& e : tree.edges()) g.add_edge(e.first, e.second);
  return g;
}

SimpleGraph SimpleGraph::with_inset_edge(const Tree& tree, Vertex x,
                                         Vertex y) {
  if (!tree.contains(x) || !tree.contains(y)) {
    throw Error(ErrorCode::kIdOutOfRange,
                "pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
  }
  if (x == y) {
    throw Error(ErrorCode::kSameVertex,
                "endpoints coincide at " + std::to_string(x));
  }
  if (tree.adjacent(x, y)) {
    throw Error(ErrorCode::kAdjacentPair,
                std::to_string(x) + " and " + std::to_string(y) +
                    " are adjacent");
  }
  SimpleGraph g = from_tree(tree);
  g.add_edge(x, y);
  return g;
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= size() || v >= size()) {
    throw Error(ErrorCode::kIdOutOfRange,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  if (u == v) {
    throw Error(ErrorCode::kSameVertex, "self-loop at " + std::to_string(u));
  }
  if (std::find(adjacency_[u].begin(), adjacency_[u].end(), v) !=
      adjacency_[u].end()) {
    throw Error(ErrorCode::kDuplicateEdge,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
}

std::vector<int> SimpleGraph::distances_from(Vertex source) const {
  std::vector<int> dist(size(), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : adjacency_[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Count wiener_brute(const SimpleGraph& graph) {
  Count total = 0;
  for (Vertex s = 0; s < graph.size(); ++s) {
    const std::vector<int> dist = graph.distances_from(s);
    for (Vertex t = s + 1; t < graph.size(); ++t) {
      if (dist[t] < 0) {
        throw Error(ErrorCode::kDisconnected,
                    std::to_string(t) + " unreachable from " +
                        std::to_string(s));
      }
      total += dist[t];
    }
  }
  return total;
}

Count wiener_tree_linear(const Tree& tree) {
  const Vertex n = tree.size();
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> order{0};
  order.reserve(n);
  parent[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : tree.neighbors(order[head])) {
      if (parent[w] < 0) {
        parent[w] = order[head];
        order.push_back(w);
      }
    }
  }
  std::vector<Count> size(n, 1);
  Count total = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it == 0) continue;
    total += size[*it] * (n - size[*it]);
    size[parent[*it]] += size[*it];
  }
  return total;
}

Count delta_oracle(const Tree& tree, Vertex x, Vertex y) {
  return delta_oracle(tree, wiener_tree_linear(tree), x, y);
}

Count delta_oracle(const Tree& tree, Count tree_wiener, Vertex x, Vertex y) {
  return tree_wiener - wiener_brute(SimpleGraph::with_inset_edge(tree, x, y));
}

Count set_distance(const SimpleGraph& graph, std::span<const Vertex> a,
                   std::span<const Vertex> b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::kEmptySet, "set_distance needs non-empty sets");
  }
  std::vector<char> in_a(graph.size(), 0);
  std::vector<char> in_b(graph.size(), 0);
  for (Vertex v : a) in_a.at(v) = 1;
  for (Vertex v : b) in_b.at(v) = 1;

  Count total = 0;
  for (Vertex u = 0; u < graph.size(); ++u) {
    if (!in_a[u] && !in_b[u]) continue;
    const std::vector<int> dist = graph.distances_from(u);
    for (Vertex v = u + 1; v < graph.size(); ++v) {
      const bool qualifies = (in_a[u] && in_b[v]) || (in_b[u] && in_a[v]);
      if (!qualifies) continue;
      if (dist[v] < 0) {
        throw Error(ErrorCode::kDisconnected,
                    std::to_string(v) + " unreachable from " +
                        std::to_string(u));
      }
      total += dist[v];
    }
  }
  return total;
}

}  // namespace inset
