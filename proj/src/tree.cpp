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

#include "inset/tree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace inset {

namespace {

void require_vertex(const Tree& tree, Vertex v) {
  if (!tree.contains(v)) {
    throw Error(ErrorCode::kIdOutOfRange,
                "vertex " + std::to_string(v) + " not in 0.." +
                    std::to_string(tree.size() - 1));
  }
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\f\v";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

// Splits a comment-free, trimmed line into decimal integers. Returns false on
// anything that is not a whitespace-separated list of decimals.
bool split_integers(std::string_view line, std::vector<long long>& out) {
  out.clear();
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    long long value = 0;
    const char* begin = line.data() + pos;
    const char* end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) return false;
    if (ptr != end && *ptr != ' ' && *ptr != '\t') return false;
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  return true;
}

}  // namespace

Tree Tree::from_edges(Vertex n, std::span<const VertexPair> edges) {
  if (n < 1) throw Error(ErrorCode::kNotATree, "a tree needs n >= 1");
  Tree t;
  t.n_ = n;
  t.edges_.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n) {
      throw Error(ErrorCode::kIdOutOfRange,
                  "edge (" + std::to_string(e.first) + "," +
                      std::to_string(e.second) + ") outside 0.." +
                      std::to_string(n - 1));
    }
    if (e.first == e.second) {
      throw Error(ErrorCode::kNotATree,
                  "self-loop at " + std::to_string(e.first));
    }
    t.edges_.push_back(normalized(e.first, e.second));
  }
  std::sort(t.edges_.begin(), t.edges_.end());
  if (auto dup = std::adjacent_find(t.edges_.begin(), t.edges_.end());
      dup != t.edges_.end()) {
    throw Error(ErrorCode::kDuplicateEdge,
                "edge (" + std::to_string(dup->first) + "," +
                    std::to_string(dup->second) + ") listed twice");
  }
  if (static_cast<Vertex>(t.edges_.size()) != n - 1) {
    throw Error(ErrorCode::kNotATree,
                std::to_string(t.edges_.size()) + " edges on " +
                    std::to_string(n) + " vertices");
  }

  t.offsets_.assign(n + 1, 0);
  for (const auto& e : t.edges_) {
    ++t.offsets_[e.first + 1];
    ++t.offsets_[e.second + 1];
  }
  std::partial_sum(t.offsets_.begin(), t.offsets_.end(), t.offsets_.begin());
  t.adjacency_.resize(2 * t.edges_.size());
  std::vector<int> fill(t.offsets_.begin(), t.offsets_.end() - 1);
  for (const auto& e : t.edges_) {
    t.adjacency_[fill[e.first]++] = e.second;
    t.adjacency_[fill[e.second]++] = e.first;
  }
  for (Vertex v = 0; v < n; ++v) {
    std::sort(t.adjacency_.begin() + t.offsets_[v],
              t.adjacency_.begin() + t.offsets_[v + 1]);
  }

  // n - 1 edges plus connectivity rules out cycles.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  Vertex reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : t.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) {
    throw Error(ErrorCode::kNotATree,
                "disconnected: " + std::to_string(reached) + " of " +
                    std::to_string(n) + " vertices reachable from 0");
  }
  return t;
}

bool Tree::adjacent(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Tree parse_tree(std::string_view text) {
  std::optional<long long> n;
  std::vector<VertexPair> edges;
  std::vector<long long> fields;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto malformed = [&](const std::string& why) {
      return Error(ErrorCode::kMalformedLine,
                   "line " + std::to_string(line_no) + ": " + why);
    };
    if (!split_integers(line, fields)) throw malformed("expected integers");
    if (!n) {
      if (fields.size() != 1) throw malformed("header must be a single n");
      if (fields[0] < 1 || fields[0] > (1LL << 30)) {
        throw malformed("vertex count out of range");
      }
      n = fields[0];
      continue;
    }
    if (fields.size() != 2) throw malformed("edge line must be \"u v\"");
    for (long long id : fields) {
      if (id < 0 || id >= *n) {
        throw Error(ErrorCode::kIdOutOfRange,
                    "line " + std::to_string(line_no) + ": vertex " +
                        std::to_string(id) + " outside 0.." +
                        std::to_string(*n - 1));
      }
    }
    edges.push_back({static_cast<Vertex>(fields[0]),
                     static_cast<Vertex>(fields[1])});
  }
  if (!n) throw Error(ErrorCode::kMalformedLine, "missing header line");
  return Tree::from_edges(static_cast<Vertex>(*n), edges);
}

std::string to_edge_list(const Tree& tree) {
  std::string out = std::to_string(tree.size()) + "\n";
  for (const auto& e : tree.edges()) {
    out += std::to_string(e.first);
    out += ' ';
    out += std::to_string(e.second);
    out += '\n';
  }
  return out;
}

std::vector<int> bfs_distances(const Tree& tree, Vertex source) {
  require_vertex(tree, source);
  std::vector<int> dist(tree.size(), -1);
  std::vector<Vertex> queue;
  queue.reserve(tree.size());
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : tree.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<Vertex> path_between(const Tree& tree, Vertex x, Vertex y) {
  require_vertex(tree, x);
  require_vertex(tree, y);
  if (x == y) {
    throw Error(ErrorCode::kSameVertex,
                "endpoints coincide at " + std::to_string(x));
  }
  std::vector<Vertex> parent(tree.size(), -1);
  std::vector<Vertex> queue{x};
  parent[x] = x;
  for (std::size_t head = 0; head < queue.size() && parent[y] < 0; ++head) {
    const Vertex v = queue[head];
    for (Vertex w : tree.neighbors(v)) {
      if (parent[w] < 0) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> path;
  for (Vertex v = y; v != x; v = parent[v]) path.push_back(v);
  path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Vertex> leaves(const Tree& tree) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < tree.size(); ++v) {
    if (tree.degree(v) == 1) out.push_back(v);
  }
  return out;
}

Count CycleAnatomy::total_weight() const {
  Count total = weight_middle.value_or(0);
  for (Count w : weights_x) total += w;
  for (Count w : weights_y) total += w;
  return total;
}

CycleAnatomy anatomy_from_path(std::span<const Vertex> path,
                               std::span<const Count> path_weights) {
  CycleAnatomy a;
  a.k = static_cast<int>(path.size());
  a.k_prime = a.k / 2;
  a.x = path.front();
  a.y = path.back();
  a.x_side.reserve(a.k_prime);
  a.y_side.reserve(a.k_prime);
  a.weights_x.reserve(a.k_prime);
  a.weights_y.reserve(a.k_prime);
  for (int i = 0; i < a.k_prime; ++i) {
    a.x_side.push_back(path[i]);
    a.weights_x.push_back(path_weights[i]);
    a.y_side.push_back(path[a.k - 1 - i]);
    a.weights_y.push_back(path_weights[a.k - 1 - i]);
  }
  if (a.k % 2 == 1) {
    a.middle = path[a.k_prime];
    a.weight_middle = path_weights[a.k_prime];
  }
  return a;
}

CycleAnatomy anatomize(const Tree& tree, Vertex x, Vertex y) {
  const std::vector<Vertex> path = path_between(tree, x, y);
  if (path.size() < 3) {
    throw Error(ErrorCode::kAdjacentPair,
                std::to_string(x) + " and " + std::to_string(y) +
                    " are adjacent");
  }

  // Multi-source traversal seeded at every path vertex; path vertices are
  // pre-owned, so no component crosses a deleted path edge.
  std::vector<int> owner(tree.size(), -1);
  for (std::size_t i = 0; i < path.size(); ++i) {
    owner[path[i]] = static_cast<int>(i);
  }
  std::vector<Count> weights(path.size(), 1);
  std::vector<Vertex> stack;
  for (std::size_t i = 0; i < path.size(); ++i) {
    stack.push_back(path[i]);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : tree.neighbors(v)) {
        if (owner[w] < 0) {
          owner[w] = static_cast<int>(i);
          ++weights[i];
          stack.push_back(w);
        }
      }
    }
  }
  return anatomy_from_path(path, weights);
}

}  // namespace inset
