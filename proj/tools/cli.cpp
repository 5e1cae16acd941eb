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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "inset/bounds.hpp"
#include "inset/delta.hpp"
#include "inset/json.hpp"
#include "inset/matrix_form.hpp"
#include "inset/oracle.hpp"
#include "inset/randgen.hpp"
#include "inset/rooted_tree.hpp"
#include "inset/search.hpp"
#include "inset/sweep.hpp"

namespace inset::cli {

namespace {

// Reading a tree file failed before any module was involved.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Tree load_tree(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_tree(text.str());
}

Json error_payload(std::string_view command, std::string_view name,
                   std::string_view message) {
  Json j;
  j["command"] = command;
  j["error"] = name;
  j["message"] = message;
  return j;
}

Json cmd_wiener(const std::string& file) {
  const Tree tree = load_tree(file);
  Json j;
  j["n"] = tree.size();
  const Count d = wiener_tree_linear(tree);
  j["D"] = d;
  j["AD"] = tree.size() >= 2 ? to_json(ad_prime(d, tree.size())) : Json(nullptr);
  return j;
}

Json cmd_delta(const std::string& file, const std::vector<Vertex>& edge,
               const std::string& method) {
  const Tree tree = load_tree(file);
  const CycleAnatomy a = anatomize(tree, edge[0], edge[1]);
  Count d = 0;
  if (method == "direct") {
    d = delta_direct(a);
  } else if (method == "matrix") {
    d = delta_via_matrix(a);
  } else {
    d = delta_oracle(tree, edge[0], edge[1]);
  }
  Json j = to_json(make_record(a, d, tree.size()));
  j["method"] = method;
  return j;
}

Json cmd_sweep(const std::string& file, const std::vector<Vertex>& pair) {
  const Tree tree = load_tree(file);
  const SweepResult result = sweep_path(tree, pair[0], pair[1]);
  Json j;
  j["x"] = pair[0];
  j["y"] = pair[1];
  j["entries"] = Json::array();
  for (const SweepEntry& e : result.entries) j["entries"].push_back(to_json(e));
  j["ops"] = result.ops;
  return j;
}

Json cmd_best(const std::string& file, const std::string& strategy,
              int threads) {
  const Tree tree = load_tree(file);
  return to_json(best_edge(tree, *parse_strategy(strategy), threads));
}

Json cmd_bounds(Vertex n, Vertex exhaustive_limit, int threads) {
  return to_json(audit(n, exhaustive_limit, threads));
}

Json cmd_extremal(Vertex n, int k, Count w_x, Count w_y,
                  const std::string& shape, const std::string& out) {
  const FamilyTree built = build_family_tree(
      n, k, w_x, w_y, shape == "path" ? AttachShape::kPath : AttachShape::kStar);
  const auto [x, y] = built.pair;
  const Count direct = delta_direct(anatomize(built.tree, x, y));
  Json j;
  j["n"] = n;
  j["k"] = k;
  j["w_x"] = w_x;
  j["w_y"] = w_y;
  j["shape"] = shape;
  j["pair"] = to_json(built.pair);
  j["family_delta"] = family_delta(n, k, w_x, w_y);
  j["d_prime"] = direct;
  j["oracle_d_prime"] = delta_oracle(built.tree, x, y);
  j["edges"] = to_json(built.tree)["edges"];
  if (!out.empty()) {
    std::ofstream file(out, std::ios::binary);
    if (!file) throw IoError("cannot write " + out);
    file << to_edge_list(built.tree);
    j["written"] = out;
  }
  return j;
}

Json cmd_random(Vertex n, Vertex n_max, std::size_t count, std::uint64_t seed,
                const std::string& stats) {
  if (n_max == 0) n_max = n;
  Json j;
  j["n"] = n;
  j["n_max"] = n_max;
  j["count"] = count;
  j["seed"] = seed;
  if (stats == "leaves") {
    if (n_max != n) {
      throw Error(ErrorCode::kOutOfDomain, "leaf statistics need a single n");
    }
    const LeafStats s = leaf_stats(n, count, seed);
    j["stats"] = "leaves";
    j["mean"] = s.mean;
    j["standard_error"] = s.standard_error;
    j["expected"] = expected_leaves(n);
    j["claimed_expected"] = claimed_expected_leaves(n);
    j["n_over_e"] = n / std::exp(1.0);
    return j;
  }
  const Corpus corpus(n, n_max, seed, count);
  if (stats == "pruning") {
    Count pruned = 0;
    Count total = 0;
    double sum = 0.0;
    double lo = 1.0;
    double hi = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const Tree tree = corpus.tree(i);
      const Rational r = pruning_ratio(tree);
      const Count pairs = non_adjacent_pair_count(tree);
      pruned += pairs -
                static_cast<Count>(candidate_pairs(tree, Strategy::kPruned).size());
      total += pairs;
      sum += r.to_double();
      lo = std::min(lo, r.to_double());
      hi = std::max(hi, r.to_double());
    }
    const double e = std::exp(1.0);
    j["stats"] = "pruning";
    j["mean_ratio"] = count ? sum / static_cast<double>(count) : 0.0;
    j["min_ratio"] = count ? lo : 0.0;
    j["max_ratio"] = count ? hi : 0.0;
    j["pooled_ratio"] = total ? to_json(Rational(pruned, total)) : Json(nullptr);
    j["leaf_heuristic"] = 1.0 - std::pow((e - 1.0) / e, 2.0);
    return j;
  }
  j["trees"] = Json::array();
  for (std::size_t i = 0; i < count; ++i) {
    j["trees"].push_back(to_json(corpus.tree(i)));
  }
  return j;
}

// Runs every method on every non-adjacent pair; the first disagreement is
// reported as a Mismatch error.
Json cmd_verify(const std::string& file) {
  const Tree tree = load_tree(file);
  const RootedTree rooted(tree);
  const Count wiener = wiener_tree_linear(tree);
  Count checked = 0;
  for (Vertex u = 0; u < tree.size(); ++u) {
    for (Vertex v = u + 1; v < tree.size(); ++v) {
      if (tree.adjacent(u, v)) continue;
      const CycleAnatomy a = rooted.anatomize(u, v);
      const Count direct = delta_direct(a);
      const Count matrix = delta_via_matrix(a);
      const Count oracle = delta_oracle(tree, wiener, u, v);
      if (direct != matrix || direct != oracle) {
        throw Error(ErrorCode::kMismatch,
                    "pair (" + std::to_string(u) + "," + std::to_string(v) +
                        "): direct " + std::to_string(direct) + ", matrix " +
                        std::to_string(matrix) + ", oracle " +
                        std::to_string(oracle));
      }
      ++checked;
    }
  }
  Json j;
  j["n"] = tree.size();
  j["pairs_checked"] = checked;
  j["methods"] = Json::array({"direct", "matrix", "oracle"});
  j["mismatch"] = nullptr;
  return j;
}

Tree path_graph(Vertex n) {
  std::vector<VertexPair> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Tree::from_edges(n, edges);
}

Json cmd_bench(const std::vector<Vertex>& sizes, Vertex recompute_limit) {
  Json j;
  j["workload"] = "path P_n, pair (0, n-1)";
  j["rows"] = Json::array();
  for (Vertex n : sizes) {
    if (n < 4) throw Error(ErrorCode::kOutOfDomain, "bench sizes need n >= 4");
    const Tree tree = path_graph(n);
    const SweepResult sweep = sweep_path(tree, 0, n - 1);
    const auto k2 = static_cast<double>(n) * static_cast<double>(n);
    Json row;
    row["n"] = n;
    row["k"] = n;
    row["pairs"] = sweep.entries.size();
    row["sweep_ops"] = sweep.ops;
    row["sweep_ops_per_k2"] = static_cast<double>(sweep.ops) / k2;
    if (n <= recompute_limit) {
      const SweepResult fresh = recompute_path(tree, 0, n - 1);
      row["recompute_ops"] = fresh.ops;
      row["recompute_over_sweep"] =
          static_cast<double>(fresh.ops) / static_cast<double>(sweep.ops);
    } else {
      row["recompute_ops"] = nullptr;
      row["recompute_over_sweep"] = nullptr;
    }
    j["rows"].push_back(row);
  }
  return j;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Wiener-index decrease under one inset edge on trees", "inset"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "inset 1.0.0");

  std::string file;
  std::vector<Vertex> pair;
  std::string method = "direct";
  std::string strategy = "exhaustive";
  int threads = 0;
  Vertex n = 0;
  Vertex n_max = 0;
  Vertex exhaustive_limit = kDefaultExhaustiveLimit;
  int k = 0;
  Count w_x = 0;
  Count w_y = 0;
  std::string shape = "star";
  std::string out;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::string stats;
  std::vector<Vertex> sizes = {256, 512, 1024, 2048, 4096, 8192};
  Vertex recompute_limit = 1024;

  const auto threads_option = [&](CLI::App* sub) {
    sub->add_option("--threads", threads,
                    "Worker threads (0: INSET_THREADS or the OpenMP default)")
        ->check(CLI::NonNegativeNumber);
  };

  auto* wiener = app.add_subcommand("wiener", "Wiener index D and AD of a tree");
  wiener->add_option("file", file, "Edge-list file")->required();

  auto* delta = app.add_subcommand("delta", "Saving of one inset edge");
  delta->add_option("file", file, "Edge-list file")->required();
  delta->add_option("-e,--edge", pair, "Inset edge U V")
      ->required()
      ->expected(2);
  delta->add_option("--method", method, "direct | matrix | oracle")
      ->check(CLI::IsMember({"direct", "matrix", "oracle"}));

  auto* sweep = app.add_subcommand("sweep", "Diagonal and shift sweep of a path");
  sweep->add_option("file", file, "Edge-list file")->required();
  sweep->add_option("-p,--pair", pair, "Outer pair X Y")
      ->required()
      ->expected(2);

  auto* best = app.add_subcommand("best", "Inset edges with maximum saving");
  best->add_option("file", file, "Edge-list file")->required();
  best->add_option("--strategy", strategy, "exhaustive | pruned | oracle | sweep")
      ->check(CLI::IsMember({"exhaustive", "pruned", "oracle", "sweep"}));
  threads_option(best);

  auto* bounds = app.add_subcommand("bounds", "Audit the closed-form extremal claims");
  bounds->add_option("--n", n, "Vertex count")->required();
  bounds->add_option("--exhaustive-limit", exhaustive_limit,
                     "Enumerate every labeled tree when n is at most this");
  threads_option(bounds);

  auto* extremal = app.add_subcommand("extremal", "Build a family tree");
  extremal->add_option("--n", n, "Vertex count")->required();
  extremal->add_option("--k", k, "Cycle length")->required();
  extremal->add_option("--wx", w_x, "Weight at x")->required();
  extremal->add_option("--wy", w_y, "Weight at y")->required();
  extremal->add_option("--shape", shape, "star | path")
      ->check(CLI::IsMember({"star", "path"}));
  extremal->add_option("--out", out, "Also write the edge list here");

  auto* random = app.add_subcommand("random", "Seeded uniform labeled trees");
  random->add_option("--n", n, "Vertex count (minimum with --n-max)")->required();
  random->add_option("--n-max", n_max, "Largest vertex count");
  random->add_option("--count", count, "Number of trees")->required();
  random->add_option("--seed", seed, "64-bit seed")->required();
  random->add_option("--stats", stats, "leaves | pruning")
      ->check(CLI::IsMember({"leaves", "pruning"}));

  auto* verify = app.add_subcommand("verify", "Cross-check all methods on every pair");
  verify->add_option("file", file, "Edge-list file")->required();

  auto* bench = app.add_subcommand("bench", "Operation counts, sweep vs recompute");
  bench->add_option("--sizes", sizes, "Path lengths")->delimiter(',');
  bench->add_option("--recompute-limit", recompute_limit,
                    "Largest n for the per-pair recompute baseline");

  CommandResult result;
  std::ostringstream out_stream;
  std::ostringstream err_stream;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_stream, err_stream);
    result.out = out_stream.str();
    result.err = err_stream.str();
    result.exit_code = code == 0 ? kExitOk : kExitUsage;
    return result;
  }

  CLI::App* chosen = app.get_subcommands().front();
  result.command = chosen->get_name();
  try {
    Json payload;
    if (chosen == wiener) {
      payload = cmd_wiener(file);
    } else if (chosen == delta) {
      payload = cmd_delta(file, pair, method);
    } else if (chosen == sweep) {
      payload = cmd_sweep(file, pair);
    } else if (chosen == best) {
      payload = cmd_best(file, strategy, threads);
    } else if (chosen == bounds) {
      payload = cmd_bounds(n, exhaustive_limit, threads);
    } else if (chosen == extremal) {
      payload = cmd_extremal(n, k, w_x, w_y, shape, out);
    } else if (chosen == random) {
      payload = cmd_random(n, n_max, count, seed, stats);
    } else if (chosen == verify) {
      payload = cmd_verify(file);
    } else {
      payload = cmd_bench(sizes, recompute_limit);
    }
    result.out = dump(payload);
  } catch (const Error& e) {
    result.out = dump(error_payload(result.command, e.name(), e.what()));
    result.err = std::string(e.what()) + "\n";
    result.exit_code = kExitDomain;
  } catch (const IoError& e) {
    result.out = dump(error_payload(result.command, "IoError", e.what()));
    result.err = std::string("IoError: ") + e.what() + "\n";
    result.exit_code = kExitDomain;
  }
  return result;
}

}  // namespace inset::cli
