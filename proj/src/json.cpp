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

#include "inset/json.hpp"

namespace inset {

namespace {

template <typename T>
Json optional_json(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json to_json(const FamilyOptimum& f) {
  Json j;
  j["k"] = f.k;
  j["w_x"] = f.w_x;
  j["w_y"] = f.w_y;
  j["value"] = f.value;
  j["best_split_value"] = f.best_split_value;
  j["best_split_w_x"] = f.best_split_w_x;
  j["balanced_is_optimal"] = f.balanced_is_optimal;
  return j;
}

Json to_json(const CriticalPoint& c) {
  Json j;
  j["formula"] = case_formula_name(c.formula);
  j["half_integral"] = c.half_integral;
  j["numerator"] = c.numerator;
  j["denominator"] = c.denominator;
  j["value"] = c.value;
  j["candidates"] = Json::array();
  for (const auto& cand : c.candidates) {
    Json e;
    e["k"] = cand.k;
    e["claimed"] = cand.claimed;
    e["family"] = cand.family;
    j["candidates"].push_back(e);
  }
  return j;
}

Json to_json(const ExhaustiveScan& s) {
  Json j;
  j["n"] = s.n;
  j["trees"] = s.trees;
  j["pairs"] = s.pairs;
  j["max_delta"] = s.max_delta;
  j["argmax_rank"] = s.argmax_rank;
  j["argmax_pair"] = to_json(s.argmax_pair);
  j["min_delta"] = s.min_delta;
  j["unit_pairs"] = s.unit_pairs;
  j["lower_bound_violations"] = s.lower_bound_violations;
  return j;
}

}  // namespace

Json to_json(const Rational& r) {
  Json j;
  j["exact"] = r.to_string();
  j["decimal"] = r.to_double();
  return j;
}

Json to_json(const VertexPair& p) { return Json::array({p.first, p.second}); }

Json to_json(const DeltaRecord& r) {
  Json j;
  j["x"] = r.x;
  j["y"] = r.y;
  j["k"] = r.k;
  j["d_prime"] = r.d_prime;
  j["ad_prime"] = to_json(r.ad_prime);
  return j;
}

std::string_view sweep_family_name(SweepFamily f) {
  switch (f) {
    case SweepFamily::kDiagonal: return "diagonal";
    case SweepFamily::kShiftX: return "shift_x";
    case SweepFamily::kShiftY: return "shift_y";
  }
  return "diagonal";
}

Json to_json(const SweepEntry& e) {
  Json j = to_json(e.record);
  j["family"] = sweep_family_name(e.family);
  return j;
}

Json to_json(const SearchReport& r) {
  Json j;
  j["strategy"] = strategy_name(r.strategy);
  j["best_pairs"] = Json::array();
  for (const auto& p : r.best_pairs) j["best_pairs"].push_back(to_json(p));
  j["best_delta"] = r.best_delta;
  j["best_ad_prime"] = to_json(r.best_ad_prime);
  j["evaluated"] = r.evaluated;
  j["pruned"] = r.pruned;
  return j;
}

Json to_json(const BoundsReport& r) {
  Json j;
  j["n"] = r.n;
  j["claimed_upper"] = optional_json(r.claimed_upper);
  j["family_max"] = r.family_max;
  j["family_argmax"] = to_json(r.family_argmax);
  j["family_oracle_delta"] = r.family_oracle_delta;
  j["remark_window"] = Json::array({r.remark_window_lo, r.remark_window_hi});
  j["case_values"] = Json::array();
  for (const CaseValue& c : r.case_values) {
    Json e;
    e["k"] = c.k;
    e["formula"] = case_formula_name(c.formula);
    e["claimed"] = c.claimed;
    e["family"] = c.family;
    j["case_values"].push_back(e);
  }
  j["critical_points"] = Json::array();
  for (const auto& c : r.critical_points) {
    j["critical_points"].push_back(to_json(c));
  }
  j["empirical_max"] = optional_json(r.empirical_max());
  j["empirical_oracle_delta"] = optional_json(r.empirical_oracle_delta);
  j["exhaustive"] = r.exhaustive ? to_json(*r.exhaustive) : Json(nullptr);
  j["discrepancies"] = Json::array();
  for (const Discrepancy& d : r.discrepancies) {
    Json e;
    e["kind"] = d.kind;
    e["claimed"] = {{"name", d.claimed_name}, {"value", d.claimed}};
    e["computed"] = {{"name", d.computed_name}, {"value", d.computed}};
    j["discrepancies"].push_back(e);
  }
  return j;
}

Json to_json(const Tree& tree) {
  Json j;
  j["n"] = tree.size();
  j["edges"] = Json::array();
  for (const auto& e : tree.edges()) j["edges"].push_back(to_json(e));
  return j;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace inset
