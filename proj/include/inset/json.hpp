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

// JSON documents for the CLI. Field order is fixed, so equal values always
// serialize to identical bytes.

#ifndef INSET_JSON_HPP_
#define INSET_JSON_HPP_

#include <json.hpp>

#include "inset/bounds.hpp"
#include "inset/delta.hpp"
#include "inset/search.hpp"
#include "inset/sweep.hpp"
#include "inset/tree.hpp"

namespace inset {

using Json = nlohmann::ordered_json;

// {"exact": "p/q", "decimal": p/q as a double}
Json to_json(const Rational& r);
Json to_json(const VertexPair& p);
Json to_json(const DeltaRecord& r);
Json to_json(const SweepEntry& e);
Json to_json(const SearchReport& r);
Json to_json(const BoundsReport& r);
Json to_json(const Tree& tree);

std::string_view sweep_family_name(SweepFamily f);

// Compact single-line dump followed by a newline.
std::string dump(const Json& j);

}  // namespace inset

#endif  // INSET_JSON_HPP_
