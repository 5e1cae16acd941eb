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

#ifndef INSET_TOOLS_CLI_HPP_
#define INSET_TOOLS_CLI_HPP_

#include <string>
#include <vector>

namespace inset::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  std::string command;
  std::string out;  // JSON document, newline-terminated
  std::string err;  // diagnostics
  int exit_code = kExitOk;
};

// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace inset::cli

#endif  // INSET_TOOLS_CLI_HPP_
