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

#ifndef INSET_PARALLEL_HPP_
#define INSET_PARALLEL_HPP_

namespace inset {

// Environment variable consulted when no explicit thread count is given.
inline constexpr const char* kThreadsEnv = "INSET_THREADS";

// requested > 0 wins; otherwise INSET_THREADS if it parses as a positive
// integer; otherwise the OpenMP default (1 without OpenMP).
int resolve_threads(int requested = 0);

bool openmp_enabled();

}  // namespace inset

#endif  // INSET_PARALLEL_HPP_
