// Copyright 2026 The Biforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIFORGE_CLI_HPP_
#define BIFORGE_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace biforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // report failures, --expect mismatch
inline constexpr int kExitUsage = 2;        // usage, parse and sort errors
inline constexpr int kExitLanguage = 3;     // language or recognizer violation
inline constexpr int kExitStuck = 4;        // rewrite engine stuck

// Runs one invocation; `args` excludes the program name. Results go to
// `out` (or to the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biforge::cli

#endif  // BIFORGE_CLI_HPP_
