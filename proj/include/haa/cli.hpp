// Copyright 2026 The haalab Authors.
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

#ifndef HAA_CLI_HPP
#define HAA_CLI_HPP

#include <iosfwd>

namespace haa {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitInput = 2, kExitCompute = 3 };

/// Entry point of the `haalab` tool. Results go to `out` (or the `--out`
/// file), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace haa

#endif  // HAA_CLI_HPP
