// Copyright 2026 The dqwalk Authors
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

#ifndef DQWALK_TOOLS_COMMANDS_HPP
#define DQWALK_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dqwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerification = 3;

/// Runs the command line `args` (without the program name). Human-readable
/// progress goes to `out`, diagnostics to `err`; data files go to the
/// output directory (--out, else $DQWALK_OUT, else the working directory).
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace dqwalk::cli

#endif
