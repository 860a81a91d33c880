// Copyright 2026 The symcov Authors
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

#pragma once

#include <iosfwd>

namespace symcov::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;           // success / entangled
inline constexpr int kExitNotDetected = 1;  // negativity not found, or a failed row
inline constexpr int kExitUsage = 2;        // bad flags or input

/// Runs the command line. Data goes to `out` (or --output), diagnostics
/// to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symcov::cli
