// Copyright 2026 The holocode Authors
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


#pragma once

#include <iosfwd>
#include <string_view>

namespace holocode::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int {
  kSuccess = 0,
  kInvariantFailure = 2,
  kTimeoutBudget = 3,
  kBadInput = 4,
};

/// Runs the holocode command line. argv[0] is the program name. Results go to
/// `out`, diagnostics and warnings to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace holocode::cli
