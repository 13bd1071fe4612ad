// Copyright 2026 The Scramble Authors
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

#include <ostream>
#include <string>
#include <vector>

namespace scramble::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,   ///< self-dual checks reported a failure
  kUsage = 2,         ///< bad flags, bad config, out-of-range parameters
  kNumerical = 3,     ///< consistency check failed or no fit window exists
  kUnwritable = 4,    ///< output path cannot be created or written
  kMalformedCsv = 5,  ///< input CSV could not be parsed
};

/// Runs one command line. `args` excludes the program name. Data goes to
/// `out` when no --out path is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scramble::cli
