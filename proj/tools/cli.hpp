// Copyright 2026 The odorqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ODORQA_TOOLS_CLI_HPP_
#define ODORQA_TOOLS_CLI_HPP_

#include <iosfwd>

namespace odo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // verify found a violation
inline constexpr int kExitDomain = 2;       // bad input or resource cap
inline constexpr int kExitTolerance = 3;    // tolerance unreachable

// Subcommands: orbit, matrix, integral, profile, extremes, scan-alpha,
// verify, bench.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace odo::cli

#endif  // ODORQA_TOOLS_CLI_HPP_
