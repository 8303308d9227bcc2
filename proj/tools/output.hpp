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

// Formatting shared by the CLI subcommands. Nothing here depends on the
// locale.

#ifndef ODORQA_TOOLS_OUTPUT_HPP_
#define ODORQA_TOOLS_OUTPUT_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "odorqa/exact.hpp"

namespace odo::cli {

using Json = nlohmann::ordered_json;

// Ordered key=value pairs; str() is the canonical form recorded in headers.
class RunConfig {
 public:
  explicit RunConfig(std::string command) : command_(std::move(command)) {}

  void add(std::string key, std::string value) {
    fields_.emplace_back(std::move(key), std::move(value));
  }
  const std::string& command() const { return command_; }
  std::string str() const;

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::string version();
// "odorqa <version> <command> key=value ..."
std::string header_line(const RunConfig& cfg);

// Shortest round-trip decimal.
std::string decimal(double x);
std::string rational_str(const Rational& r);
// The exact rational value of a finite double.
Rational exact_of_double(double x);

// {"decimal": ..., "rational": ...}
Json number(const Rational& r);
Json number(double x);
// {"expr": ..., "decimal": ..., "rational": ...}
Json eps_json(const ExactDistance& eps, const Alpha& alpha);

}  // namespace odo::cli

#endif  // ODORQA_TOOLS_OUTPUT_HPP_
