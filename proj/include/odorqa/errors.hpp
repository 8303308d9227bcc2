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

#ifndef ODORQA_ERRORS_HPP_
#define ODORQA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace odo {

// Bad argument: wrong length, alpha out of range, malformed expression.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request would exceed a memory or word-length cap.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No admissible k reaches the requested tolerance.
class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(const std::string& what, double best_radius, int best_k)
      : std::runtime_error(what), best_radius_(best_radius), best_k_(best_k) {}

  double best_radius() const { return best_radius_; }
  int best_k() const { return best_k_; }

 private:
  double best_radius_;
  int best_k_;
};

}  // namespace odo

#endif  // ODORQA_ERRORS_HPP_
