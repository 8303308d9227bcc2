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

// Threshold expressions in the variable "a" (alpha), e.g. "a^2 - a^4",
// "1-a", "0.33" or "33/100". Grammar:
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*     divisors must be constants
//   unary := '-' unary | power
//   power := atom ('^' integer)?
//   atom  := integer | decimal | 'a' | '(' expr ')'

#ifndef ODORQA_EXPR_HPP_
#define ODORQA_EXPR_HPP_

#include <string_view>

#include "odorqa/exact.hpp"

namespace odo {

// Throws DomainError on malformed input.
ExactDistance parse_eps(std::string_view text);

}  // namespace odo

#endif  // ODORQA_EXPR_HPP_
