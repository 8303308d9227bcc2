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

#include "odorqa/expr.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "odorqa/errors.hpp"

namespace odo {
namespace {

int64_t checked(__int128 v) {
  if (v > std::numeric_limits<int64_t>::max() ||
      v < std::numeric_limits<int64_t>::min()) {
    throw DomainError("eps expression: coefficient overflow");
  }
  return static_cast<int64_t>(v);
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ExactDistance parse() {
    ExactDistance v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("bad eps expression \"" + std::string(s_) + "\" at " +
                      std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExactDistance expr() {
    ExactDistance v = term();
    for (;;) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  ExactDistance term() {
    ExactDistance v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        v = divide(v, unary());
      } else {
        return v;
      }
    }
  }

  ExactDistance divide(const ExactDistance& x, const ExactDistance& d) {
    if (d.degree() > 0) fail("division by a non-constant");
    if (d.is_zero()) fail("division by zero");
    // x / (c / e) = x * e / c
    int64_t c = d.coeffs()[0];
    int64_t e = d.den();
    if (c < 0) {
      c = -c;
      e = -e;
    }
    std::vector<int64_t> coeffs;
    for (int64_t v : x.coeffs()) coeffs.push_back(checked(__int128{v} * e));
    return ExactDistance(std::move(coeffs), checked(__int128{x.den()} * c));
  }

  ExactDistance unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  ExactDistance power() {
    ExactDistance base = atom();
    if (!eat('^')) return base;
    skip();
    size_t start = pos_;
    int64_t n = integer();
    if (pos_ == start) fail("exponent must be a non-negative integer");
    if (n > Alpha::kMaxPower) fail("exponent too large");
    ExactDistance out = ExactDistance::constant(1);
    for (int64_t i = 0; i < n; ++i) out = out * base;
    return out;
  }

  int64_t integer() {
    int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = checked(__int128{v} * 10 + (s_[pos_] - '0'));
      ++pos_;
    }
    return v;
  }

  ExactDistance atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExactDistance v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (c == 'a') {
      ++pos_;
      return ExactDistance::alpha_power(1);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t start = pos_;
      int64_t num = integer();
      int64_t den = 1;
      if (pos_ < s_.size() && s_[pos_] == '.') {
        ++pos_;
        size_t frac = pos_;
        while (pos_ < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          num = checked(__int128{num} * 10 + (s_[pos_] - '0'));
          den = checked(__int128{den} * 10);
          ++pos_;
        }
        if (pos_ == frac && frac == start + 1) fail("lone '.'");
      }
      return ExactDistance::constant(num, den);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

ExactDistance parse_eps(std::string_view text) {
  if (text.empty()) throw DomainError("empty eps expression");
  return Parser(text).parse();
}

}  // namespace odo
