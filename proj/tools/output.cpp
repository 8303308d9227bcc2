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

#include "output.hpp"

#include <charconv>
#include <cmath>

namespace odo::cli {

std::string RunConfig::str() const {
  std::string out = command_;
  for (const auto& [k, v] : fields_) {
    // Values carry no blanks so the header splits on spaces.
    std::string compact;
    for (char c : v) {
      if (c != ' ') compact += c;
    }
    out += " " + k + "=" + compact;
  }
  return out;
}

std::string version() { return ODORQA_VERSION; }

std::string header_line(const RunConfig& cfg) {
  return "odorqa " + version() + " " + cfg.str();
}

std::string decimal(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string rational_str(const Rational& r) {
  std::string out = boost::multiprecision::numerator(r).str();
  const BigInt den = boost::multiprecision::denominator(r);
  if (den != 1) out += "/" + den.str();
  return out;
}

Rational exact_of_double(double x) {
  int exp = 0;
  const double m = std::frexp(x, &exp);
  // m * 2^53 is an integer for every finite double.
  const BigInt mant(static_cast<int64_t>(std::ldexp(m, 53)));
  exp -= 53;
  if (exp >= 0) return Rational(mant << exp);
  return Rational(mant, BigInt(1) << -exp);
}

Json number(const Rational& r) {
  return Json{{"decimal", decimal(static_cast<double>(r))},
              {"rational", rational_str(r)}};
}

Json number(double x) {
  if (!std::isfinite(x)) return Json{{"decimal", decimal(x)}, {"rational", nullptr}};
  return Json{{"decimal", decimal(x)}, {"rational", rational_str(exact_of_double(x))}};
}

Json eps_json(const ExactDistance& eps, const Alpha& alpha) {
  const Rational r = eps.to_rational(alpha);
  return Json{{"expr", eps.str()},
              {"decimal", decimal(static_cast<double>(r))},
              {"rational", rational_str(r)}};
}

}  // namespace odo::cli
