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

#include "odorqa/exact.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "odorqa/errors.hpp"

namespace odo {
namespace {

constexpr int64_t kMaxAlphaDen = 1'000'000'000'000'000;  // 1e15

int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < -INT64_MAX) {
    throw DomainError("exact coefficient overflow");
  }
  return static_cast<int64_t>(v);
}

int64_t parse_int(std::string_view s, const char* what) {
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw DomainError(std::string("malformed ") + what + ": '" +
                      std::string(s) + "'");
  }
  return v;
}

}  // namespace

Alpha::Alpha(int64_t p, int64_t q) {
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q == 0) throw DomainError("alpha must lie in (0, 1/2)");
  int64_t g = std::gcd(p, q);
  if (g != 0) {
    p /= g;
    q /= g;
  }
  if (p <= 0 || static_cast<__int128>(2) * p >= q) {
    throw DomainError("alpha must lie in (0, 1/2)");
  }
  if (q > kMaxAlphaDen) throw DomainError("alpha denominator too large");
  p_ = p;
  q_ = q;
  pw_[0] = 1.0;
  pw_[1] = static_cast<double>(p_) / static_cast<double>(q_);
  for (int j = 2; j <= kMaxPower; ++j) pw_[j] = pw_[j - 1] * pw_[1];
}

Alpha Alpha::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Alpha(parse_int(text.substr(0, slash), "alpha"),
                 parse_int(text.substr(slash + 1), "alpha"));
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Alpha(parse_int(text, "alpha"), 1);
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = text.substr(dot + 1);
  if (frac.empty() || frac.size() > 15 ||
      frac.find_first_not_of("0123456789") != std::string_view::npos) {
    throw DomainError("malformed alpha: '" + std::string(text) + "'");
  }
  int64_t den = 1;
  for (size_t i = 0; i < frac.size(); ++i) den *= 10;
  int64_t w = whole.empty() ? 0 : parse_int(whole, "alpha");
  int64_t f = parse_int(frac, "alpha");
  return Alpha(checked(static_cast<__int128>(w) * den + f), den);
}

std::string Alpha::str() const {
  return std::to_string(p_) + "/" + std::to_string(q_);
}

ExactDistance::ExactDistance(std::vector<int64_t> coeffs, int64_t den)
    : c_(std::move(coeffs)), den_(den) {
  if (den_ == 0) throw DomainError("zero denominator");
  normalize();
}

void ExactDistance::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : c_) c = -c;
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) {
    den_ = 1;
    return;
  }
  int64_t g = den_;
  for (int64_t c : c_) g = std::gcd(g, c);
  if (g > 1) {
    den_ /= g;
    for (auto& c : c_) c /= g;
  }
}

ExactDistance ExactDistance::constant(int64_t num, int64_t den) {
  return ExactDistance(std::vector<int64_t>{num}, den);
}

ExactDistance ExactDistance::alpha_power(int j) {
  std::vector<int64_t> c(j + 1, 0);
  c[j] = 1;
  return ExactDistance(std::move(c));
}

ExactDistance ExactDistance::from_double(double x) {
  double scaled = std::nearbyint(std::ldexp(x, 40));
  if (!(std::fabs(scaled) < 0x1p62)) throw DomainError("value out of range");
  return ExactDistance(std::vector<int64_t>{static_cast<int64_t>(scaled)},
                       int64_t{1} << 40);
}

ExactDistance ExactDistance::operator-() const {
  ExactDistance r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

ExactDistance operator+(const ExactDistance& a, const ExactDistance& b) {
  int64_t l = std::lcm(a.den_, b.den_);
  int64_t fa = l / a.den_;
  int64_t fb = l / b.den_;
  std::vector<int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t j = 0; j < c.size(); ++j) {
    __int128 v = 0;
    if (j < a.c_.size()) v += static_cast<__int128>(a.c_[j]) * fa;
    if (j < b.c_.size()) v += static_cast<__int128>(b.c_[j]) * fb;
    c[j] = checked(v);
  }
  return ExactDistance(std::move(c), l);
}

ExactDistance operator-(const ExactDistance& a, const ExactDistance& b) {
  return a + (-b);
}

ExactDistance operator*(const ExactDistance& a, const ExactDistance& b) {
  if (a.is_zero() || b.is_zero()) return ExactDistance();
  std::vector<int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    for (size_t j = 0; j < b.c_.size(); ++j) {
      c[i + j] = checked(static_cast<__int128>(c[i + j]) +
                         static_cast<__int128>(a.c_[i]) * b.c_[j]);
    }
  }
  return ExactDistance(std::move(c),
                       checked(static_cast<__int128>(a.den_) * b.den_));
}

ExactDistance ExactDistance::times_alpha_power(int j) const {
  if (is_zero()) return *this;
  std::vector<int64_t> c(j, 0);
  c.insert(c.end(), c_.begin(), c_.end());
  return ExactDistance(std::move(c), den_);
}

ExactDistance ExactDistance::divided_by_alpha(const Alpha& alpha) const {
  if (is_zero()) return *this;
  if (c_[0] == 0) {
    return ExactDistance(std::vector<int64_t>(c_.begin() + 1, c_.end()), den_);
  }
  std::vector<int64_t> c(c_.size());
  for (size_t j = 0; j < c_.size(); ++j) {
    c[j] = checked(static_cast<__int128>(c_[j]) * alpha.den());
  }
  return ExactDistance(std::move(c),
                       checked(static_cast<__int128>(den_) * alpha.num()));
}

double ExactDistance::to_double(const Alpha& alpha) const {
  double s = 0.0;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] != 0) s += static_cast<double>(c_[j]) * alpha.pow(j);
  }
  return s / static_cast<double>(den_);
}

double ExactDistance::error_bound(const Alpha& alpha) const {
  double mag = 0.0;
  for (size_t j = 0; j < c_.size(); ++j) {
    mag += std::fabs(static_cast<double>(c_[j])) * alpha.pow(j);
  }
  double d = static_cast<double>(c_.size());
  return (4.0 * d + 8.0) * kUnitRoundoff * mag / static_cast<double>(den_) *
             1.01 +
         1e-300;
}

Rational ExactDistance::to_rational(const Alpha& alpha) const {
  if (is_zero()) return Rational(0);
  const int d = degree();
  BigInt p = alpha.num();
  BigInt q = alpha.den();
  BigInt num = 0;
  BigInt ppow = 1;
  for (int j = 0; j <= d; ++j) {
    if (c_[j] != 0) {
      num += BigInt(c_[j]) * ppow * boost::multiprecision::pow(q, d - j);
    }
    ppow *= p;
  }
  return Rational(num, boost::multiprecision::pow(q, d) * den_);
}

int ExactDistance::exact_sign(const Alpha& alpha) const {
  if (is_zero()) return 0;
  const int d = degree();
  BigInt p = alpha.num();
  BigInt q = alpha.den();
  BigInt num = 0;
  BigInt ppow = 1;
  for (int j = 0; j <= d; ++j) {
    if (c_[j] != 0) {
      num += BigInt(c_[j]) * ppow * boost::multiprecision::pow(q, d - j);
    }
    ppow *= p;
  }
  return num.sign();
}

int ExactDistance::sign(const Alpha& alpha) const {
  if (is_zero()) return 0;
  double v = to_double(alpha);
  double e = error_bound(alpha);
  if (v > e) return 1;
  if (v < -e) return -1;
  return exact_sign(alpha);
}

std::string ExactDistance::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    int64_t c = c_[j];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    uint64_t m = c < 0 ? -static_cast<uint64_t>(c) : c;
    if (j == 0) {
      os << m;
    } else {
      if (m != 1) os << m << "*";
      os << "a";
      if (j > 1) os << "^" << j;
    }
  }
  if (den_ == 1) return os.str();
  return "(" + os.str() + ")/" + std::to_string(den_);
}

int compare(const ExactDistance& a, const ExactDistance& b,
            const Alpha& alpha) {
  return (a - b).sign(alpha);
}

const ExactDistance& max(const ExactDistance& a, const ExactDistance& b,
                         const Alpha& alpha) {
  return compare(a, b, alpha) >= 0 ? a : b;
}

Threshold::Threshold(const Alpha& alpha, const ExactDistance& eps)
    : alpha_(alpha),
      eps_(eps),
      eps_f_(eps.to_double(alpha)),
      eps_err_(eps.error_bound(alpha)) {}

}  // namespace odo
