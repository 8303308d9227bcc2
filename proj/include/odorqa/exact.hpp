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

#ifndef ODORQA_EXACT_HPP_
#define ODORQA_EXACT_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace odo {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact rational parameter alpha = p/q with 0 < alpha < 1/2, lowest terms.
class Alpha {
 public:
  static constexpr int kMaxPower = 128;

  Alpha(int64_t p, int64_t q);

  // Accepts "p/q" or a decimal literal such as "0.45"; both are exact.
  static Alpha parse(std::string_view text);

  int64_t num() const { return p_; }
  int64_t den() const { return q_; }
  double value() const { return pw_[1]; }
  Rational rational() const { return Rational(p_, q_); }

  // alpha^j in double precision for 0 <= j <= kMaxPower.
  double pow(int j) const { return pw_[j]; }

  // Canonical "p/q" form.
  std::string str() const;

  friend bool operator==(const Alpha& a, const Alpha& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  int64_t p_;
  int64_t q_;
  std::array<double, kMaxPower + 1> pw_;
};

// (sum_j c_j alpha^j) / den with integer c_j and den > 0. Values of rho,
// kappa and thresholds are all of this form, so closed comparisons at tie
// points can be decided exactly.
class ExactDistance {
 public:
  ExactDistance() = default;
  explicit ExactDistance(std::vector<int64_t> coeffs, int64_t den = 1);

  static ExactDistance constant(int64_t num, int64_t den = 1);
  static ExactDistance alpha_power(int j);
  // Nearest dyadic rational with denominator 2^40.
  static ExactDistance from_double(double x);

  const std::vector<int64_t>& coeffs() const { return c_; }
  int64_t den() const { return den_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  ExactDistance operator-() const;
  friend ExactDistance operator+(const ExactDistance& a, const ExactDistance& b);
  friend ExactDistance operator-(const ExactDistance& a, const ExactDistance& b);
  friend ExactDistance operator*(const ExactDistance& a, const ExactDistance& b);

  ExactDistance times_alpha_power(int j) const;
  // Exact division by alpha; uses 1/alpha = q/p when c_0 != 0.
  ExactDistance divided_by_alpha(const Alpha& alpha) const;

  double to_double(const Alpha& alpha) const;
  // Bound on |to_double - exact value|.
  double error_bound(const Alpha& alpha) const;
  Rational to_rational(const Alpha& alpha) const;

  // Sign of the value at alpha: float first, exact inside the error bound.
  int sign(const Alpha& alpha) const;
  int exact_sign(const Alpha& alpha) const;

  // Expression in the variable "a", e.g. "1 - a + a^2" or "(9 - 18*a)/10".
  std::string str() const;

  friend bool operator==(const ExactDistance& a, const ExactDistance& b) {
    return a.den_ == b.den_ && a.c_ == b.c_;
  }

 private:
  void normalize();

  std::vector<int64_t> c_;
  int64_t den_ = 1;
};

int compare(const ExactDistance& a, const ExactDistance& b, const Alpha& alpha);
inline bool less_equal(const ExactDistance& a, const ExactDistance& b,
                       const Alpha& alpha) {
  return compare(a, b, alpha) <= 0;
}
const ExactDistance& max(const ExactDistance& a, const ExactDistance& b,
                         const Alpha& alpha);

// Unit roundoff based slack used by the float-first comparisons.
inline constexpr double kUnitRoundoff = 0x1p-53;

// Decides "value <= eps" for a value known only as a double with an absolute
// error bound; the callable produces the exact polynomial when the float
// evaluation cannot decide. Used in the hot counting loops.
class Threshold {
 public:
  Threshold(const Alpha& alpha, const ExactDistance& eps);

  const Alpha& alpha() const { return alpha_; }
  const ExactDistance& eps() const { return eps_; }
  double eps_value() const { return eps_f_; }
  double eps_error() const { return eps_err_; }

  // -1, 0, +1 when value < eps, undecided, value > eps.
  int float_side(double value, double value_err) const {
    double slack = value_err + eps_err_;
    if (value < eps_f_ - slack) return -1;
    if (value > eps_f_ + slack) return 1;
    return 0;
  }

  template <class ExactFn>
  bool le(double value, double value_err, ExactFn&& exact) const {
    int side = float_side(value, value_err);
    if (side != 0) return side < 0;
    return (exact() - eps_).exact_sign(alpha_) <= 0;
  }

 private:
  Alpha alpha_;
  ExactDistance eps_;
  double eps_f_;
  double eps_err_;
};

}  // namespace odo

#endif  // ODORQA_EXACT_HPP_
