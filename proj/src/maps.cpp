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

#include "odorqa/maps.hpp"

#include <cmath>

#include "odorqa/errors.hpp"

namespace odo {
namespace {

void require_unit(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("x must lie in [0, 1]");
}

Rational rpow(const Rational& a, int j) {
  Rational r = 1;
  for (int i = 0; i < j; ++i) r *= a;
  return r;
}

}  // namespace

double DelahayeMap::operator()(double x) const {
  require_unit(x);
  if (x >= 1.0 - 1e-15) return 0.0;
  const double a = alpha_.value();
  const double slope = (1.0 - a + a * a) / (2.0 * a - 1.0);
  for (int j = 1; j <= branch_cap_; ++j) {
    const double aj1 = alpha_.pow(j - 1);
    const double aj = alpha_.pow(j);
    if (x <= 1.0 - aj1 + aj) return x - 1.0 + 2.0 * aj1 - aj;
    if (x < 1.0 - aj) {
      return slope * (x - 1.0) + alpha_.pow(j + 1) * (2.0 - a) / (2.0 * a - 1.0);
    }
  }
  return 0.0;
}

ApproxMap::ApproxMap(const Alpha& alpha, int k) : alpha_(alpha), k_(k) {
  if (k < 0 || k > Alpha::kMaxPower - 2) throw DomainError("k out of range");
}

double ApproxMap::operator()(double x) const {
  require_unit(x);
  if (k_ == 0) return x;
  const double ak = alpha_.pow(k_);
  const double ak1 = alpha_.pow(k_ - 1);
  if (x >= 1.0 - ak) return x - 1.0 + ak;
  if (x > 1.0 - ak1 + ak) return ak1 * (1.0 - ak - x) / (ak1 - 2.0 * ak);
  return DelahayeMap(alpha_)(x);
}

Rational ApproxMap::eval_exact(const Rational& x) const {
  if (x < 0 || x > 1) throw DomainError("x must lie in [0, 1]");
  if (k_ == 0) return x;
  const Rational a = alpha_.rational();
  const Rational ak = rpow(a, k_);
  const Rational ak1 = rpow(a, k_ - 1);
  if (x >= 1 - ak) return x - 1 + ak;
  if (x > 1 - ak1 + ak) return ak1 * (1 - ak - x) / (ak1 - 2 * ak);
  const Rational slope = (1 - a + a * a) / (2 * a - 1);
  Rational aj1 = 1;
  for (int j = 1; j <= k_; ++j) {
    const Rational aj = aj1 * a;
    if (x <= 1 - aj1 + aj) return x - 1 + 2 * aj1 - aj;
    if (x < 1 - aj) return slope * (x - 1) + aj * a * (2 - a) / (2 * a - 1);
    aj1 = aj;
  }
  // Unreachable: x < 1 - a^{k-1} + a^k is covered by branches j <= k.
  throw DomainError("branch search failed");
}

double f_eval(const DelahayeMap& m, double x) { return m(x); }
double fk_eval(const ApproxMap& m, double x) { return m(x); }

IntervalU interval_of(const Word& u) {
  ExactDistance left = kappa(u);
  return IntervalU{u, left, left + ExactDistance::alpha_power(u.k())};
}

std::optional<Word> locate(double x, int k, const Alpha& alpha) {
  const double slack = 1e-15;
  const double one_minus = 1.0 - alpha.value();
  double left = 0.0;
  uint64_t packed = 0;
  for (int i = 1; i <= k; ++i) {
    // Children of the current interval start at left and left + (1-a)a^{i-1}.
    const double right_child = left + one_minus * alpha.pow(i - 1);
    packed <<= 1;
    if (x >= right_child - slack) {
      packed |= 1;
      left = right_child;
    } else if (x > left + alpha.pow(i) + slack) {
      return std::nullopt;
    }
  }
  if (x < left - slack || x > left + alpha.pow(k) + slack) return std::nullopt;
  return Word(k, packed);
}

double periodic_point(const Alpha& alpha, int k) {
  if (k < 0 || k > 20) throw DomainError("periodic point needs 0 <= k <= 20");
  DelahayeMap f(alpha);
  const uint64_t period = uint64_t{1} << k;
  auto g = [&](double x) {
    double y = x;
    for (uint64_t i = 0; i < period; ++i) y = f(y);
    return y - x;
  };
  double lo = 0.0;
  double hi = alpha.pow(k);
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (g(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> scan_period3(const Alpha& alpha, int grid) {
  DelahayeMap f(alpha);
  auto g = [&](double x) { return f(f(f(x))) - x; };
  std::vector<double> found;
  double prev_x = 0.0;
  double prev = g(0.0);
  for (int i = 1; i <= grid; ++i) {
    double x = static_cast<double>(i) / grid;
    double cur = g(x);
    if ((prev < 0.0) != (cur < 0.0)) {
      double lo = prev_x;
      double hi = x;
      bool lo_neg = prev < 0.0;
      for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (lo + hi);
        if ((g(mid) < 0.0) == lo_neg) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      double root = 0.5 * (lo + hi);
      if (std::fabs(g(root)) < 1e-9 && std::fabs(f(root) - root) > 1e-7) {
        found.push_back(root);
      }
    }
    prev_x = x;
    prev = cur;
  }
  return found;
}

}  // namespace odo
