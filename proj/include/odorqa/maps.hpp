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

#ifndef ODORQA_MAPS_HPP_
#define ODORQA_MAPS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "odorqa/exact.hpp"
#include "odorqa/words.hpp"

namespace odo {

// The piecewise linear map f_alpha on [0, 1]. On branch j >= 1 it is
//   x - 1 + 2a^{j-1} - a^j                    on [1 - a^{j-1}, 1 - a^{j-1} + a^j]
//   (1 - a + a^2)/(2a - 1) (x - 1) + a^{j+1} (2 - a)/(2a - 1)
//                                             on (1 - a^{j-1} + a^j, 1 - a^j)
// and f(1) = 0.
class DelahayeMap {
 public:
  explicit DelahayeMap(const Alpha& alpha, int branch_cap = 64)
      : alpha_(alpha), branch_cap_(branch_cap) {}

  const Alpha& alpha() const { return alpha_; }
  int branch_cap() const { return branch_cap_; }
  double operator()(double x) const;

 private:
  Alpha alpha_;
  int branch_cap_;
};

// f_{alpha,k}: f on [0, 1 - a^{k-1} + a^k], x - 1 + a^k on [1 - a^k, 1],
// linear in between. k = 0 is the identity.
class ApproxMap {
 public:
  ApproxMap(const Alpha& alpha, int k);

  const Alpha& alpha() const { return alpha_; }
  int k() const { return k_; }
  double operator()(double x) const;
  // The same map in exact rational arithmetic.
  Rational eval_exact(const Rational& x) const;

 private:
  Alpha alpha_;
  int k_;
};

double f_eval(const DelahayeMap& m, double x);
double fk_eval(const ApproxMap& m, double x);

// [x, g(x), ..., g^{n-1}(x)].
template <class Map>
std::vector<double> orbit(const Map& g, double x, size_t n) {
  std::vector<double> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    out.push_back(x);
    x = g(x);
  }
  return out;
}

struct IntervalU {
  Word u;
  ExactDistance left;
  ExactDistance right;
};

IntervalU interval_of(const Word& u);
// The word u of length k with x in I(u), or nullopt if x lies in a gap.
std::optional<Word> locate(double x, int k, const Alpha& alpha);

// The point of period 2^k in I(0^k), by bisection of f^{2^k}(x) - x.
double periodic_point(const Alpha& alpha, int k);

// Roots of f^3(x) - x on a uniform grid that are not fixed points of f.
std::vector<double> scan_period3(const Alpha& alpha, int grid = 20000);

}  // namespace odo

#endif  // ODORQA_MAPS_HPP_
