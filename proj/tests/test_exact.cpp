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

#include <random>

#include "doctest.h"
#include "odorqa/errors.hpp"
#include "odorqa/exact.hpp"
#include "odorqa/expr.hpp"

using namespace odo;

TEST_CASE("Alpha parsing and validation") {
  CHECK(Alpha::parse("2/6").str() == "1/3");
  CHECK(Alpha::parse("0.45").str() == "9/20");
  CHECK(Alpha::parse("0.2") == Alpha(1, 5));
  CHECK_THROWS_AS(Alpha::parse("3/5"), DomainError);
  CHECK_THROWS_AS(Alpha::parse("1/2"), DomainError);
  CHECK_THROWS_AS(Alpha::parse("0"), DomainError);
  CHECK_THROWS_AS(Alpha::parse("x"), DomainError);
  try {
    Alpha::parse("3/5");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()) == "alpha must lie in (0, 1/2)");
  }
}

TEST_CASE("ExactDistance arithmetic") {
  Alpha a(1, 3);
  ExactDistance one = ExactDistance::constant(1);
  ExactDistance x = one - ExactDistance::alpha_power(1) + ExactDistance::alpha_power(2);
  CHECK(x.to_rational(a) == Rational(7, 9));
  CHECK(x.str() == "1 - a + a^2");
  CHECK((x * x).to_rational(a) == Rational(49, 81));
  CHECK(x.times_alpha_power(2).to_rational(a) == Rational(7, 81));
  CHECK(x.divided_by_alpha(a).to_rational(a) == Rational(7, 3));
  CHECK((x - x).is_zero());
  CHECK(ExactDistance::constant(9, 10).to_rational(a) == Rational(9, 10));
}

TEST_CASE("float evaluation agrees with the exact value") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int64_t> coef(-50, 50);
  for (Alpha a : {Alpha(1, 3), Alpha(2, 5), Alpha(49, 100), Alpha(1, 9)}) {
    for (int t = 0; t < 200; ++t) {
      std::vector<int64_t> c(1 + t % 40);
      for (auto& v : c) v = coef(rng);
      ExactDistance d(c, 1 + t % 7);
      const double exact = static_cast<double>(d.to_rational(a));
      CHECK(std::abs(d.to_double(a) - exact) <= d.error_bound(a));
      CHECK(d.sign(a) == d.exact_sign(a));
    }
  }
}

TEST_CASE("ties are decided exactly") {
  Alpha a(1, 3);
  // (1 - a)(1 + a) = 1 - a^2 as two different polynomials.
  ExactDistance lhs = (ExactDistance::constant(1) - ExactDistance::alpha_power(1)) *
                      (ExactDistance::constant(1) + ExactDistance::alpha_power(1));
  ExactDistance rhs = ExactDistance::constant(8, 9);
  CHECK(compare(lhs, rhs, a) == 0);
  CHECK(less_equal(lhs, rhs, a));
  Threshold th(a, rhs);
  CHECK(th.le(lhs.to_double(a), lhs.error_bound(a), [&] { return lhs; }));
}

TEST_CASE("eps expressions") {
  Alpha a(1, 3);
  CHECK(parse_eps("a^2").to_rational(a) == Rational(1, 9));
  CHECK(parse_eps("1-a+a^2").to_rational(a) == Rational(7, 9));
  CHECK(parse_eps("0.9*(1-2*a)*a^2").to_rational(a) == Rational(9, 10) * Rational(1, 27));
  CHECK(parse_eps("33/100").to_rational(a) == Rational(33, 100));
  CHECK(parse_eps(" -(a) + 1 ").to_rational(a) == Rational(2, 3));
  CHECK(parse_eps("a^0") == ExactDistance::constant(1));
  for (const char* bad : {"", "a^", "1+", "(a", "b", "a^-1", "a/a", "1/0", "1..2"}) {
    CHECK_THROWS_AS(parse_eps(bad), DomainError);
  }
}
