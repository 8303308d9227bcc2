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

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "odorqa/analysis.hpp"
#include "odorqa/errors.hpp"
#include "odorqa/expr.hpp"

using namespace odo;

TEST_CASE("fundamental index") {
  CHECK(fundamental_index(Alpha(1, 5)) == 0);
  CHECK(fundamental_index(Alpha(1, 3)) == 0);
  CHECK(fundamental_index(Alpha(7, 20)) == 1);
  CHECK(fundamental_index(Alpha(2, 5)) == 1);
  CHECK(fundamental_index(Alpha(9, 20)) == 2);
  CHECK(fundamental_index(Alpha(49, 100)) == 5);
  CHECK(utdet_eps(Alpha(1, 3)).to_rational(Alpha(1, 3)) == Rational(8, 9));
}

TEST_CASE("reduce_eps") {
  Alpha a(1, 3);
  ReducedEps r = reduce_eps(a, parse_eps("0.5"));
  CHECK(r.shift == 0);
  CHECK(r.eps == parse_eps("0.5"));
  r = reduce_eps(a, parse_eps("0.5*a^3"));
  CHECK(r.shift == -3);
  CHECK(r.eps.to_rational(a) == Rational(1, 2));
  CHECK(r.invariant);
  Alpha b(2, 5);
  r = reduce_eps(b, ExactDistance::constant(1));
  CHECK(r.shift == 1);
  CHECK(!r.invariant);
  CHECK_THROWS_AS(reduce_eps(a, ExactDistance()), DomainError);
  CHECK_THROWS_AS(reduce_eps(a, parse_eps("1.5")), DomainError);
}

TEST_CASE("self-similarity of det_inf") {
  for (Alpha a : {Alpha(1, 5), Alpha(1, 3)}) {
    const double top = (1 - 2 * a.value()) / a.value();
    for (int i = 1; i <= 12; ++i) {
      const double e = std::min(1.0, top) * std::pow(0.85, i);
      ExactDistance eps = ExactDistance::from_double(e);
      ApproxValue v1 = det_inf_f(a, eps, 0.02);
      ApproxValue v2 = det_inf_f(a, eps.times_alpha_power(1), 0.02);
      CHECK(std::abs(v1.value - v2.value) <= v1.error_radius + v2.error_radius);
    }
  }
  // General alpha: det(alpha eps) <= det(eps) + radii.
  Alpha b(9, 20);
  for (int i = 1; i <= 8; ++i) {
    ExactDistance eps = ExactDistance::from_double(std::pow(0.8, i));
    ApproxValue v1 = det_inf_f(b, eps, 0.02);
    ApproxValue v2 = det_inf_f(b, eps.times_alpha_power(1), 0.02);
    CHECK(v2.value <= v1.value + v1.error_radius + v2.error_radius);
  }
}

TEST_CASE("profile: parallel equals serial, sorted, bounded") {
  for (Alpha a : {Alpha(1, 5), Alpha(2, 5), Alpha(9, 20)}) {
    DetProfile p = det_profile(a, 64, 0.02);
    DetProfile q = det_profile_serial(a, 64, 0.02);
    REQUIRE(p.points.size() == q.points.size());
    int critical = 0;
    for (size_t i = 0; i < p.points.size(); ++i) {
      CHECK(p.points[i].det.exact == q.points[i].det.exact);
      if (i > 0) CHECK(p.points[i - 1].eps_value <= p.points[i].eps_value);
      CHECK(p.points[i].det.value + p.points[i].det.error_radius >= 1.0 / 3.0);
      CHECK(p.points[i].det.value - p.points[i].det.error_radius <= 1.0);
      critical += p.points[i].critical;
    }
    CHECK(critical == 2);
    CHECK(p.points.front().eps_value > a.pow(p.s + 1));
    CHECK(p.points.back().eps == ExactDistance::alpha_power(p.s));
  }
  CHECK_THROWS_AS(det_profile(Alpha(1, 3), 1, 0.01), DomainError);
}

TEST_CASE("profile minimum sits at the critical point") {
  for (Alpha a : {Alpha(1, 5), Alpha(3, 10), Alpha(2, 5), Alpha(9, 20)}) {
    DetProfile p = det_profile(a, 128, 0.01);
    size_t lo = 0;
    for (size_t i = 0; i < p.points.size(); ++i) {
      if (p.points[i].det.value < p.points[lo].det.value) lo = i;
    }
    CHECK(p.points[lo].eps == utdet_eps(a));
  }
}

TEST_CASE("profile writers") {
  DetProfile p = det_profile(Alpha(1, 5), 8, 0.05);
  std::ostringstream csv, svg;
  write_profile_csv(csv, p);
  CHECK(csv.str().rfind("eps,det,err\n", 0) == 0);
  size_t lines = 0;
  for (char c : csv.str()) lines += c == '\n';
  CHECK(lines == p.points.size() + 1);
  write_profile_svg(svg, p, "t");
  CHECK(svg.str().find("<polyline") != std::string::npos);
  CHECK(svg.str().find("det_inf") != std::string::npos);
  CHECK(svg.str().find("</svg>") != std::string::npos);
}

TEST_CASE("extremes") {
  DetExtremes e = det_extremes(Alpha(1, 5), 0.01);
  CHECK(std::abs(e.utdet.value - 8.0 / 15.0) <= 0.01);
  CHECK(std::abs(e.otdet.value - 1.0) <= 0.01);
  CHECK(!e.otdet_grid_estimate);
  DetExtremes f = det_extremes(Alpha(2, 5), 0.01, 64);
  CHECK(f.otdet_grid_estimate);
  CHECK(f.utdet.value <= f.otdet.value);
  CHECK(f.otdet.value + f.otdet.error_radius < 1.0);
  CHECK(f.utdet.value + f.utdet.error_radius >= 1.0 / 3.0);
}

TEST_CASE("utdet near 1/2 approaches 1/3") {
  ApproxValue v = utdet(Alpha(499, 1000), 0.01);
  CHECK(v.value < 1.0 / 3.0 + 0.02);
  CHECK(v.value + v.error_radius >= 1.0 / 3.0);
}

TEST_CASE("continuity proxy of utdet") {
  for (int an : {360, 400, 440, 480}) {
    ApproxValue v1 = utdet(Alpha(an, 1000), 0.002);
    ApproxValue v2 = utdet(Alpha(an + 1, 1000), 0.002);
    CHECK(std::abs(v1.value - v2.value) <= 0.01);
  }
}

TEST_CASE("find_alpha_for_liminf") {
  AlphaScan s = find_alpha_for_liminf(8.0 / 15.0, 0.01);
  CHECK(s.alpha.value() <= 1.0 / 3.0);
  CHECK(std::abs(s.utdet.value - 8.0 / 15.0) <= 0.01);
  s = find_alpha_for_liminf(0.34, 0.005);
  CHECK(s.alpha.value() > 0.49);
  CHECK(std::abs(utdet(s.alpha, 0.0025).value - 0.34) <= 0.005);
  CHECK_THROWS_AS(find_alpha_for_liminf(0.3, 0.01), DomainError);
  CHECK_THROWS_AS(find_alpha_for_liminf(0.6, 0.01), DomainError);
}
