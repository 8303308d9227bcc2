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
#include <sstream>

#include "doctest.h"
#include "odorqa/distmatrix.hpp"
#include "odorqa/errors.hpp"
#include "odorqa/expr.hpp"
#include "oracles.hpp"

using namespace odo;

namespace {

uint64_t ell_code(const Ell& l) { return l.is_inf() ? 0 : l.value(); }

const Ell kElls[] = {Ell::finite(1), Ell::finite(2), Ell::finite(3), Ell::inf()};

}  // namespace

TEST_CASE("Ell") {
  CHECK(Ell::parse("inf").is_inf());
  CHECK(Ell::parse("7").value() == 7);
  CHECK(Ell::parse("7").effective(2) == 4);
  CHECK(Ell::inf().effective(5) == 32);
  CHECK_THROWS_AS(Ell::parse("0"), DomainError);
  CHECK_THROWS_AS(Ell::parse("-3"), DomainError);
  CHECK_THROWS_AS(Ell::parse("x"), DomainError);
}

TEST_CASE("rho_ell against the oracle") {
  for (Alpha a : {Alpha(1, 3), Alpha(2, 5)}) {
    for (int k = 1; k <= 5; ++k) {
      for (uint64_t x = 0; x < (uint64_t{1} << k); ++x) {
        for (uint64_t y = 0; y < (uint64_t{1} << k); ++y) {
          Word u(k, x), v(k, y);
          for (const Ell& l : kElls) {
            REQUIRE(rho_ell(u, v, l, a).to_rational(a) ==
                    oracle::rho_ell(u.str(), v.str(), ell_code(l), a.rational()));
          }
        }
      }
    }
  }
  Alpha a(1, 3);
  Word u = Word::parse("0011"), v = Word::parse("0100");
  CHECK(rho_ell(u, v, Ell::inf(), a).to_rational(a) ==
        oracle::rho_ell("0011", "0100", 0, a.rational()));
}

TEST_CASE("rho_inf_fast equals the full period max, exhaustive k <= 8") {
  for (Alpha a : {Alpha(1, 3), Alpha(9, 20)}) {
    for (int k = 1; k <= 8; ++k) {
      const uint64_t n = uint64_t{1} << k;
      for (uint64_t x = 0; x < n; ++x) {
        for (uint64_t y = 0; y < n; ++y) {
          if (x == y) continue;
          Word u(k, x), v(k, y);
          REQUIRE(compare(rho_inf_fast(u, v), rho_ell(u, v, Ell::inf(), a), a) == 0);
        }
      }
    }
  }
  // Aligned pair: rho_inf(0^h 1 1 w, 0^k) = rho(0^k, 0^h 1 1 w).
  Word w = Word::parse("0011010");
  CHECK(rho_inf_partner(w, Word::zeros(7)) == w);
  CHECK_THROWS_AS(rho_inf_fast(w, w), DomainError);
}

TEST_CASE("rho_inf lies strictly inside the prefix range") {
  Alpha a(2, 5);
  for (int k = 2; k <= 8; ++k) {
    for (uint64_t x = 0; x < (uint64_t{1} << k); x += 3) {
      for (uint64_t y = x + 1; y < (uint64_t{1} << k); ++y) {
        Word u(k, x), v(k, y);
        const int h = std::countl_zero(x ^ y) - (64 - k);
        ExactDistance r = rho_inf_fast(u, v);
        ExactDistance lo = ExactDistance::alpha_power(h) - ExactDistance::alpha_power(h + 1) * ExactDistance::constant(2);
        CHECK(compare(r, lo, a) > 0);
        CHECK(compare(r, ExactDistance::alpha_power(h), a) < 0);
      }
    }
  }
}

TEST_CASE("frozen pair counts at k = 4") {
  // Rational brute force, recorded once.
  struct Row {
    Alpha a;
    const char* eps;
    uint64_t counts[4];  // l = 1, 2, 3, inf
  };
  const Row rows[] = {
      {Alpha(1, 3), "a", {128, 128, 128, 128}},
      {Alpha(1, 3), "1-a", {200, 168, 148, 128}},
      {Alpha(1, 3), "a^2", {64, 64, 64, 64}},
      {Alpha(1, 3), "1-a+a^2", {224, 192, 160, 128}},
      {Alpha(2, 5), "a", {152, 128, 128, 128}},
      {Alpha(2, 5), "1-a", {200, 168, 148, 128}},
      {Alpha(2, 5), "a^2", {76, 70, 64, 64}},
      {Alpha(2, 5), "1-a+a^2", {230, 204, 178, 128}},
  };
  for (const Row& r : rows) {
    ExactDistance eps = parse_eps(r.eps);
    for (int i = 0; i < 4; ++i) {
      CHECK(build_matrix(4, r.a, kElls[i], eps).ones() == r.counts[i]);
      CHECK(build_matrix_naive(4, r.a, kElls[i], eps).ones() == r.counts[i]);
      CHECK(close_pair_count_brute(4, r.a, kElls[i], eps) == r.counts[i]);
      CHECK(oracle::pair_count(4, r.a.rational(), ell_code(kElls[i]),
                               eps.to_rational(r.a)) == r.counts[i]);
    }
  }
  Alpha third(1, 3);
  CHECK(close_pair_count_brute(6, third, Ell::finite(1), parse_eps("1-a")) == 3104);
  CHECK(close_pair_count_inf(6, third, parse_eps("1-a")) == 2048);
  CHECK(close_pair_count_inf(6, third, parse_eps("1-a^2")) == 2176);
}

TEST_CASE("fast and naive matrices agree") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(101, 499);
  std::uniform_real_distribution<double> epsd(0.001, 1.0);
  for (int t = 0; t < 40; ++t) {
    Alpha a(num(rng), 1000);
    const int k = 1 + t % 8;
    ExactDistance eps = ExactDistance::from_double(epsd(rng));
    for (const Ell& l : {Ell::finite(1), Ell::finite(1 + t % 5), Ell::finite(7), Ell::inf()}) {
      DistanceMatrix fast = build_matrix(k, a, l, eps);
      DistanceMatrix slow = build_matrix_naive(k, a, l, eps);
      REQUIRE(fast.bits == slow.bits);
    }
  }
}

TEST_CASE("matrix invariants") {
  Alpha a(2, 5);
  const int k = 6;
  const uint64_t n = uint64_t{1} << k;
  ExactDistance e1 = parse_eps("a^2"), e2 = parse_eps("a");
  DistanceMatrix d1 = build_matrix(k, a, Ell::finite(1), e1);
  DistanceMatrix d2 = build_matrix(k, a, Ell::finite(1), e2);
  DistanceMatrix d3 = build_matrix(k, a, Ell::finite(3), e2);
  DistanceMatrix di = build_matrix(k, a, Ell::inf(), e2);
  for (uint64_t i = 0; i < n; ++i) {
    CHECK(d1.bits.get(i, i));
    for (uint64_t j = 0; j < n; ++j) {
      REQUIRE(d2.bits.get(i, j) == d2.bits.get(j, i));
      REQUIRE(di.bits.get(i, j) == di.bits.get(j, i));
      REQUIRE((!d1.bits.get(i, j) || d2.bits.get(i, j)));
      REQUIRE((!d3.bits.get(i, j) || d2.bits.get(i, j)));
      REQUIRE((!di.bits.get(i, j) || d3.bits.get(i, j)));
    }
  }
  CHECK(build_matrix(k, a, Ell::inf(), ExactDistance::constant(1)).ones() == n * n);
  CHECK(build_matrix(k, a, Ell::finite(2), ExactDistance()).ones() == n);
  CHECK_THROWS_AS(build_matrix(16, a, Ell::finite(1), e1), CapError);
}

TEST_CASE("row bands are contiguous") {
  Alpha a(1, 3);
  DistanceMatrix d = build_matrix(7, a, Ell::finite(1), parse_eps("0.3"));
  auto bands = row_bands(7, a, parse_eps("0.3"));
  for (uint64_t i = 0; i < 128; ++i) {
    for (uint64_t j = 0; j < 128; ++j) {
      REQUIRE(d.bits.get(i, j) == (j >= bands[i][0] && j <= bands[i][1]));
    }
  }
}

TEST_CASE("patterns hold on D_k(eps)") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(51, 499);
  std::uniform_real_distribution<double> epsd(0.0005, 1.0);
  for (int t = 0; t < 30; ++t) {
    Alpha a(num(rng), 1000);
    const int k = 1 + t % 9;
    ExactDistance eps = ExactDistance::from_double(epsd(rng));
    PatternReport r = verify_patterns(build_matrix(k, a, Ell::finite(1), eps));
    CHECK(r.all());
  }
  // Tie cases at the critical thresholds.
  for (const char* e : {"a", "a^2", "a - a^3", "1 - a", "a^3 - a^5"}) {
    for (Alpha a : {Alpha(1, 3), Alpha(2, 5), Alpha(1, 5)}) {
      CHECK(verify_patterns(build_matrix(8, a, Ell::finite(1), parse_eps(e))).all());
    }
  }
}

TEST_CASE("pattern checker is not vacuous") {
  const int k = 5;
  const size_t n = size_t{1} << k;
  BitMatrix all(n);
  for (size_t i = 0; i < n; ++i) all.set_range(i, 0, n);
  CHECK(verify_patterns(all, k).all());

  std::mt19937_64 rng(5);
  int flagged = 0;
  for (int t = 0; t < 50; ++t) {
    BitMatrix m(n);
    for (size_t i = 0; i < n; ++i) {
      m.set(i, i);
      for (size_t j = i + 1; j < n; ++j) {
        if (rng() & 1) {
          m.set(i, j);
          m.set(j, i);
        }
      }
    }
    PatternReport r = verify_patterns(m, k);
    if (!r.all()) {
      ++flagged;
      for (Pattern p : kAllPatterns) {
        if (!r.ok(p)) CHECK(r.first_violation[static_cast<int>(p)].has_value());
      }
    }
  }
  CHECK(flagged == 50);
}

TEST_CASE("close_pair_count_inf: three paths and monotonicity") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> num(51, 499);
  std::uniform_real_distribution<double> epsd(0.0001, 1.0);
  for (int t = 0; t < 60; ++t) {
    Alpha a(num(rng), 1000);
    const int k = 1 + t % 10;
    ExactDistance eps = ExactDistance::from_double(epsd(rng));
    const uint64_t fast = close_pair_count_inf(k, a, eps);
    CHECK(fast == close_pair_count_inf_rowscan(k, a, eps));
    if (k <= 8) CHECK(fast == close_pair_count_brute(k, a, Ell::inf(), eps));
  }
  Alpha a(2, 5);
  uint64_t prev = 0;
  for (int i = 1; i <= 200; ++i) {
    uint64_t c = close_pair_count_inf(12, a, ExactDistance::constant(i, 200));
    CHECK(c >= prev);
    prev = c;
  }
  CHECK(prev == (uint64_t{1} << 24));
  CHECK(close_pair_count_inf(25, a, parse_eps("a^3")) ==
        close_pair_count_inf_rowscan(25, a, parse_eps("a^3")));
}

TEST_CASE("existence pair: rho <= eps < rho_inf for alpha > 1/3") {
  // u = 0^{h+1} 1^{k-h-1}, v = 0^h 1 0^{k-h-1}.
  for (int an = 335; an < 500; an += 15) {
    Alpha a(an, 1000);
    for (int h = 0; h <= 2; ++h) {
      const int k = h + 8;
      Word u(k, low_mask(k - h - 1));
      Word v(k, uint64_t{1} << (k - h - 1));
      ExactDistance r1 = rho(u, v);
      ExactDistance ri = rho_inf_fast(u, v);
      REQUIRE(compare(r1, ri, a) < 0);
      // Any eps in [r1, ri) separates them; take the midpoint.
      const double mid = (r1.to_double(a) + ri.to_double(a)) / 2;
      ExactDistance eps = ExactDistance::from_double(mid);
      CHECK(less_equal(r1, eps, a));
      CHECK(!less_equal(ri, eps, a));
    }
  }
}

TEST_CASE("suffix stability of distant pairs") {
  // rho_inf > eps persists when both words get any common-length suffixes.
  Alpha a(2, 5);
  ExactDistance eps = parse_eps("a^2");
  for (int k = 2; k <= 5; ++k) {
    for (uint64_t x = 0; x < (uint64_t{1} << k); ++x) {
      for (uint64_t y = 0; y < (uint64_t{1} << k); ++y) {
        if (x == y) continue;
        Word u(k, x), v(k, y);
        if (less_equal(rho_inf_fast(u, v), eps, a)) continue;
        for (int m = 1; m <= 3; ++m) {
          for (uint64_t s = 0; s < (uint64_t{1} << m); ++s) {
            for (uint64_t t = 0; t < (uint64_t{1} << m); ++t) {
              REQUIRE(!less_equal(rho_inf_fast(u.concat(Word(m, s)), v.concat(Word(m, t))), eps, a));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("PBM output") {
  Alpha a(1, 3);
  DistanceMatrix d = build_matrix(2, a, Ell::finite(1), parse_eps("a"));
  std::ostringstream os;
  write_pbm(os, d, "hdr");
  CHECK(os.str() == "P1\n# hdr\n4 4\n1100\n1100\n0011\n0011\n");
}
