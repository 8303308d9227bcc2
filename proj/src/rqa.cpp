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

#include "odorqa/rqa.hpp"

#include <bit>
#include <cmath>
#include <functional>

#include "odorqa/errors.hpp"
#include "odorqa/maps.hpp"

namespace odo {
namespace {

constexpr uint64_t kMaxOrbitPoints = 8192;
constexpr int kMaxPeriodicExponent = 12;

// One realization of an orbit: either exact orbit indices (word points) or
// double precision coordinates, possibly periodic.
struct Trajectory {
  bool symbolic = false;
  int digits = 0;          // K for symbolic orbits
  uint64_t base = 0;       // orbit index of x for symbolic orbits
  uint64_t period = 0;     // 0 when not periodic
  std::vector<double> xs;  // float orbits
};

Trajectory make_trajectory(const OrbitMap& g, const RqaPoint& x,
                           uint64_t length) {
  Trajectory t;
  switch (x.kind()) {
    case RqaPoint::Kind::kWord: {
      t.symbolic = true;
      t.base = x.word().index();
      if (g.k) {
        if (x.word().k() > *g.k) {
          throw DomainError("word point longer than the approximation order");
        }
        t.digits = *g.k;
        t.period = uint64_t{1} << *g.k;
      } else {
        int bits = std::bit_width(t.base + length + 1);
        t.digits = std::max(x.word().k(), bits);
        if (t.digits > 62) throw CapError("orbit too long for exact words");
      }
      return t;
    }
    case RqaPoint::Kind::kPeriodic: {
      t.period = uint64_t{1} << x.period_exponent();
      double p = periodic_point(g.alpha, x.period_exponent());
      if (g.k) {
        t.xs = orbit(ApproxMap(g.alpha, *g.k), p, t.period);
      } else {
        t.xs = orbit(DelahayeMap(g.alpha), p, t.period);
      }
      return t;
    }
    case RqaPoint::Kind::kFloat: {
      if (g.k) {
        t.xs = orbit(ApproxMap(g.alpha, *g.k), x.seed(), length);
      } else {
        t.xs = orbit(DelahayeMap(g.alpha), x.seed(), length);
      }
      return t;
    }
  }
  return t;
}

// rho_inf(g^i x, g^j x) for a word point under f depends on m = j - i only:
// the orbit is dense in Sigma^inf, so it is the sup of |kappa(z) -
// kappa(z (+) m)| over infinite words z, attained in the limit by the pair
// 0^inf and the infinite word of m. With L = bit_width(m) that sup is
// max(kappa(m), kappa_L(2^L - m) + a^L).
ExactDistance rho_inf_of_shift(uint64_t m, const Alpha& alpha) {
  const int len = std::bit_width(m);
  ExactDistance pos = kappa_of_index(m, len);
  ExactDistance neg = kappa_of_index((uint64_t{1} << len) - m, len) +
                      ExactDistance::alpha_power(len);
  return max(pos, neg, alpha);
}

}  // namespace

RqaPoint RqaPoint::word_point(const Word& u) {
  RqaPoint p;
  p.kind_ = Kind::kWord;
  p.word_ = u;
  return p;
}

RqaPoint RqaPoint::periodic(int k) {
  if (k < 0 || k > kMaxPeriodicExponent) {
    throw CapError("periodic points are limited to period 2^12");
  }
  RqaPoint p;
  p.kind_ = Kind::kPeriodic;
  p.k_ = k;
  return p;
}

RqaPoint RqaPoint::float_seed(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("x must lie in [0, 1]");
  RqaPoint p;
  p.kind_ = Kind::kFloat;
  p.x_ = x;
  return p;
}

std::vector<uint8_t> closeness_matrix(const OrbitMap& g, const RqaPoint& x,
                                      const Ell& ell, uint64_t n,
                                      const ExactDistance& eps) {
  if (n == 0) throw DomainError("n must be >= 1");
  if (n > kMaxOrbitPoints) throw CapError("orbit length is limited to 8192");
  const uint64_t window_len = ell.is_inf() ? 0 : ell.value();
  if (!ell.is_inf() && window_len > kMaxOrbitPoints) {
    throw CapError("l is limited to 8192 on finite orbits");
  }
  const uint64_t length = n + (ell.is_inf() ? 0 : window_len - 1);
  Trajectory t = make_trajectory(g, x, length);
  const Alpha& alpha = g.alpha;
  KappaTable kt(alpha);
  Threshold th(alpha, eps);
  const double eps_f = eps.to_double(alpha);

  auto point_index = [&](uint64_t i) {
    return t.period ? (t.base + i) % t.period : t.base + i;
  };
  // rho(g^a x, g^b x) <= eps.
  auto close1 = [&](uint64_t a, uint64_t b) -> bool {
    if (t.symbolic) {
      const uint64_t ia = point_index(a);
      const uint64_t ib = point_index(b);
      return th.le(std::fabs(kt(ia) - kt(ib)), 2 * KappaTable::error(),
                   [&] { return rho_of_indices(ia, ib, t.digits); });
    }
    const uint64_t ia = t.period ? a % t.period : a;
    const uint64_t ib = t.period ? b % t.period : b;
    return std::fabs(t.xs[ia] - t.xs[ib]) <= eps_f;
  };

  std::vector<uint8_t> w(n * n, 0);

  if (t.period) {
    // Windows wrap around the period; l >= period means the full period.
    const uint64_t p = t.period;
    const uint64_t len = ell.is_inf() ? p : std::min(window_len, p);
    for (uint64_t delta = 0; delta < p; ++delta) {
      std::vector<uint8_t> diag(p);
      for (uint64_t a = 0; a < p; ++a) diag[a] = close1(a, (a + delta) % p);
      // zero_ahead[a] = steps from a to the next zero, circularly.
      std::vector<uint64_t> ahead(p, UINT64_MAX);
      uint64_t next = UINT64_MAX;
      for (uint64_t pass = 0; pass < 2 * p; ++pass) {
        uint64_t a = (2 * p - 1 - pass) % p;
        if (!diag[a]) {
          next = 0;
        } else if (next != UINT64_MAX) {
          ++next;
        }
        if (pass >= p) ahead[a] = next;
      }
      for (uint64_t i = 0; i < n; ++i) {
        const uint64_t a = i % p;
        if (ahead[a] < len) continue;
        // Every j congruent to i + delta modulo p.
        for (uint64_t j = (i + delta) % p; j < n; j += p) w[i * n + j] = 1;
      }
    }
    return w;
  }

  if (ell.is_inf()) {
    if (!t.symbolic) {
      throw DomainError("l = inf needs a symbolic or periodic point");
    }
    for (uint64_t i = 0; i < n; ++i) w[i * n + i] = 1;
    for (uint64_t m = 1; m < n; ++m) {
      if (!less_equal(rho_inf_of_shift(m, alpha), eps, alpha)) continue;
      for (uint64_t i = 0; i + m < n; ++i) {
        w[i * n + i + m] = 1;
        w[(i + m) * n + i] = 1;
      }
    }
    return w;
  }

  // Non-periodic, finite l: run lengths of closeness along each diagonal of
  // the length x length grid.
  const int64_t len = static_cast<int64_t>(length);
  for (int64_t delta = -(len - 1); delta < len; ++delta) {
    int64_t i = delta < 0 ? -delta : 0;
    int64_t j = delta < 0 ? 0 : delta;
    const int64_t steps = len - std::max(i, j);
    uint64_t run = 0;
    for (int64_t s = steps - 1; s >= 0; --s) {
      const uint64_t a = static_cast<uint64_t>(i + s);
      const uint64_t b = static_cast<uint64_t>(j + s);
      run = close1(a, b) ? run + 1 : 0;
      if (a < n && b < n && run >= window_len) w[a * n + b] = 1;
    }
  }
  return w;
}

Rational corr_sum(const OrbitMap& g, const RqaPoint& x, const Ell& ell,
                  uint64_t n, const ExactDistance& eps) {
  auto w = closeness_matrix(g, x, ell, n, eps);
  uint64_t c = 0;
  for (uint8_t v : w) c += v;
  return Rational(BigInt(c), BigInt(n) * n);
}

Rational rec_rate(const OrbitMap& g, const RqaPoint& x, const Ell& ell,
                  uint64_t n, const ExactDistance& eps) {
  auto w = closeness_matrix(g, x, ell, n, eps);
  const uint64_t back = ell.is_inf() ? UINT64_MAX : ell.value() - 1;
  uint64_t c = 0;
  for (int64_t delta = -(static_cast<int64_t>(n) - 1);
       delta < static_cast<int64_t>(n); ++delta) {
    uint64_t i = delta < 0 ? -delta : 0;
    uint64_t j = delta < 0 ? 0 : delta;
    bool seen = false;
    uint64_t last = 0;
    for (; i < n && j < n; ++i, ++j) {
      if (w[i * n + j]) {
        seen = true;
        last = i;
      }
      if (seen && i - last <= back) ++c;
    }
  }
  return Rational(BigInt(c), BigInt(n) * n);
}

Rational rec_rate_identity(const OrbitMap& g, const RqaPoint& x,
                           const Ell& ell, uint64_t n,
                           const ExactDistance& eps) {
  if (ell.is_inf()) return corr_sum(g, x, ell, n, eps);
  const uint64_t l = ell.value();
  return Rational(l) * corr_sum(g, x, ell, n, eps) -
         Rational(l - 1) * corr_sum(g, x, Ell::finite(l + 1), n, eps);
}

Rational det(const OrbitMap& g, const RqaPoint& x, const Ell& ell, uint64_t n,
             const ExactDistance& eps) {
  Rational rr1 = rec_rate(g, x, Ell::finite(1), n, eps);
  if (rr1 == 0) throw DomainError("det undefined: RR_1 = 0");
  return rec_rate(g, x, ell, n, eps) / rr1;
}

ExactDistance determinism_threshold(const Alpha& alpha, int h) {
  if (h < 0) throw DomainError("h must be >= 0");
  ExactDistance base(std::vector<int64_t>{1, -2});
  if (h >= 1) return base.times_alpha_power(h - 1);
  return base.divided_by_alpha(alpha);
}

LimitDescriptor classify_point(const RqaPoint& x) {
  switch (x.kind()) {
    case RqaPoint::Kind::kWord:
      return {false, 0,
              "kappa(" + x.word().str() +
                  "0^inf) is not eventually periodic; limits are c_l of f"};
    case RqaPoint::Kind::kPeriodic:
      return {true, x.period_exponent(),
              "period 2^" + std::to_string(x.period_exponent()) +
                  "; limits are c_l of f_{alpha," +
                  std::to_string(x.period_exponent()) + "}"};
    case RqaPoint::Kind::kFloat:
      if (x.seed() == 0.0) {
        return {false, 0, "x = 0 = kappa(0^inf); limits are c_l of f"};
      }
      if (x.seed() == 1.0) {
        return {false, 0, "f(1) = 0; limits are c_l of f"};
      }
      break;
  }
  throw DomainError("a raw float seed cannot be classified numerically");
}

std::optional<BoundaryWords> find_boundary_words(const Alpha& alpha, int k,
                                                 int h,
                                                 const ExactDistance& eps) {
  if (k < 1 || h < 0 || k + h > kMaxWordLength) {
    throw DomainError("boundary words need k >= 1, h >= 0, k + h <= 30");
  }
  const int len = k + h;
  const uint64_t top = uint64_t{1} << len;
  KappaTable kt(alpha);
  Threshold th(alpha, eps);
  auto close = [&](uint64_t ga, uint64_t gb) {  // gamma values, ga <= gb
    const uint64_t ia = reverse_bits(ga - 1, len);
    const uint64_t ib = reverse_bits(gb - 1, len);
    return th.le(kt(ib) - kt(ia), 2 * KappaTable::error(),
                 [&] { return rho_of_indices(ib, ia, len); });
  };
  // Largest gamma >= base that is still close to base.
  auto last_close = [&](uint64_t base) {
    uint64_t lo = base;
    uint64_t hi = top;
    while (lo < hi) {
      uint64_t mid = lo + (hi - lo + 1) / 2;
      if (close(base, mid)) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    return lo;
  };
  BoundaryWords bw;
  bw.k = k;
  bw.h = h;
  const uint64_t g1 = last_close(1);
  if (!(g1 > (uint64_t{1} << (k - 1)) && g1 <= (uint64_t{1} << k))) {
    return std::nullopt;
  }
  bw.words.push_back(Word::from_gamma(g1, len));
  bw.offsets.push_back((uint64_t{1} << k) - g1);
  for (int m = 2; m <= h + 1; ++m) {
    const uint64_t base = uint64_t{1} << (k + m - 2);
    const uint64_t gm = last_close(base);
    if (!(gm >= base && gm < 2 * base)) return std::nullopt;
    bw.words.push_back(Word::from_gamma(gm, len));
    bw.offsets.push_back(gm - base);
  }
  return bw;
}

std::pair<Rational, Rational> c1_bounds(const Alpha& alpha, int k, int h,
                                        const ExactDistance& eps,
                                        const std::vector<Word>& words) {
  if (compare(eps, ExactDistance::alpha_power(h), alpha) > 0 ||
      compare(eps, ExactDistance::alpha_power(h + 1), alpha) <= 0) {
    throw DomainError("eps must lie in (alpha^{h+1}, alpha^h]");
  }
  auto bw = find_boundary_words(alpha, k, h, eps);
  if (!bw || bw->words != words) {
    throw DomainError("words violate the boundary closeness conditions");
  }
  const auto& j = bw->offsets;
  BigInt j1 = j[0];
  BigInt lower = (BigInt(1) << (h + 1)) * ((BigInt(1) << (2 * k - 1)) - j1 * j1);
  BigInt upper = (BigInt(1) << h) * ((BigInt(1) << (2 * k)) - j1 * j1);
  for (int m = 2; m <= h + 1; ++m) {
    BigInt jm = j[m - 1];
    lower += (BigInt(1) << (h - m + 1)) * jm * jm;
    upper += (BigInt(1) << (h - m + 2)) * jm * jm;
  }
  BigInt den = BigInt(1) << (2 * (k + h));
  return {Rational(lower, den), Rational(upper, den)};
}

}  // namespace odo
