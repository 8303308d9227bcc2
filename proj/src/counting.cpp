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

// Pair counts over (Sigma^k)^2 and the certified k selection built on them.

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "odorqa/errors.hpp"
#include "odorqa/rqa.hpp"

namespace odo {
namespace {

void require_k(int k, int cap) {
  if (k < 0 || k > cap) {
    throw CapError("k = " + std::to_string(k) + " exceeds the cap " +
                   std::to_string(cap));
  }
}

Rational over_four_pow(uint64_t count, int k) {
  return Rational(BigInt(count), BigInt(1) << (2 * k));
}

}  // namespace

uint64_t c1_pair_count(int k, const Alpha& alpha, const ExactDistance& eps) {
  require_k(k, kMaxWordLength);
  const uint64_t n = uint64_t{1} << k;
  const int sgn = eps.sign(alpha);
  if (sgn < 0) return 0;
  if (sgn == 0 || k == 0) return n;

  // Ordered pairs (x, y) with kappa(y) - kappa(x) <= eps, counted through
  // the digit differences d_i = y_i - x_i. After j digits the difference is
  // P = kappa(pos) - kappa(neg) and the rest lies in +-(a^j - a^k).
  struct Node {
    uint32_t pos;
    uint32_t neg;
    int j;
    uint64_t weight;
  };
  KappaTable kt(alpha);
  Threshold th(alpha, eps);
  const double err =
      2 * KappaTable::error() + 8.0 * (k + 2) * kUnitRoundoff;
  const ExactDistance ak = ExactDistance::alpha_power(k);
  std::vector<Node> stack{{0, 0, 0, 1}};
  uint64_t below = 0;
  while (!stack.empty()) {
    Node node = stack.back();
    stack.pop_back();
    const double p = kt(node.pos) - kt(node.neg);
    const double tail = alpha.pow(node.j) - alpha.pow(k);
    auto exact_p = [&] {
      return kappa_of_index(node.pos, k) - kappa_of_index(node.neg, k);
    };
    auto exact_tail = [&] { return ExactDistance::alpha_power(node.j) - ak; };
    if (th.le(p + tail, err, [&] { return exact_p() + exact_tail(); })) {
      below += node.weight << (2 * (k - node.j));
      continue;
    }
    if (!th.le(p - tail, err, [&] { return exact_p() - exact_tail(); })) {
      continue;
    }
    // At j = k the tail vanishes and one of the two tests above decides.
    const uint32_t bit = uint32_t{1} << node.j;
    stack.push_back({node.pos, node.neg, node.j + 1, 2 * node.weight});
    stack.push_back({node.pos | bit, node.neg, node.j + 1, node.weight});
    stack.push_back({node.pos, node.neg | bit, node.j + 1, node.weight});
  }
  // By symmetry #{diff < -eps} = n^2 - below.
  return 2 * below - n * n;
}

uint64_t c1_pair_count_sweep(int k, const Alpha& alpha,
                             const ExactDistance& eps) {
  require_k(k, 26);
  const uint64_t n = uint64_t{1} << k;
  if (eps.sign(alpha) < 0) return 0;
  KappaTable kt(alpha);
  Threshold th(alpha, eps);
  auto kap = [&](uint64_t g) { return kt(reverse_bits(g, k)); };
  uint64_t upper = 0;  // pairs g <= h with kappa(h) - kappa(g) <= eps
  uint64_t hi = 0;
  for (uint64_t g = 0; g < n; ++g) {
    if (hi < g) hi = g;
    const double kg = kap(g);
    while (hi + 1 < n &&
           th.le(kap(hi + 1) - kg, 2 * KappaTable::error(), [&] {
             return rho_of_indices(reverse_bits(hi + 1, k),
                                   reverse_bits(g, k), k);
           })) {
      ++hi;
    }
    upper += hi - g + 1;
  }
  return 2 * upper - n;
}

uint64_t pair_count(int k, const Alpha& alpha, const Ell& ell,
                    const ExactDistance& eps) {
  require_k(k, kMaxWordLength);
  const uint64_t shifts = ell.effective(k);
  if (shifts == 1) return c1_pair_count(k, alpha, eps);
  if (shifts == (uint64_t{1} << k)) return close_pair_count_inf(k, alpha, eps);
  if (k > kMaxWindowK) {
    throw CapError("finite l > 1 needs k <= 14 (bit windows)");
  }
  return orbit_window_matrix(k, alpha, shifts, eps).count();
}

Rational corr_integral_fk(const Alpha& alpha, int k, const Ell& ell,
                          const ExactDistance& eps) {
  return over_four_pow(pair_count(k, alpha, ell, eps), k);
}

Rational det_inf_fk(const Alpha& alpha, int k, const ExactDistance& eps) {
  uint64_t c1 = c1_pair_count(k, alpha, eps);
  if (c1 == 0) throw DomainError("det undefined: no close pairs");
  return Rational(BigInt(close_pair_count_inf(k, alpha, eps)), BigInt(c1));
}

Rational conditional_integral_fk(const Alpha& alpha, int k, const Ell& l2,
                                 const Ell& l1, const ExactDistance& eps) {
  uint64_t den = pair_count(k, alpha, l1, eps);
  if (den == 0) throw DomainError("conditional integral: zero denominator");
  return Rational(BigInt(pair_count(k, alpha, l2, eps)), BigInt(den));
}

int default_max_k() {
  const char* env = std::getenv("RQA_MAX_K");
  if (env == nullptr || *env == '\0') return kMaxWordLength;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0') return kMaxWordLength;
  return static_cast<int>(std::clamp<long>(v, 1, kMaxWordLength));
}

double corr_radius(const Ell& ell, int k) {
  const double scale = std::ldexp(1.0, -k);
  if (ell.is_inf()) return 4.0 * scale;
  if (ell.value() == 1) return 8.0 * scale;
  return 16.0 * static_cast<double>(ell.value()) * scale;
}

double det_radius(int k, int h) {
  const double d = std::ldexp(1.0, k - h - 1) - 8.0;
  return d > 0.0 ? 24.0 / d : INFINITY;
}

ApproxValue corr_integral_f(const Alpha& alpha, const Ell& ell,
                            const ExactDistance& eps, double tol, int max_k) {
  if (!(tol > 0.0)) throw DomainError("tol must be positive");
  if (eps.sign(alpha) <= 0) throw DomainError("eps must be positive");
  const bool window = !ell.is_inf() && ell.value() > 1;
  const int cap = std::min(max_k, window ? kMaxWindowK : kMaxWordLength);
  double best = INFINITY;
  for (int k = 1; k <= cap; ++k) {
    if (compare(eps, ExactDistance::alpha_power(k), alpha) <= 0) continue;
    const double r = corr_radius(ell, k);
    best = r;
    if (r >= tol) continue;
    Rational exact = corr_integral_fk(alpha, k, ell, eps);
    return ApproxValue{static_cast<double>(exact), r, k, exact};
  }
  std::ostringstream os;
  os << "tolerance " << tol << " unreachable with k <= " << cap
     << "; best radius " << best;
  throw ToleranceError(os.str(), best, cap);
}

ApproxValue det_inf_f(const Alpha& alpha, const ExactDistance& eps, double tol,
                      int max_k) {
  if (!(tol > 0.0)) throw DomainError("tol must be positive");
  if (eps.sign(alpha) <= 0) throw DomainError("eps must be positive");
  const int cap = std::min(max_k, kMaxWordLength);
  const int h = compare(eps, ExactDistance::constant(1), alpha) >= 0
                    ? 0
                    : scale_index(alpha, eps, Alpha::kMaxPower - 1);
  double best = INFINITY;
  for (int k = h + 5; k <= cap; ++k) {
    const double r = det_radius(k, h);
    best = r;
    if (r >= tol) continue;
    Rational exact = det_inf_fk(alpha, k, eps);
    return ApproxValue{static_cast<double>(exact), r, k, exact};
  }
  std::ostringstream os;
  os << "tolerance " << tol << " unreachable with k <= " << cap << " at h = "
     << h << "; best radius " << best;
  throw ToleranceError(os.str(), best, cap);
}

}  // namespace odo
