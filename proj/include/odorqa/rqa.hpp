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

// Correlation sums, recurrence rates and determinism on finite orbits, exact
// correlation integrals of f_{alpha,k}, and certified values for f_alpha.

#ifndef ODORQA_RQA_HPP_
#define ODORQA_RQA_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "odorqa/distmatrix.hpp"
#include "odorqa/exact.hpp"
#include "odorqa/words.hpp"

namespace odo {

// ---------------------------------------------------------------------------
// Exact pair counts over (Sigma^k)^2.

// #{(u, v) : rho(u, v) <= eps} by recursion over pairs of prefixes. A node
// is decided as soon as the remaining digits cannot move the difference
// across eps; k <= 30.
uint64_t c1_pair_count(int k, const Alpha& alpha, const ExactDistance& eps);
// Serial two-pointer sweep in gamma order, O(2^k); k <= 26.
uint64_t c1_pair_count_sweep(int k, const Alpha& alpha,
                             const ExactDistance& eps);
// Any horizon: l = 1 and l >= 2^k use the closed forms above, other finite
// l use bit windows (k <= 14).
uint64_t pair_count(int k, const Alpha& alpha, const Ell& ell,
                    const ExactDistance& eps);

inline constexpr int kMaxWindowK = 14;

// c_l of f_{alpha,k} at eps: pair_count / 4^k.
Rational corr_integral_fk(const Alpha& alpha, int k, const Ell& ell,
                          const ExactDistance& eps);
// det_inf of f_{alpha,k}: c_inf / c_1.
Rational det_inf_fk(const Alpha& alpha, int k, const ExactDistance& eps);
// c^{l2|l1} = c_{l2} / c_{l1} for f_{alpha,k}.
Rational conditional_integral_fk(const Alpha& alpha, int k, const Ell& l2,
                                 const Ell& l1, const ExactDistance& eps);

// ---------------------------------------------------------------------------
// Certified approximation of f_alpha quantities by f_{alpha,k}.

struct ApproxValue {
  double value = 0.0;
  double error_radius = 0.0;
  int k_used = 0;
  Rational exact;  // the f_{alpha,k} value that `value` rounds
};

// RQA_MAX_K if set (clamped to [1, 30]), else 30.
int default_max_k();

double corr_radius(const Ell& ell, int k);
// 24 / (2^{k-h-1} - 8); infinite when 2^{k-h-1} <= 8.
double det_radius(int k, int h);

// Smallest admissible k with eps > alpha^k and corr_radius < tol.
ApproxValue corr_integral_f(const Alpha& alpha, const Ell& ell,
                            const ExactDistance& eps, double tol,
                            int max_k = default_max_k());
// Smallest admissible k with eps > alpha^k and det_radius < tol, where h is
// the scale index of eps.
ApproxValue det_inf_f(const Alpha& alpha, const ExactDistance& eps, double tol,
                      int max_k = default_max_k());

// ---------------------------------------------------------------------------
// The sandwich on c_1 at word length k + h, for alpha^{h+1} < eps <= alpha^h.

struct BoundaryWords {
  int k = 0;
  int h = 0;
  std::vector<Word> words;       // u_1 ... u_{h+1}, length k + h
  std::vector<uint64_t> offsets; // j_1 ... j_{h+1}
};

// u_1 is the gamma-last word close to row 1, u_m (m >= 2) the gamma-last
// word close to row 2^{k+m-2}. nullopt when one of them falls outside its
// window 2^{k-1} < gamma(u_1) <= 2^k, 2^{k+m-2} <= gamma(u_m) < 2^{k+m-1}.
std::optional<BoundaryWords> find_boundary_words(const Alpha& alpha, int k,
                                                 int h,
                                                 const ExactDistance& eps);

// lower = [2^{h+1} (2^{2k-1} - j_1^2) + sum_m 2^{h-m+1} j_m^2] / 4^{k+h}
// upper = [2^h (2^{2k} - j_1^2) + sum_m 2^{h-m+2} j_m^2] / 4^{k+h}
// Throws DomainError if the words are not the boundary words.
std::pair<Rational, Rational> c1_bounds(const Alpha& alpha, int k, int h,
                                        const ExactDistance& eps,
                                        const std::vector<Word>& words);

// ---------------------------------------------------------------------------
// Finite orbits.

// The map iterated: f_alpha, or f_{alpha,k} when k is set.
struct OrbitMap {
  Alpha alpha;
  std::optional<int> k;

  static OrbitMap f(const Alpha& a) { return OrbitMap{a, std::nullopt}; }
  static OrbitMap fk(const Alpha& a, int k) { return OrbitMap{a, k}; }
};

class RqaPoint {
 public:
  enum class Kind { kWord, kPeriodic, kFloat };

  // x = kappa(u 0^inf), exact.
  static RqaPoint word_point(const Word& u);
  // The point of period 2^k of f in I(0^k).
  static RqaPoint periodic(int k);
  // A raw seed, iterated in double precision.
  static RqaPoint float_seed(double x);

  Kind kind() const { return kind_; }
  const Word& word() const { return word_; }
  int period_exponent() const { return k_; }
  double seed() const { return x_; }

 private:
  Kind kind_ = Kind::kWord;
  Word word_;
  int k_ = 0;
  double x_ = 0.0;
};

// W[i*n + j] = [rho_l(g^i x, g^j x) <= eps] for 0 <= i, j < n.
std::vector<uint8_t> closeness_matrix(const OrbitMap& g, const RqaPoint& x,
                                      const Ell& ell, uint64_t n,
                                      const ExactDistance& eps);

// C_l(x, n, eps) = #{(i, j) : rho_l(g^i x, g^j x) <= eps} / n^2.
Rational corr_sum(const OrbitMap& g, const RqaPoint& x, const Ell& ell,
                  uint64_t n, const ExactDistance& eps);

// RR_l counts (i, j) for which some s <= min(i, j, l - 1) has
// rho_l(g^{i-s} x, g^{j-s} x) <= eps (s <= min(i, j) for l = inf).
Rational rec_rate(const OrbitMap& g, const RqaPoint& x, const Ell& ell,
                  uint64_t n, const ExactDistance& eps);
// l C_l - (l - 1) C_{l+1}, or C_inf for l = inf.
Rational rec_rate_identity(const OrbitMap& g, const RqaPoint& x,
                           const Ell& ell, uint64_t n,
                           const ExactDistance& eps);
// DET_l = RR_l / RR_1.
Rational det(const OrbitMap& g, const RqaPoint& x, const Ell& ell, uint64_t n,
             const ExactDistance& eps);

// (1 - 2a) a^{h-1}: for eps below it DET_l = 1 whenever l <= 2^h. A
// sufficient threshold, not a sharp one.
ExactDistance determinism_threshold(const Alpha& alpha, int h);

struct LimitDescriptor {
  bool periodic = false;  // limits are those of f_{alpha,k}
  int k = 0;
  std::string description;
};

// Eventually periodic points of period 2^k have the limits of f_{alpha,k};
// all others (including 0 and 1) those of f_alpha. Raw seeds other than 0
// and 1 are refused.
LimitDescriptor classify_point(const RqaPoint& x);

}  // namespace odo

#endif  // ODORQA_RQA_HPP_
