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

// l-distance matrices D_{k,alpha,l}(eps) over pairs of words of length k.

#ifndef ODORQA_DISTMATRIX_HPP_
#define ODORQA_DISTMATRIX_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "odorqa/exact.hpp"
#include "odorqa/words.hpp"

namespace odo {

inline constexpr int kMaxMatrixK = 15;

// Horizon l: a positive integer or infinity.
class Ell {
 public:
  static Ell finite(uint64_t n);
  static Ell inf() { return Ell(); }
  // "inf" or a positive integer.
  static Ell parse(std::string_view text);

  bool is_inf() const { return inf_; }
  uint64_t value() const { return n_; }
  // Number of shifts that matter for words of length k: min(l, 2^k).
  uint64_t effective(int k) const;
  std::string str() const;

  friend bool operator==(const Ell&, const Ell&) = default;

 private:
  Ell() = default;
  bool inf_ = true;
  uint64_t n_ = 0;
};

// Square bit matrix with 64-bit rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(size_t n);

  size_t size() const { return n_; }
  size_t stride() const { return stride_; }
  bool get(size_t i, size_t j) const {
    return (bits_[i * stride_ + (j >> 6)] >> (j & 63)) & 1;
  }
  void set(size_t i, size_t j) {
    bits_[i * stride_ + (j >> 6)] |= uint64_t{1} << (j & 63);
  }
  // Sets columns [lo, hi) of row i.
  void set_range(size_t i, size_t lo, size_t hi);
  uint64_t* row(size_t i) { return bits_.data() + i * stride_; }
  const uint64_t* row(size_t i) const { return bits_.data() + i * stride_; }
  uint64_t count_row(size_t i) const;
  uint64_t count() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  size_t n_ = 0;
  size_t stride_ = 0;
  std::vector<uint64_t> bits_;
};

// Entry (g_u - 1, g_v - 1) is set iff rho_l(u, v) <= eps, with g = gamma.
struct DistanceMatrix {
  int k = 0;
  Alpha alpha{1, 3};
  Ell ell = Ell::finite(1);
  ExactDistance eps;
  BitMatrix bits;

  // 1-based gamma coordinates, as in the pattern statements.
  bool at(uint64_t gu, uint64_t gv) const { return bits.get(gu - 1, gv - 1); }
  uint64_t ones() const { return bits.count(); }
};

// max over 0 <= i < min(l, 2^k) of rho(u (+) i, v (+) i).
ExactDistance rho_ell(const Word& u, const Word& v, const Ell& ell,
                      const Alpha& alpha);

// The partner w of 0^k with rho_inf(u, v) = rho(0^k, w): w is whichever of
// d = v (+) (-u) and -d is larger in gamma order, so it begins 0^h 1 1.
Word rho_inf_partner(const Word& u, const Word& v);
// rho_inf(u, v) = kappa(rho_inf_partner(u, v)); requires u != v.
ExactDistance rho_inf_fast(const Word& u, const Word& v);

// Serial reference: every entry from rho_ell directly, O(4^k l).
DistanceMatrix build_matrix_naive(int k, const Alpha& alpha, const Ell& ell,
                                  const ExactDistance& eps);
// Row bands for l = 1, window doubling for finite l, rotations of row one
// for l = inf. Rows are filled in parallel.
DistanceMatrix build_matrix(int k, const Alpha& alpha, const Ell& ell,
                            const ExactDistance& eps);

// For l = 1 each row of D is a contiguous band of columns around the
// diagonal. band[i] = {lo, hi} (0-based, inclusive) for gamma row i.
std::vector<std::array<uint64_t, 2>> row_bands(int k, const Alpha& alpha,
                                               const ExactDistance& eps);

// Orbit-order matrix B[a][b] = [rho_l(0 (+) a, 0 (+) b) <= eps] for finite l.
BitMatrix orbit_window_matrix(int k, const Alpha& alpha, uint64_t ell,
                              const ExactDistance& eps);

enum class Pattern { kA0, kA1, kB0, kB1, kC0, kC1 };
inline constexpr std::array<Pattern, 6> kAllPatterns = {
    Pattern::kA0, Pattern::kA1, Pattern::kB0,
    Pattern::kB1, Pattern::kC0, Pattern::kC1};
std::string_view pattern_name(Pattern p);

struct PatternViolation {
  uint64_t i = 0;  // 1-based entry whose hypothesis holds
  uint64_t j = 0;
  uint64_t bad_i = 0;  // 1-based entry where the conclusion fails
  uint64_t bad_j = 0;
};

struct PatternReport {
  std::array<bool, 6> holds{true, true, true, true, true, true};
  std::array<std::optional<PatternViolation>, 6> first_violation;

  bool all() const;
  bool ok(Pattern p) const { return holds[static_cast<int>(p)]; }
};

// Checks the six implications on an l = 1 matrix (any square 0/1 matrix of
// size 2^k is accepted, which is how the checker itself is fuzzed). Row and
// column indices are 1-based gamma values; s_j is defined by
// 2^{s_j} < j <= 2^{s_j+1}.
//   A0  M[i,j] = 0 stays 0 moving away from the diagonal: for i < j along
//       j+1, j+2, ... and i-1, i-2, ...; for i > j along i+1, ... and j-1, ...
//   A1  M[i,j] = 1 stays 1 moving toward the diagonal.
//   B0  M[1,j] = 0 implies M[1+n, j+n] = 0.
//   B1  M[1,j] = 1, j >= 2, implies for 0 <= h < 2^{k-s_j-1}
//       M[1 + h 2^{s_j+1}, j + h 2^{s_j+1}] = 1 and
//       M[1 + (h+1) 2^{s_j+1} - j, (h+1) 2^{s_j+1}] = 1.
//   C0  for 2^m <= j, m <= s_j: M[2^m, j] = 0 implies
//       M[2^m + h 2^{s_j+1}, j + h 2^{s_j+1}] = 0 and
//       M[1 + (h+1) 2^{s_j+1} - j, 1 + (h+1) 2^{s_j+1} - 2^m] = 0.
//   C1  same range: M[2^m, j] = 1 implies
//       M[2^m + h 2^{s_j+1} - n, j + h 2^{s_j+1} - n] = 1 for 0 <= n < 2^m.
PatternReport verify_patterns(const BitMatrix& m, int k);
inline PatternReport verify_patterns(const DistanceMatrix& m) {
  return verify_patterns(m.bits, m.k);
}

// Smallest h >= 0 with eps <= alpha^h and eps > alpha^{h+1}; returns `cap`
// if eps <= alpha^cap. Requires 0 < eps <= 1.
int scale_index(const Alpha& alpha, const ExactDistance& eps, int cap);

// Ordered pairs (u, v) in (Sigma^k)^2 with rho_inf(u, v) <= eps, from the
// gamma-largest word 0^h 1 1 x with kappa <= eps: 2^k (2 gamma - 2^{k-h}).
uint64_t close_pair_count_inf(int k, const Alpha& alpha,
                              const ExactDistance& eps);
// Same count from a scan of row one, O(2^k).
uint64_t close_pair_count_inf_rowscan(int k, const Alpha& alpha,
                                      const ExactDistance& eps);
// Brute force over all 2^{2k} pairs and min(l, 2^k) shifts.
uint64_t close_pair_count_brute(int k, const Alpha& alpha, const Ell& ell,
                                const ExactDistance& eps);

// Plain PBM (P1) image, 1 = close.
void write_pbm(std::ostream& os, const DistanceMatrix& m,
               std::string_view comment);

}  // namespace odo

#endif  // ODORQA_DISTMATRIX_HPP_
