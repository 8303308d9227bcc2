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

// Binary words u_1...u_k and the two additions on them.
//
// Two packings of the same word appear throughout the library:
//   packed (gamma order): u_1 is the most significant bit, so
//       gamma(u) = packed + 1 and numeric order is gamma order;
//   index (orbit order):  u_1 is the least significant bit, so
//       0^k (+) n = u exactly when index = n, and (+) is machine addition.
// The two are bit reversals of each other.

#ifndef ODORQA_WORDS_HPP_
#define ODORQA_WORDS_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "odorqa/exact.hpp"

namespace odo {

inline constexpr int kMaxWordLength = 30;

inline uint64_t reverse_bits(uint64_t x, int k) {
  x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
  x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
  x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
  x = ((x >> 8) & 0x00FF00FF00FF00FFULL) | ((x & 0x00FF00FF00FF00FFULL) << 8);
  x = ((x >> 16) & 0x0000FFFF0000FFFFULL) |
      ((x & 0x0000FFFF0000FFFFULL) << 16);
  x = (x >> 32) | (x << 32);
  return k == 0 ? 0 : x >> (64 - k);
}

inline uint64_t low_mask(int k) {
  return k >= 64 ? ~uint64_t{0} : (uint64_t{1} << k) - 1;
}

class Word {
 public:
  Word() = default;
  // `packed` holds u_1 in bit k-1.
  Word(int k, uint64_t packed);

  static Word parse(std::string_view bits);
  static Word from_index(uint64_t index, int k);
  static Word from_gamma(uint64_t gamma, int k);
  static Word zeros(int k) { return Word(k, 0); }
  static Word ones(int k) { return Word(k, low_mask(k)); }

  int k() const { return k_; }
  uint64_t packed() const { return bits_; }
  uint64_t index() const { return reverse_bits(bits_, k_); }
  // u_i for 1 <= i <= k.
  int bit(int i) const { return static_cast<int>((bits_ >> (k_ - i)) & 1); }

  Word concat(const Word& suffix) const;
  bool has_prefix(const Word& prefix) const;
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int k_ = 0;
  uint64_t bits_ = 0;
};

// Left-to-right addition (carry moves toward u_k).
Word add_lr(const Word& u, const Word& v);
// u (+) n * 10^{k-1}.
Word add_lr_n(const Word& u, uint64_t n);
Word neg_lr(const Word& u);

// Ordinary binary addition, carry moving toward u_1; wraps modulo 2^k.
Word add_rl(const Word& u, const Word& v);
// u boxplus n; throws DomainError past 1^k.
Word succ_rl(const Word& u, uint64_t n);
// u boxminus n; requires n < gamma(u).
Word pred_rl(const Word& u, uint64_t n);

uint64_t gamma(const Word& u);
uint64_t index_of(const Word& u);

ExactDistance kappa(const Word& u);
ExactDistance rho(const Word& u, const Word& v);

// kappa of the K-digit word whose orbit index is `index` (u_1 = bit 0).
ExactDistance kappa_of_index(uint64_t index, int K);
// |kappa(a) - kappa(b)| for two K-digit orbit indices.
ExactDistance rho_of_indices(uint64_t a, uint64_t b, int K);

// Double precision kappa for orbit indices with up to 64 digits, by byte
// tables. Every value is within error() of the exact kappa.
class KappaTable {
 public:
  explicit KappaTable(const Alpha& alpha);

  double operator()(uint64_t index) const {
    double s = 0.0;
    for (int b = 0; b < 8 && index != 0; ++b, index >>= 8) {
      s += table_[b][index & 0xFF];
    }
    return s;
  }

  // Absolute error bound for one value; differences carry twice this.
  static constexpr double error() { return 128.0 * kUnitRoundoff; }

  const Alpha& alpha() const { return alpha_; }

 private:
  Alpha alpha_;
  std::array<std::array<double, 256>, 8> table_;
};

}  // namespace odo

#endif  // ODORQA_WORDS_HPP_
