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

#include "odorqa/words.hpp"

#include "odorqa/errors.hpp"

namespace odo {
namespace {

void require_same_length(const Word& u, const Word& v) {
  if (u.k() != v.k()) throw DomainError("word length mismatch");
}

}  // namespace

Word::Word(int k, uint64_t packed) : k_(k), bits_(packed) {
  if (k < 0 || k > kMaxWordLength) {
    throw DomainError("word length must lie in [0, 30]");
  }
  if (packed & ~low_mask(k)) throw DomainError("word bits exceed length");
}

Word Word::parse(std::string_view bits) {
  if (bits.empty() || bits.size() > kMaxWordLength) {
    throw DomainError("word length must lie in [1, 30]");
  }
  uint64_t v = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw DomainError("malformed word: '" + std::string(bits) + "'");
    }
    v = (v << 1) | static_cast<uint64_t>(c - '0');
  }
  return Word(static_cast<int>(bits.size()), v);
}

Word Word::from_index(uint64_t index, int k) {
  return Word(k, reverse_bits(index & low_mask(k), k));
}

Word Word::from_gamma(uint64_t gamma, int k) {
  if (gamma < 1 || gamma > (uint64_t{1} << k)) {
    throw DomainError("gamma out of range");
  }
  return Word(k, gamma - 1);
}

Word Word::concat(const Word& suffix) const {
  return Word(k_ + suffix.k_, (bits_ << suffix.k_) | suffix.bits_);
}

bool Word::has_prefix(const Word& prefix) const {
  if (prefix.k_ > k_) return false;
  return (bits_ >> (k_ - prefix.k_)) == prefix.bits_;
}

std::string Word::str() const {
  std::string s(k_, '0');
  for (int i = 1; i <= k_; ++i) s[i - 1] = static_cast<char>('0' + bit(i));
  return s;
}

Word add_lr(const Word& u, const Word& v) {
  require_same_length(u, v);
  return Word::from_index(u.index() + v.index(), u.k());
}

Word add_lr_n(const Word& u, uint64_t n) {
  if (u.k() == 0) return u;
  return Word::from_index(u.index() + (n & low_mask(u.k())), u.k());
}

Word neg_lr(const Word& u) {
  return Word::from_index(~u.index() + 1, u.k());
}

Word add_rl(const Word& u, const Word& v) {
  require_same_length(u, v);
  return Word(u.k(), (u.packed() + v.packed()) & low_mask(u.k()));
}

Word succ_rl(const Word& u, uint64_t n) {
  uint64_t room = low_mask(u.k()) - u.packed();
  if (n > room) throw DomainError("succ_rl overflows past 1^k");
  return Word(u.k(), u.packed() + n);
}

Word pred_rl(const Word& u, uint64_t n) {
  if (n > u.packed()) throw DomainError("pred_rl underflows below 0^k");
  return Word(u.k(), u.packed() - n);
}

uint64_t gamma(const Word& u) {
  if (u.k() == 0) throw DomainError("gamma of the empty word");
  return u.packed() + 1;
}

uint64_t index_of(const Word& u) { return u.index(); }

ExactDistance kappa_of_index(uint64_t index, int K) {
  // (1 - a) * sum u_i a^{i-1} = sum u_i (a^{i-1} - a^i).
  std::vector<int64_t> c(K + 1, 0);
  for (int i = 0; i < K; ++i) {
    if ((index >> i) & 1) {
      c[i] += 1;
      c[i + 1] -= 1;
    }
  }
  return ExactDistance(std::move(c));
}

ExactDistance rho_of_indices(uint64_t a, uint64_t b, int K) {
  uint64_t ra = reverse_bits(a, K);
  uint64_t rb = reverse_bits(b, K);
  if (ra < rb) std::swap(a, b);
  return kappa_of_index(a, K) - kappa_of_index(b, K);
}

ExactDistance kappa(const Word& u) { return kappa_of_index(u.index(), u.k()); }

ExactDistance rho(const Word& u, const Word& v) {
  require_same_length(u, v);
  return rho_of_indices(u.index(), v.index(), u.k());
}

KappaTable::KappaTable(const Alpha& alpha) : alpha_(alpha) {
  const double one_minus = 1.0 - alpha.value();
  for (int b = 0; b < 8; ++b) {
    for (int x = 0; x < 256; ++x) {
      double s = 0.0;
      for (int i = 0; i < 8; ++i) {
        if ((x >> i) & 1) s += alpha.pow(8 * b + i);
      }
      table_[b][x] = one_minus * s;
    }
  }
}

}  // namespace odo
