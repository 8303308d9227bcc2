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

#include "odorqa/gapseq.hpp"

#include <bit>

#include "odorqa/errors.hpp"

namespace odo {
namespace {

void trim(std::vector<uint64_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

double GapTerm::value(const Alpha& alpha) const { return 1.0 / alpha.pow(j); }

ExactDistance GapTerm::scaled(int e) const {
  if (e < j) throw DomainError("scale below gap valuation");
  return ExactDistance::alpha_power(e - j);
}

GapSum::GapSum(uint64_t m, uint64_t n, std::vector<uint64_t> counts)
    : m_(m), n_(n), counts_(std::move(counts)) {
  trim(counts_);
}

double GapSum::value(const Alpha& alpha) const {
  double s = 0.0;
  for (size_t j = 0; j < counts_.size(); ++j) {
    s += static_cast<double>(counts_[j]) / alpha.pow(static_cast<int>(j));
  }
  return s;
}

ExactDistance GapSum::scaled(int e) const {
  if (e < max_valuation()) throw DomainError("scale below gap valuation");
  std::vector<int64_t> c(e + 1, 0);
  for (size_t j = 0; j < counts_.size(); ++j) {
    c[e - j] = static_cast<int64_t>(counts_[j]);
  }
  return ExactDistance(std::move(c));
}

GapTerm gap(uint64_t i) {
  if (i == 0) throw DomainError("gap index must be >= 1");
  return GapTerm{i, std::countr_zero(i)};
}

GapSum gap_sum_direct(uint64_t m, uint64_t n) {
  if (m == 0) throw DomainError("gap sum start must be >= 1");
  std::vector<uint64_t> c;
  for (uint64_t i = m; i < m + n; ++i) {
    size_t j = static_cast<size_t>(std::countr_zero(i));
    if (c.size() <= j) c.resize(j + 1, 0);
    ++c[j];
  }
  return GapSum(m, n, std::move(c));
}

GapSum gap_sum_dyadic(uint64_t m, uint64_t n) {
  if (m == 0) throw DomainError("gap sum start must be >= 1");
  std::vector<uint64_t> c;
  if (n == 0) return GapSum(m, n, c);
  const uint64_t last = m + n - 1;
  // multiples(j) = #{i in [m, last] : 2^j | i}; exact valuation j is
  // multiples(j) - multiples(j + 1).
  auto multiples = [&](int j) {
    return (last >> j) - ((m - 1) >> j);
  };
  for (int j = 0; j < 64 && (last >> j) != 0; ++j) {
    uint64_t next = j + 1 < 64 ? multiples(j + 1) : 0;
    c.push_back(multiples(j) - next);
  }
  return GapSum(m, n, std::move(c));
}

GapSum gap_sum(uint64_t m, uint64_t n) {
  return n <= (uint64_t{1} << 16) ? gap_sum_direct(m, n)
                                  : gap_sum_dyadic(m, n);
}

int compare(const GapSum& a, const GapSum& b, const Alpha& alpha) {
  int e = std::max(a.max_valuation(), b.max_valuation());
  if (e < 0) return 0;
  return compare(a.scaled(e), b.scaled(e), alpha);
}

ExactDistance rho_gap(const Word& u, const Word& v) {
  if (u.k() != v.k()) throw DomainError("word length mismatch");
  const int k = u.k();
  if (k == 0) throw DomainError("rho_gap needs k >= 1");
  uint64_t gu = gamma(u);
  uint64_t gv = gamma(v);
  if (gu > gv) std::swap(gu, gv);
  const uint64_t n = gv - gu;
  if (n == 0) return ExactDistance();
  // Indices stay below 2^k, so every valuation is at most k - 1.
  ExactDistance sum_scaled = gap_sum(gu, n).scaled(k - 1);
  ExactDistance one_minus_two_a(std::vector<int64_t>{1, -2});
  return ExactDistance::constant(static_cast<int64_t>(n)).times_alpha_power(k) +
         sum_scaled * one_minus_two_a;
}

}  // namespace odo
