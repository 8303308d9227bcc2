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

// Gap sequence a_i = (1/alpha)^{v2(i)} and its partial sums A(m, n).
//
// A sum of gap terms is stored as a histogram over the dyadic valuation,
// A = sum_j count[j] * alpha^{-j}, which is exact and independent of alpha.

#ifndef ODORQA_GAPSEQ_HPP_
#define ODORQA_GAPSEQ_HPP_

#include <cstdint>
#include <vector>

#include "odorqa/exact.hpp"
#include "odorqa/words.hpp"

namespace odo {

struct GapTerm {
  uint64_t i = 0;
  int j = 0;  // dyadic valuation of i

  double value(const Alpha& alpha) const;
  // a_i * alpha^e as a polynomial; requires e >= j.
  ExactDistance scaled(int e) const;
};

class GapSum {
 public:
  GapSum() = default;
  GapSum(uint64_t m, uint64_t n, std::vector<uint64_t> counts);

  uint64_t m() const { return m_; }
  uint64_t n() const { return n_; }
  // counts()[j] = number of terms with valuation j.
  const std::vector<uint64_t>& counts() const { return counts_; }
  int max_valuation() const { return static_cast<int>(counts_.size()) - 1; }

  double value(const Alpha& alpha) const;
  // A * alpha^e as a polynomial; requires e >= max_valuation().
  ExactDistance scaled(int e) const;

  friend bool operator==(const GapSum& a, const GapSum& b) {
    return a.counts_ == b.counts_;
  }

 private:
  uint64_t m_ = 1;
  uint64_t n_ = 0;
  std::vector<uint64_t> counts_;
};

GapTerm gap(uint64_t i);

// Term-by-term summation, O(n).
GapSum gap_sum_direct(uint64_t m, uint64_t n);
// Counts multiples of each 2^j in the index range, O(log(m + n)).
GapSum gap_sum_dyadic(uint64_t m, uint64_t n);
// Direct for n <= 2^16, dyadic above.
GapSum gap_sum(uint64_t m, uint64_t n);

// sign(A - B) at alpha, exact.
int compare(const GapSum& a, const GapSum& b, const Alpha& alpha);

// (gamma(v) - gamma(u)) a^k + a^{k-1} (1 - 2a) A(gamma(u), gamma(v) - gamma(u))
// for gamma(u) <= gamma(v), symmetric otherwise.
ExactDistance rho_gap(const Word& u, const Word& v);

}  // namespace odo

#endif  // ODORQA_GAPSEQ_HPP_
