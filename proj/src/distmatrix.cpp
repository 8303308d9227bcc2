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

#include "odorqa/distmatrix.hpp"

#include <bit>
#include <charconv>
#include <cmath>

#include "odorqa/errors.hpp"

namespace odo {
namespace {

void require_matrix_k(int k) {
  if (k < 0 || k > kMaxMatrixK) {
    throw CapError("full matrices are limited to k <= 15");
  }
}

// out[b] = in[(b + t) mod n] for a row of n bits.
void rotate_down(const uint64_t* in, uint64_t* out, size_t n, size_t t) {
  t %= n;
  if (n < 64) {
    uint64_t v = in[0];
    uint64_t mask = low_mask(static_cast<int>(n));
    out[0] = t == 0 ? v : ((v >> t) | (v << (n - t))) & mask;
    return;
  }
  const size_t words = n / 64;
  const size_t w = t / 64;
  const unsigned s = static_cast<unsigned>(t % 64);
  for (size_t x = 0; x < words; ++x) {
    uint64_t lo = in[(x + w) % words];
    if (s == 0) {
      out[x] = lo;
    } else {
      uint64_t hi = in[(x + w + 1) % words];
      out[x] = (lo >> s) | (hi << (64 - s));
    }
  }
}

// next[a] = cur[a] & rot(cur[a + r], r): windows of length P become P + r.
BitMatrix extend_window(const BitMatrix& cur, uint64_t r) {
  const size_t n = cur.size();
  BitMatrix next(n);
  const size_t stride = cur.stride();
#pragma omp parallel
  {
    std::vector<uint64_t> tmp(stride);
#pragma omp for schedule(static)
    for (int64_t a = 0; a < static_cast<int64_t>(n); ++a) {
      rotate_down(cur.row((a + r) % n), tmp.data(), n, r);
      const uint64_t* src = cur.row(a);
      uint64_t* dst = next.row(a);
      for (size_t x = 0; x < stride; ++x) dst[x] = src[x] & tmp[x];
    }
  }
  return next;
}

int s_of(uint64_t j) { return static_cast<int>(std::bit_width(j - 1)) - 1; }

std::vector<double> kappa_gamma_order(int k, const KappaTable& kt) {
  const uint64_t n = uint64_t{1} << k;
  std::vector<double> out(n);
  for (uint64_t g = 0; g < n; ++g) out[g] = kt(reverse_bits(g, k));
  return out;
}

// rho_l(0 (+) a, 0 (+) b) <= eps by direct evaluation of each shift.
bool close_direct(uint64_t a, uint64_t b, int k, uint64_t shifts,
                  const KappaTable& kt, const Threshold& th) {
  const uint64_t mask = low_mask(k);
  for (uint64_t i = 0; i < shifts; ++i) {
    uint64_t x = (a + i) & mask;
    uint64_t y = (b + i) & mask;
    double d = std::fabs(kt(x) - kt(y));
    if (!th.le(d, 2 * KappaTable::error(),
               [&] { return rho_of_indices(x, y, k); })) {
      return false;
    }
  }
  return true;
}

}  // namespace

Ell Ell::finite(uint64_t n) {
  if (n == 0) throw DomainError("ell must be >= 1");
  Ell e;
  e.inf_ = false;
  e.n_ = n;
  return e;
}

Ell Ell::parse(std::string_view text) {
  if (text == "inf") return inf();
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0) {
    throw DomainError("ell must be a positive integer or 'inf'");
  }
  return finite(v);
}

uint64_t Ell::effective(int k) const {
  const uint64_t period = uint64_t{1} << k;
  return inf_ ? period : std::min(n_, period);
}

std::string Ell::str() const { return inf_ ? "inf" : std::to_string(n_); }

BitMatrix::BitMatrix(size_t n)
    : n_(n), stride_((n + 63) / 64), bits_(stride_ * n, 0) {}

void BitMatrix::set_range(size_t i, size_t lo, size_t hi) {
  uint64_t* r = row(i);
  while (lo < hi && (lo & 63) != 0) {
    r[lo >> 6] |= uint64_t{1} << (lo & 63);
    ++lo;
  }
  while (lo + 64 <= hi) {
    r[lo >> 6] = ~uint64_t{0};
    lo += 64;
  }
  while (lo < hi) {
    r[lo >> 6] |= uint64_t{1} << (lo & 63);
    ++lo;
  }
}

uint64_t BitMatrix::count_row(size_t i) const {
  uint64_t c = 0;
  const uint64_t* r = row(i);
  for (size_t x = 0; x < stride_; ++x) c += std::popcount(r[x]);
  return c;
}

uint64_t BitMatrix::count() const {
  uint64_t c = 0;
#pragma omp parallel for reduction(+ : c) schedule(static)
  for (int64_t i = 0; i < static_cast<int64_t>(n_); ++i) c += count_row(i);
  return c;
}

ExactDistance rho_ell(const Word& u, const Word& v, const Ell& ell,
                      const Alpha& alpha) {
  if (u.k() != v.k()) throw DomainError("word length mismatch");
  const int k = u.k();
  const uint64_t shifts = ell.effective(k);
  const uint64_t mask = low_mask(k);
  KappaTable kt(alpha);
  std::vector<double> d(shifts);
  double best = 0.0;
  for (uint64_t i = 0; i < shifts; ++i) {
    d[i] = std::fabs(kt((u.index() + i) & mask) - kt((v.index() + i) & mask));
    best = std::max(best, d[i]);
  }
  // Only shifts whose float value could be the maximum are compared exactly.
  const double slack = 4 * KappaTable::error();
  ExactDistance result;
  for (uint64_t i = 0; i < shifts; ++i) {
    if (d[i] < best - slack) continue;
    ExactDistance r =
        rho_of_indices((u.index() + i) & mask, (v.index() + i) & mask, k);
    if (compare(r, result, alpha) > 0) result = r;
  }
  return result;
}

Word rho_inf_partner(const Word& u, const Word& v) {
  if (u.k() != v.k()) throw DomainError("word length mismatch");
  if (u == v) throw DomainError("rho_inf_fast needs u != v");
  const int k = u.k();
  const uint64_t mask = low_mask(k);
  const uint64_t d = (v.index() - u.index()) & mask;
  const uint64_t nd = (~d + 1) & mask;
  return reverse_bits(d, k) > reverse_bits(nd, k) ? Word::from_index(d, k)
                                                  : Word::from_index(nd, k);
}

ExactDistance rho_inf_fast(const Word& u, const Word& v) {
  return kappa(rho_inf_partner(u, v));
}

DistanceMatrix build_matrix_naive(int k, const Alpha& alpha, const Ell& ell,
                                  const ExactDistance& eps) {
  require_matrix_k(k);
  const uint64_t n = uint64_t{1} << k;
  const uint64_t shifts = ell.effective(k);
  KappaTable kt(alpha);
  Threshold th(alpha, eps);
  DistanceMatrix m{k, alpha, ell, eps, BitMatrix(n)};
  for (uint64_t gi = 0; gi < n; ++gi) {
    for (uint64_t gj = 0; gj < n; ++gj) {
      if (close_direct(reverse_bits(gi, k), reverse_bits(gj, k), k, shifts, kt,
                       th)) {
        m.bits.set(gi, gj);
      }
    }
  }
  return m;
}

std::vector<std::array<uint64_t, 2>> row_bands(int k, const Alpha& alpha,
                                               const ExactDistance& eps) {
  const uint64_t n = uint64_t{1} << k;
  KappaTable kt(alpha);
  Threshold th(alpha, eps);
  std::vector<double> kap = kappa_gamma_order(k, kt);
  auto close = [&](uint64_t lo, uint64_t hi) {
    // kappa is increasing in gamma, so the difference is nonnegative.
    return th.le(kap[hi] - kap[lo], 2 * KappaTable::error(), [&] {
      return rho_of_indices(reverse_bits(hi, k), reverse_bits(lo, k), k);
    });
  };
  std::vector<std::array<uint64_t, 2>> band(n);
  uint64_t hi = 0;
  uint64_t lo = 0;
  for (uint64_t i = 0; i < n; ++i) {
    if (hi < i) hi = i;
    while (hi + 1 < n && close(i, hi + 1)) ++hi;
    while (!close(lo, i)) ++lo;
    band[i] = {lo, hi};
  }
  return band;
}

BitMatrix orbit_window_matrix(int k, const Alpha& alpha, uint64_t ell,
                              const ExactDistance& eps) {
  const uint64_t n = uint64_t{1} << k;
  ell = std::min(ell, n);
  auto band = row_bands(k, alpha, eps);
  BitMatrix cur(n);
#pragma omp parallel for schedule(static)
  for (int64_t a = 0; a < static_cast<int64_t>(n); ++a) {
    const auto [lo, hi] = band[reverse_bits(a, k)];
    for (uint64_t b = 0; b < n; ++b) {
      uint64_t g = reverse_bits(b, k);
      if (g >= lo && g <= hi) cur.set(a, b);
    }
  }
  uint64_t p = 1;
  while (2 * p <= ell) {
    cur = extend_window(cur, p);
    p *= 2;
  }
  if (ell > p) cur = extend_window(cur, ell - p);
  return cur;
}

DistanceMatrix build_matrix(int k, const Alpha& alpha, const Ell& ell,
                            const ExactDistance& eps) {
  require_matrix_k(k);
  const uint64_t n = uint64_t{1} << k;
  const uint64_t shifts = ell.effective(k);
  DistanceMatrix m{k, alpha, ell, eps, BitMatrix(n)};
  if (shifts == 1) {
    auto band = row_bands(k, alpha, eps);
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < static_cast<int64_t>(n); ++i) {
      m.bits.set_range(i, band[i][0], band[i][1] + 1);
    }
    return m;
  }
  if (shifts == n) {
    // rho_inf depends only on d = v (+) (-u); tabulate row one by d.
    KappaTable kt(alpha);
    Threshold th(alpha, eps);
    std::vector<char> close(n, 0);
    close[0] = 1;
#pragma omp parallel for schedule(static)
    for (int64_t d = 1; d < static_cast<int64_t>(n); ++d) {
      uint64_t w = rho_inf_partner(Word::zeros(k), Word::from_index(d, k))
                       .index();
      close[d] = th.le(kt(w), KappaTable::error(),
                       [&] { return kappa_of_index(w, k); });
    }
#pragma omp parallel for schedule(static)
    for (int64_t gi = 0; gi < static_cast<int64_t>(n); ++gi) {
      uint64_t a = reverse_bits(gi, k);
      for (uint64_t gj = 0; gj < n; ++gj) {
        if (close[(reverse_bits(gj, k) - a) & (n - 1)]) m.bits.set(gi, gj);
      }
    }
    return m;
  }
  BitMatrix orbit = orbit_window_matrix(k, alpha, shifts, eps);
#pragma omp parallel for schedule(static)
  for (int64_t gi = 0; gi < static_cast<int64_t>(n); ++gi) {
    uint64_t a = reverse_bits(gi, k);
    for (uint64_t gj = 0; gj < n; ++gj) {
      if (orbit.get(a, reverse_bits(gj, k))) m.bits.set(gi, gj);
    }
  }
  return m;
}

std::string_view pattern_name(Pattern p) {
  static constexpr std::array<std::string_view, 6> kNames = {
      "A0", "A1", "B0", "B1", "C0", "C1"};
  return kNames[static_cast<int>(p)];
}

bool PatternReport::all() const {
  for (bool h : holds) {
    if (!h) return false;
  }
  return true;
}

PatternReport verify_patterns(const BitMatrix& mat, int k) {
  const uint64_t n = uint64_t{1} << k;
  if (mat.size() != n) throw DomainError("matrix size must be 2^k");
  PatternReport rep;
  auto M = [&](uint64_t i, uint64_t j) { return mat.get(i - 1, j - 1); };
  auto fail = [&](Pattern p, uint64_t i, uint64_t j, uint64_t bi,
                  uint64_t bj) {
    int idx = static_cast<int>(p);
    if (rep.holds[idx]) {
      rep.holds[idx] = false;
      rep.first_violation[idx] = PatternViolation{i, j, bi, bj};
    }
  };

  // A0 and A1 reduce to one step by induction along each ray.
  for (uint64_t i = 1; i <= n; ++i) {
    for (uint64_t j = 1; j <= n; ++j) {
      if (!M(i, j)) {
        if (i < j) {
          if (j + 1 <= n && M(i, j + 1)) fail(Pattern::kA0, i, j, i, j + 1);
          if (i >= 2 && M(i - 1, j)) fail(Pattern::kA0, i, j, i - 1, j);
        } else if (i > j) {
          if (i + 1 <= n && M(i + 1, j)) fail(Pattern::kA0, i, j, i + 1, j);
          if (j >= 2 && M(i, j - 1)) fail(Pattern::kA0, i, j, i, j - 1);
        }
      } else {
        if (i > j && !M(i - 1, j)) fail(Pattern::kA1, i, j, i - 1, j);
        if (i < j && !M(i, j - 1)) fail(Pattern::kA1, i, j, i, j - 1);
      }
    }
  }

  for (uint64_t j = 1; j <= n; ++j) {
    if (!M(1, j)) {
      for (uint64_t t = 0; j + t <= n; ++t) {
        if (M(1 + t, j + t)) {
          fail(Pattern::kB0, 1, j, 1 + t, j + t);
          break;
        }
      }
    }
  }

  for (uint64_t j = 2; j <= n; ++j) {
    const int s = s_of(j);
    const uint64_t p = uint64_t{1} << (s + 1);
    const uint64_t reps = uint64_t{1} << (k - s - 1);
    if (M(1, j)) {
      for (uint64_t h = 0; h < reps; ++h) {
        if (!M(1 + h * p, j + h * p)) {
          fail(Pattern::kB1, 1, j, 1 + h * p, j + h * p);
        }
        if (!M(1 + (h + 1) * p - j, (h + 1) * p)) {
          fail(Pattern::kB1, 1, j, 1 + (h + 1) * p - j, (h + 1) * p);
        }
      }
    }
    for (int mm = 0; mm <= s; ++mm) {
      const uint64_t r = uint64_t{1} << mm;
      for (uint64_t h = 0; h < reps; ++h) {
        if (!M(r, j)) {
          if (M(r + h * p, j + h * p)) {
            fail(Pattern::kC0, r, j, r + h * p, j + h * p);
          }
          uint64_t bi = 1 + (h + 1) * p - j;
          uint64_t bj = 1 + (h + 1) * p - r;
          if (M(bi, bj)) fail(Pattern::kC0, r, j, bi, bj);
        } else {
          for (uint64_t t = 0; t < r; ++t) {
            if (!M(r + h * p - t, j + h * p - t)) {
              fail(Pattern::kC1, r, j, r + h * p - t, j + h * p - t);
              break;
            }
          }
        }
      }
    }
  }
  return rep;
}

int scale_index(const Alpha& alpha, const ExactDistance& eps, int cap) {
  int h = 0;
  while (h < cap &&
         compare(eps, ExactDistance::alpha_power(h + 1), alpha) <= 0) {
    ++h;
  }
  return h;
}

uint64_t close_pair_count_inf(int k, const Alpha& alpha,
                              const ExactDistance& eps) {
  if (k < 0 || k > kMaxWordLength) throw CapError("k must lie in [0, 30]");
  const uint64_t n = uint64_t{1} << k;
  const int sgn = eps.sign(alpha);
  if (sgn < 0) return 0;
  if (sgn == 0 || k == 0) return n;
  if (compare(eps, ExactDistance::constant(1), alpha) >= 0) return n * n;
  const int h = scale_index(alpha, eps, k);
  uint64_t count = 0;
  if (h >= k - 1) {
    // Only d = 0 and d = 0^{k-1}1 can be that close.
    ExactDistance last = ExactDistance(std::vector<int64_t>{1, -1})
                             .times_alpha_power(k - 1);
    count = 1 + (less_equal(last, eps, alpha) ? 1 : 0);
    return n * count;
  }
  const int m = k - h - 2;
  const uint64_t head = uint64_t{3} << m;
  KappaTable kt(alpha);
  Threshold th(alpha, eps);
  auto fits = [&](uint64_t x) {
    uint64_t idx = reverse_bits(head | x, k);
    return th.le(kt(idx), KappaTable::error(),
                 [&] { return kappa_of_index(idx, k); });
  };
  // Packed value of the boundary word 0^h 1 1 x; head - 1 stands for the
  // case where no such word qualifies.
  uint64_t packed = head - 1;
  if (fits(0)) {
    uint64_t lo = 0;
    uint64_t hi = (uint64_t{1} << m) - 1;
    while (lo < hi) {
      uint64_t mid = lo + (hi - lo + 1) / 2;
      if (fits(mid)) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    packed = head | lo;
  }
  const uint64_t g = packed + 1;
  count = 2 * g - (uint64_t{1} << (k - h));
  return n * count;
}

uint64_t close_pair_count_inf_rowscan(int k, const Alpha& alpha,
                                      const ExactDistance& eps) {
  if (k < 0 || k > 26) throw CapError("row scan is limited to k <= 26");
  const uint64_t n = uint64_t{1} << k;
  if (eps.sign(alpha) < 0) return 0;
  KappaTable kt(alpha);
  Threshold th(alpha, eps);
  uint64_t count = 1;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (int64_t d = 1; d < static_cast<int64_t>(n); ++d) {
    uint64_t w =
        rho_inf_partner(Word::zeros(k), Word::from_index(d, k)).index();
    if (th.le(kt(w), KappaTable::error(),
              [&] { return kappa_of_index(w, k); })) {
      ++count;
    }
  }
  return n * count;
}

uint64_t close_pair_count_brute(int k, const Alpha& alpha, const Ell& ell,
                                const ExactDistance& eps) {
  if (k < 0 || k > 12) throw CapError("brute force is limited to k <= 12");
  const uint64_t n = uint64_t{1} << k;
  const uint64_t shifts = ell.effective(k);
  KappaTable kt(alpha);
  Threshold th(alpha, eps);
  uint64_t count = 0;
  for (uint64_t a = 0; a < n; ++a) {
    for (uint64_t b = 0; b < n; ++b) {
      if (close_direct(a, b, k, shifts, kt, th)) ++count;
    }
  }
  return count;
}

void write_pbm(std::ostream& os, const DistanceMatrix& m,
               std::string_view comment) {
  const size_t n = m.bits.size();
  os << "P1\n# " << comment << "\n" << n << " " << n << "\n";
  std::string line(n, '0');
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) line[j] = m.bits.get(i, j) ? '1' : '0';
    os << line << "\n";
  }
}

}  // namespace odo
