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

// Serial references against the parallel/fast kernels. Argument is k, or
// the grid size for the profile pair.

#include <benchmark/benchmark.h>

#include "odorqa/analysis.hpp"
#include "odorqa/distmatrix.hpp"
#include "odorqa/expr.hpp"
#include "odorqa/rqa.hpp"

namespace {

using namespace odo;

const Alpha kAlpha(2, 5);

void BM_MatrixNaive(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  const auto eps = parse_eps("a^2");
  for (auto _ : st) {
    benchmark::DoNotOptimize(build_matrix_naive(k, kAlpha, Ell::finite(4), eps));
  }
}
BENCHMARK(BM_MatrixNaive)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_Matrix(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  const auto eps = parse_eps("a^2");
  for (auto _ : st) {
    benchmark::DoNotOptimize(build_matrix(k, kAlpha, Ell::finite(4), eps));
  }
}
BENCHMARK(BM_Matrix)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_InfCountRowscan(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  const auto eps = parse_eps("1-a");
  for (auto _ : st) {
    benchmark::DoNotOptimize(close_pair_count_inf_rowscan(k, kAlpha, eps));
  }
}
BENCHMARK(BM_InfCountRowscan)->Arg(12)->Arg(16)->Arg(20);

void BM_InfCount(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  const auto eps = parse_eps("1-a");
  for (auto _ : st) {
    benchmark::DoNotOptimize(close_pair_count_inf(k, kAlpha, eps));
  }
}
BENCHMARK(BM_InfCount)->Arg(12)->Arg(16)->Arg(20);

void BM_C1Sweep(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  const auto eps = parse_eps("1-a");
  for (auto _ : st) {
    benchmark::DoNotOptimize(c1_pair_count_sweep(k, kAlpha, eps));
  }
}
BENCHMARK(BM_C1Sweep)->Arg(12)->Arg(16)->Arg(20);

void BM_C1Count(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  const auto eps = parse_eps("1-a");
  for (auto _ : st) {
    benchmark::DoNotOptimize(c1_pair_count(k, kAlpha, eps));
  }
}
BENCHMARK(BM_C1Count)->Arg(12)->Arg(16)->Arg(20);

void BM_ProfileSerial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) {
    benchmark::DoNotOptimize(det_profile_serial(kAlpha, n, 1e-2));
  }
}
BENCHMARK(BM_ProfileSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_Profile(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) {
    benchmark::DoNotOptimize(det_profile(kAlpha, n, 1e-2));
  }
}
BENCHMARK(BM_Profile)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
