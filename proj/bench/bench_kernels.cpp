// Copyright 2026 The orthox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "orthox/explorer.hpp"
#include "orthox/sweep.hpp"

using namespace orthox;

namespace {

void BM_TheoremSweep_Serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::theorem_sweep(st.range(0)));
}
void BM_TheoremSweep_Parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(theorem_sweep(st.range(0)));
}

void BM_Agreement_Serial(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(serial::quadform_agreement(1, st.range(0), 10000));
}
void BM_Agreement_Parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(quadform_agreement(1, st.range(0), 10000));
}

void BM_Valuations_Serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::orthogonal_pair_valuations(1, st.range(0)));
}
void BM_Valuations_Parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(orthogonal_pair_valuations(1, st.range(0)));
}

// Seed vectors for the search: all ones in Z^n, bound 3.
OrthoBasis ones(long n) {
  std::vector<BigInt> c(static_cast<std::size_t>(n), BigInt(1));
  return OrthoBasis({IntVector(std::move(c))});
}

SearchBudget box3() {
  SearchBudget b;
  b.coord_bound = 3;
  return b;
}

void BM_Explore_Serial(benchmark::State& st) {
  const OrthoBasis s = ones(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(serial::extend_search(s, box3()));
}
void BM_Explore_Parallel(benchmark::State& st) {
  const OrthoBasis s = ones(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(extend_search(s, box3()));
}

}  // namespace

BENCHMARK(BM_TheoremSweep_Serial)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TheoremSweep_Parallel)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Agreement_Serial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Agreement_Parallel)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Valuations_Serial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Valuations_Parallel)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Explore_Serial)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Explore_Parallel)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
