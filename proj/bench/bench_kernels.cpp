// Copyright 2026 The jjdeform Authors. All Rights Reserved.
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


// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "jjdeform/catalog.hpp"
#include "jjdeform/cochain.hpp"
#include "jjdeform/cohomology.hpp"
#include "jjdeform/linalg.hpp"

namespace {

const jj::JJAlgebra& j5() {
  static const jj::JJAlgebra a = jj::catalog("J_1_5");
  return a;
}

const jj::Matrix& d2_matrix() {
  static const jj::Matrix m = jj::serial::differential_matrix(j5(), 2);
  return m;
}

void BM_rref_serial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(jj::serial::rref(d2_matrix()));
}
void BM_rref_parallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(jj::parallel::rref(d2_matrix()));
}
void BM_differential_serial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(jj::serial::differential_matrix(j5(), 2));
}
void BM_differential_parallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(jj::parallel::differential_matrix(j5(), 2));
}
void BM_h2_table_serial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(jj::serial::h2_table(jj::catalog_names(4)));
}
void BM_h2_table_parallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(jj::parallel::h2_table(jj::catalog_names(4)));
}

}  // namespace

BENCHMARK(BM_rref_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_differential_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_differential_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_h2_table_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_h2_table_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
