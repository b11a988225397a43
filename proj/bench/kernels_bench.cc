/* Copyright 2026 The Exodus Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/


// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "exodus/builders.h"
#include "exodus/kernels.h"
#include "exodus/twocat.h"

namespace exodus {
namespace {

const CatPtr& assoc_input() {
  static const CatPtr c = build_fin_vect(2, 2);
  return c;
}

const Concrete2Cat& interchange_input() {
  static const Concrete2Cat c = cat_2category(
      {{"x", cyclic_group(3)}, {"y", arrow_category()}, {"z", discrete_category(2)}});
  return c;
}

void BM_AssociativitySerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::associativity_failures_serial(*assoc_input()));
}
void BM_AssociativityParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::associativity_failures_parallel(*assoc_input()));
}

void BM_FunctorsSerial(benchmark::State& state) {
  const CatPtr c = finset(2), d = finset(3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::enumerate_functors_serial(c, d, {}));
}
void BM_FunctorsParallel(benchmark::State& state) {
  const CatPtr c = finset(2), d = finset(3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::enumerate_functors_parallel(c, d, {}));
}

void BM_InterchangeSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::interchange_failures_serial(interchange_input()));
}
void BM_InterchangeParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::interchange_failures_parallel(interchange_input()));
}

BENCHMARK(BM_AssociativitySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssociativityParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FunctorsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FunctorsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InterchangeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InterchangeParallel)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace exodus

BENCHMARK_MAIN();
