/* Copyright (C) 2026 The permpoly authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

// Compares the OpenMP kernels against their serial reference on maps that
// are expensive enough per element to show the speedup.
//
//   cmake --build build --target permpoly_bench && ./build/permpoly_bench

#include <benchmark/benchmark.h>

#include "permpoly/construct.hpp"
#include "permpoly/oracle.hpp"
#include "permpoly/symm.hpp"

using namespace permpoly;

namespace {

const FieldTower& tower_64k() {
  static const FieldTower t = FieldTower::make(2, 1, 16);
  return t;
}

const FieldTower& tower_59k() {
  static const FieldTower t = FieldTower::make(3, 1, 10);
  return t;
}

const FieldTower& tower_1k() {
  static const FieldTower t = FieldTower::make(2, 5, 2);
  return t;
}

Map lambda2_construction(const FieldTower& t) {
  // x * h(lambda_2(x)) with h(x) = x + 1; lambda costs O(m^2) products per
  // element, which makes the scan compute-bound.
  return {"x*h(lambda_2)", &t, [&t](code_t x) {
            const code_t v = lambda_j(t, x, 2);
            return t.mul(x, t.add(v, 1));
          }};
}

void BM_tabulate_serial(benchmark::State& state, const FieldTower& t) {
  const auto map = lambda2_construction(t);
  for (auto _ : state) {
    auto table = oracle::tabulate_serial(map);
    benchmark::DoNotOptimize(table);
  }
}

void BM_tabulate_parallel(benchmark::State& state, const FieldTower& t) {
  const auto map = lambda2_construction(t);
  for (auto _ : state) {
    auto table = oracle::tabulate_parallel(map);
    benchmark::DoNotOptimize(table);
  }
}

void BM_is_permutation(benchmark::State& state, const FieldTower& t, Exec exec) {
  const auto map = lambda2_construction(t);
  for (auto _ : state) {
    auto rep = oracle::is_permutation(map, exec);
    benchmark::DoNotOptimize(rep);
  }
}

void BM_translator_search(benchmark::State& state, Exec exec) {
  const auto& t = tower_1k();
  const auto f = FqMap::trace(t);
  for (auto _ : state) {
    auto certs = find_linear_translators(f, exec);
    benchmark::DoNotOptimize(certs);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_tabulate_serial, f2_16, tower_64k());
BENCHMARK_CAPTURE(BM_tabulate_parallel, f2_16, tower_64k());
BENCHMARK_CAPTURE(BM_tabulate_serial, f3_10, tower_59k());
BENCHMARK_CAPTURE(BM_tabulate_parallel, f3_10, tower_59k());
BENCHMARK_CAPTURE(BM_is_permutation, f2_16_serial, tower_64k(), Exec::Serial);
BENCHMARK_CAPTURE(BM_is_permutation, f2_16_parallel, tower_64k(), Exec::Parallel);
BENCHMARK_CAPTURE(BM_translator_search, serial, Exec::Serial);
BENCHMARK_CAPTURE(BM_translator_search, parallel, Exec::Parallel);

BENCHMARK_MAIN();
