/*
   Copyright 2026 The cuphom Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#include <benchmark/benchmark.h>

#include <random>

#include "cuphom/field_engine.hpp"
#include "cuphom/lattice.hpp"
#include "cuphom/normal_form.hpp"

namespace {

using cuphom::IntMatrix;

IntMatrix random_matrix(std::size_t rows, std::size_t cols, int bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = draw(rng);
  }
  return m;
}

void BM_Hermite(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix m = random_matrix(n, n + n / 2, 9, 1);
  const bool with_u = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(cuphom::hermite_normal_form(m, with_u));
}
BENCHMARK(BM_Hermite)->ArgsProduct({{8, 16, 32, 64}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_Smith(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix m = random_matrix(n, n, 9, 2);
  for (auto _ : state) benchmark::DoNotOptimize(cuphom::smith_normal_form(m));
}
BENCHMARK(BM_Smith)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

void BM_Kernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix m = random_matrix(n / 2, n, 5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(cuphom::kernel_basis(m));
}
BENCHMARK(BM_Kernel)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

// range(1) = 0 forces the generic route by leaving out the p*I block.
void BM_Preimage(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix gens = random_matrix(n, n / 2, 5, 4);
  if (state.range(1) != 0) gens = gens.hconcat(IntMatrix::scalar(n, 3));
  const cuphom::Lattice l = cuphom::Lattice::span(gens);
  const IntMatrix phi = random_matrix(n, n, 5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(l.preimage(phi));
}
BENCHMARK(BM_Preimage)->ArgsProduct({{16, 32, 64}, {0, 1}})->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
