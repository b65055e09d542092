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

#include "cuphom/complex.hpp"
#include "cuphom/field_engine.hpp"
#include "cuphom/umodule.hpp"
#include "cuphom/verify.hpp"

namespace {

using namespace cuphom;

CoeffRing ring_arg(std::int64_t code) { return code == 0 ? CoeffRing::integers() : CoeffRing::integers_mod(code); }

void BM_PaperHomology(benchmark::State& state) {
  const ManifoldSpec spec = ManifoldSpec::three_torus_like(state.range(0), 2, ring_arg(state.range(1)));
  const ChainComplex cx = build_complex(spec);
  for (auto _ : state) benchmark::DoNotOptimize(homology(cx, Parity::Total));
}
BENCHMARK(BM_PaperHomology)->ArgsProduct({{1, 3, 5}, {0, 2, 3}})->Unit(benchmark::kMillisecond);

void BM_RandomSpecHomology(benchmark::State& state) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(state.range(0)));
  SpecSampler sampler;
  sampler.max_b1 = static_cast<int>(state.range(0));
  const ChainComplex cx = build_complex(random_spec(rng, sampler));
  for (auto _ : state) benchmark::DoNotOptimize(homology(cx, Parity::Even));
}
BENCHMARK(BM_RandomSpecHomology)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_LemmaTorus(benchmark::State& state) {
  const int b1 = static_cast<int>(state.range(0));
  std::vector<std::int64_t> xi(static_cast<std::size_t>(b1), 0);
  xi[0] = 5;
  const CoeffRing ring = ring_arg(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(check_lemma_torus(b1, xi, ring));
}
BENCHMARK(BM_LemmaTorus)->ArgsProduct({{3, 4, 5, 6}, {2, 5}})->Unit(benchmark::kMillisecond);

void BM_FieldHomology(benchmark::State& state) {
  const ManifoldSpec spec = ManifoldSpec::three_torus_like(state.range(0), 2, CoeffRing::rationals());
  const ChainComplex cx = build_complex(spec);
  for (auto _ : state) benchmark::DoNotOptimize(field_homology(cx, Parity::Total, spec.ring()));
}
BENCHMARK(BM_FieldHomology)->DenseRange(1, 5, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
