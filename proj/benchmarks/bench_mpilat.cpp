// Copyright 2026 The mpilat Authors
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


#include <random>

#include <benchmark/benchmark.h>

#include "mpilat/generators.hpp"
#include "mpilat/lattice.hpp"
#include "mpilat/solver.hpp"
#include "mpilat/targets.hpp"

using namespace mpilat;

namespace {

void BM_Decompose(benchmark::State &state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const CMatrix target = assemble_unitary(random_params(d, rng));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(target));
  state.SetComplexityN(d);
}
BENCHMARK(BM_Decompose)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_DecomposeFourier7(benchmark::State &state) {
  const CMatrix f7 = dft(7);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(f7));
}
BENCHMARK(BM_DecomposeFourier7);

void BM_AssembleSingle(benchmark::State &state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const LatticeParams p = random_params(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_unitary(p));
  state.SetComplexityN(d);
}
BENCHMARK(BM_AssembleSingle)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_AssembleTwoBosons(benchmark::State &state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  const GeneratorSet g(ParticleSpec::bosons(2), d);
  const LatticeParams p = random_params(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_unitary(p, g));
}
BENCHMARK(BM_AssembleTwoBosons)->DenseRange(3, 6);

void BM_BuildGeneratorSet(benchmark::State &state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(GeneratorSet(ParticleSpec::bosons(2), d));
}
BENCHMARK(BM_BuildGeneratorSet)->DenseRange(3, 6);

}  // namespace

BENCHMARK_MAIN();
