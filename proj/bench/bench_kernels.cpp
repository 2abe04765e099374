/*
   Copyright 2026 The flagseries Authors

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

// Serial reference versus OpenMP path for the three parallel kernels.

#include <benchmark/benchmark.h>

#include "flagseries/identities.hpp"
#include "flagseries/series.hpp"
#include "flagseries/sweep.hpp"

using namespace flagseries;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_ClosedForm(benchmark::State& state) {
  const RootSystem e8 = build_root_system(DynkinType(Family::E, 8));
  const auto constants = c_values(e8, weyl_vector(8));
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_from_constants(constants, mode(state)));
  state.SetLabel(mode(state) == Execution::serial ? "serial" : "parallel");
}

void BM_Sweep(benchmark::State& state) {
  const auto cases = weight_grid({DynkinType(Family::B, 4), DynkinType(Family::F, 4)}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(cases, 20, mode(state)));
  state.SetLabel(mode(state) == Execution::serial ? "serial" : "parallel");
}

void BM_Identity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_identity("4.4", 20, mode(state)));
  state.SetLabel(mode(state) == Execution::serial ? "serial" : "parallel");
}

}  // namespace

BENCHMARK(BM_ClosedForm)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Identity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
