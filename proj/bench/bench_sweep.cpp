// Copyright 2026 The dfogeom Authors
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

// Serial reference sweep against the OpenMP sweep on a reduced grid.

#include <benchmark/benchmark.h>

#include "dfogeom/sweep.hpp"

namespace {

dfogeom::SweepConfig bench_config(double step) {
  dfogeom::SweepConfig c;
  c.region.step = step;
  return c;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto config = bench_config(static_cast<double>(state.range(0)) / 2.0);
  std::uint64_t records = 0;
  for (auto _ : state) {
    dfogeom::full_sweep_serial(config, [&](const dfogeom::ConfigurationResult& r) {
      records += r.records.size();
    });
  }
  state.SetItemsProcessed(static_cast<int64_t>(records));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto config = bench_config(static_cast<double>(state.range(0)) / 2.0);
  const int jobs = static_cast<int>(state.range(1));
  std::uint64_t records = 0;
  for (auto _ : state) {
    dfogeom::full_sweep(
        config, [&](const dfogeom::ConfigurationResult& r) { records += r.records.size(); }, jobs);
  }
  state.SetItemsProcessed(static_cast<int64_t>(records));
}

}  // namespace

// range(0) is twice the grid step.
BENCHMARK(BM_SweepSerial)->Arg(5)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)
    ->Args({5, 1})
    ->Args({5, 2})
    ->Args({5, 4})
    ->Args({5, 8})
    ->Args({4, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
