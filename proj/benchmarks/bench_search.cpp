// Copyright 2026 The dkn Authors
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
#include <benchmark/benchmark.h>

#include "dkn/search.hpp"

namespace {

dkn::tuples::SearchParams params(std::int64_t n, unsigned k, unsigned m, std::uint64_t B) {
  dkn::tuples::SearchParams p;
  p.n = n;
  p.k = k;
  p.m = m;
  p.bound = B;
  return p;
}

void BM_PowerGraph(benchmark::State& state) {
  const auto p = params(256, 2, 5, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dkn::tuples::build_power_graph(p));
}
BENCHMARK(BM_PowerGraph)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_SearchQuintuples(benchmark::State& state) {
  const auto p = params(256, 2, 5, 20000);
  dkn::tuples::SearchOptions o;
  o.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dkn::tuples::search(p, o));
}
BENCHMARK(BM_SearchQuintuples)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_SearchCubes(benchmark::State& state) {
  const auto p = params(1, 3, 3, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dkn::tuples::search(p));
}
BENCHMARK(BM_SearchCubes)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
