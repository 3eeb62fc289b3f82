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

#include <numeric>

#include "dkn/characters.hpp"
#include "dkn/sieve.hpp"

namespace {

void BM_Apriori(benchmark::State& state) {
  const dkn::BigInt n = dkn::pow_big(dkn::BigInt(10), static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dkn::sieve::apriori_sieve_bound(n, 3));
}
BENCHMARK(BM_Apriori)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Gallagher(benchmark::State& state) {
  std::vector<dkn::BigInt> S;
  for (long r = 1; r * r <= 1000000; ++r) S.emplace_back(r * r);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dkn::sieve::gallagher_bound(S, dkn::BigInt(1000000), dkn::sieve::PrimeSpec::all(),
                                                         static_cast<std::uint64_t>(state.range(0))));
  }
}
BENCHMARK(BM_Gallagher)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_CharSum(benchmark::State& state) {
  const std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
  const auto chi = dkn::characters::make_character(p, 2);
  std::vector<std::uint64_t> A(p - 1);
  std::iota(A.begin(), A.end(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(dkn::characters::char_sum(chi, A, A, 1));
}
BENCHMARK(BM_CharSum)->Arg(211)->Arg(2003)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
