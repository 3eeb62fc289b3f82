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

#include <random>

#include "dkn/arith.hpp"

namespace {

void BM_IkrootBig(benchmark::State& state) {
  const unsigned bits = static_cast<unsigned>(state.range(0));
  const unsigned k = static_cast<unsigned>(state.range(1));
  std::mt19937_64 rng(1);
  std::vector<dkn::BigInt> xs;
  for (int i = 0; i < 256; ++i) {
    dkn::BigInt x = 1;
    while (mpz_sizeinbase(x.get_mpz_t(), 2) < bits) {
      x <<= 64;
      x += dkn::to_big(static_cast<std::uint64_t>(rng()));
    }
    xs.push_back(x >> static_cast<unsigned>(mpz_sizeinbase(x.get_mpz_t(), 2) - bits));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dkn::arith::ikroot(xs[i++ & 255], k));
  }
}
BENCHMARK(BM_IkrootBig)->Args({128, 2})->Args({128, 7})->Args({1024, 2})->Args({1024, 31});

void BM_IsKthPowerU64(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uint64_t x = rng();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dkn::arith::is_kth_power_u64(x, 2));
    x += 0x9e3779b97f4a7c15ULL;
  }
}
BENCHMARK(BM_IsKthPowerU64);

void BM_PrimesUpto(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(dkn::arith::primes_upto(static_cast<std::uint64_t>(state.range(0))));
  }
}
BENCHMARK(BM_PrimesUpto)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);

void BM_Theta(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(dkn::arith::theta(static_cast<std::uint64_t>(state.range(0)), 4, 1));
  }
}
BENCHMARK(BM_Theta)->Arg(1000000)->Arg(100000000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
