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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dkn/bigint.hpp"

namespace dkn::arith {

/// Upper limit accepted by the prime generators.
inline constexpr std::uint64_t kMaxPrimeLimit = std::uint64_t{1} << 40;

/// Ascending primes up to `limit`.
struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;

  std::size_t size() const { return primes.size(); }
  bool empty() const { return primes.empty(); }
};

/// floor(x^(1/k)). Throws InvalidParameter for k == 0 or x < 0.
///
/// A double-precision estimate seeds an integer Newton iteration; the result
/// is then corrected until r^k <= x < (r+1)^k holds by exact multiplication.
BigInt ikroot(const BigInt& x, unsigned k);

/// floor(x^(1/k)) for machine words; same correction discipline as ikroot.
std::uint64_t ikroot_u64(std::uint64_t x, unsigned k);

/// The root r >= 1 with r^k == x, or nullopt. Non-positive x yields nullopt.
std::optional<BigInt> is_kth_power(const BigInt& x, unsigned k);

/// Machine-word variant of is_kth_power.
std::optional<std::uint64_t> is_kth_power_u64(std::uint64_t x, unsigned k);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Distinct prime divisors of n, ascending (trial division).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::uint64_t totient(std::uint64_t k);

/// Smallest primitive root modulo the prime p (1 for p = 2).
std::uint64_t primitive_root(std::uint64_t p);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Calls `visit` for every prime in [lo, hi] in ascending order using a
/// segmented sieve of Eratosthenes. hi is capped at kMaxPrimeLimit.
void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& visit);

PrimeTable primes_upto(std::uint64_t limit);

/// Primes p <= Q with p = a (mod k). k == 1 selects every prime and ignores a.
/// Throws InvalidParameter when gcd(a, k) != 1.
PrimeTable primes_in_ap(std::uint64_t Q, std::uint64_t k, std::int64_t a);

/// Sum of log p over the primes of primes_in_ap(Q, k, a), compensated.
double theta(std::uint64_t Q, std::uint64_t k, std::int64_t a);

}  // namespace dkn::arith
