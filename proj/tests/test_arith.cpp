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
#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "dkn/arith.hpp"
#include "dkn/error.hpp"

namespace dkn::arith {
namespace {

BigInt random_bits(std::mt19937_64& rng, unsigned bits) {
  BigInt x = 0;
  for (unsigned done = 0; done < bits; done += 64) {
    x <<= 64;
    x += to_big(static_cast<std::uint64_t>(rng()));
  }
  return x >> (((bits + 63) / 64) * 64 - bits);
}

BigInt gmp_root(const BigInt& x, unsigned k) {
  BigInt r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

TEST(Ikroot, SmallExamples) {
  EXPECT_EQ(ikroot(BigInt(7396), 2), 86);
  EXPECT_EQ(ikroot(BigInt(0), 5), 0);
  EXPECT_EQ(ikroot(BigInt(26), 3), 2);
  EXPECT_EQ(ikroot(BigInt(27), 3), 3);
  EXPECT_EQ(ikroot(BigInt(1), 64), 1);
  EXPECT_EQ(ikroot(BigInt(12345), 1), 12345);
  EXPECT_THROW(ikroot(BigInt(10), 0), InvalidParameter);
  EXPECT_THROW(ikroot(BigInt(-1), 2), InvalidParameter);
}

TEST(Ikroot, MatchesGmpOnRandomInputs) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 20000; ++trial) {
    const unsigned bits = 1 + static_cast<unsigned>(rng() % 300);
    const unsigned k = 1 + static_cast<unsigned>(rng() % 70);
    const BigInt x = random_bits(rng, bits);
    const BigInt r = ikroot(x, k);
    ASSERT_EQ(r, gmp_root(x, k)) << x << " k=" << k;
    ASSERT_LE(pow_big(r, k), x);
    ASSERT_GT(pow_big(r + 1, k), x);
  }
}

TEST(Ikroot, PerfectPowersAndNeighbours) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5000; ++trial) {
    const unsigned k = 2 + static_cast<unsigned>(rng() % 20);
    const BigInt base = random_bits(rng, 1 + static_cast<unsigned>(rng() % 100)) + 2;
    const BigInt p = pow_big(base, k);
    ASSERT_EQ(ikroot(p, k), base);
    ASSERT_EQ(ikroot(p - 1, k), base - 1);
    ASSERT_EQ(ikroot(p + 1, k), base);
    ASSERT_EQ(is_kth_power(p, k), base);
    ASSERT_FALSE(is_kth_power(p - 1, k).has_value());
    ASSERT_FALSE(is_kth_power(p + 1, k).has_value());
  }
}

TEST(Ikroot, U64AgreesWithBigVersion) {
  std::mt19937_64 rng(99);
  const std::uint64_t edges[] = {0, 1, 2, 3, 4, 8, 9, 1ull << 32, (1ull << 32) - 1, ~0ull, ~0ull - 1,
                                 4294967296ull * 4294967295ull, 18446744030759878681ull};
  for (unsigned k = 1; k <= 64; ++k) {
    for (std::uint64_t x : edges) {
      ASSERT_EQ(to_big(ikroot_u64(x, k)), ikroot(to_big(x), k)) << x << " k=" << k;
    }
  }
  for (int trial = 0; trial < 50000; ++trial) {
    const std::uint64_t x = rng() >> (rng() % 64);
    const unsigned k = 1 + static_cast<unsigned>(rng() % 64);
    ASSERT_EQ(to_big(ikroot_u64(x, k)), ikroot(to_big(x), k)) << x << " k=" << k;
    const auto big = is_kth_power(to_big(x), k);
    const auto small = is_kth_power_u64(x, k);
    ASSERT_EQ(big.has_value(), small.has_value()) << x << " k=" << k;
    if (small) {
      ASSERT_EQ(to_big(*small), *big);
    }
  }
}

TEST(IsKthPower, Examples) {
  EXPECT_EQ(is_kth_power(BigInt(361), 2), 19);
  for (unsigned k = 1; k <= 10; ++k) EXPECT_EQ(is_kth_power(BigInt(1), k), 1);
  EXPECT_FALSE(is_kth_power(BigInt(10), 3).has_value());
  EXPECT_FALSE(is_kth_power(BigInt(0), 2).has_value());
  EXPECT_FALSE(is_kth_power(BigInt(-8), 3).has_value());
}

TEST(IsKthPower, PresentExactlyWhenRootPowerMatches) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20000; ++trial) {
    const unsigned k = 2 + static_cast<unsigned>(rng() % 6);
    const BigInt x = random_bits(rng, 1 + static_cast<unsigned>(rng() % 24));
    const bool expected = sgn(x) > 0 && pow_big(ikroot(x, k), k) == x;
    ASSERT_EQ(is_kth_power(x, k).has_value(), expected) << x;
  }
}

TEST(Primality, MatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 200000; ++n) ASSERT_EQ(is_prime(n), trial_prime(n)) << n;
}

TEST(Primality, LargeKnownValues) {
  EXPECT_TRUE(is_prime(2305843009213693951ull));   // 2^61 - 1
  EXPECT_TRUE(is_prime(18446744073709551557ull));  // largest 64-bit prime
  EXPECT_FALSE(is_prime(2047));
  EXPECT_FALSE(is_prime(3215031751ull));
  EXPECT_FALSE(is_prime(3825123056546413051ull));
  EXPECT_FALSE(is_prime(4611686014132420609ull));  // (2^31 - 1)^2
  EXPECT_FALSE(is_prime(18446744073709551615ull));
}

TEST(Totient, Examples) {
  EXPECT_EQ(totient(1), 1u);
  EXPECT_EQ(totient(12), 4u);
  EXPECT_EQ(totient(97), 96u);
  for (std::uint64_t k = 1; k <= 500; ++k) {
    std::uint64_t count = 0;
    for (std::uint64_t i = 1; i <= k; ++i) count += gcd(i, k) == 1;
    ASSERT_EQ(totient(k), count) << k;
  }
}

TEST(PrimitiveRoot, Examples) {
  EXPECT_EQ(primitive_root(7), 3u);
  EXPECT_EQ(primitive_root(2), 1u);
  EXPECT_EQ(primitive_root(13), 2u);
  EXPECT_THROW(primitive_root(15), InvalidParameter);
}

TEST(PrimitiveRoot, IsSmallestGenerator) {
  for (std::uint64_t p = 3; p < 2000; ++p) {
    if (!trial_prime(p)) continue;
    auto order = [p](std::uint64_t g) {
      std::uint64_t x = g % p, t = 1;
      while (x != 1) {
        x = x * g % p;
        ++t;
      }
      return t;
    };
    const std::uint64_t g = primitive_root(p);
    ASSERT_EQ(order(g), p - 1) << p;
    for (std::uint64_t h = 2; h < g; ++h) ASSERT_LT(order(h), p - 1) << p;
  }
}

TEST(Primes, SegmentedEnumerationMatchesSimpleSieve) {
  const std::uint64_t limit = 1200000;  // crosses several segments
  std::vector<bool> composite(limit + 1);
  std::vector<std::uint64_t> expected;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    expected.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  EXPECT_EQ(primes_upto(limit).primes, expected);

  std::vector<std::uint64_t> window;
  for_each_prime(262100, 262200, [&](std::uint64_t p) { window.push_back(p); });
  std::vector<std::uint64_t> window_expected;
  for (auto p : expected) {
    if (p >= 262100 && p <= 262200) window_expected.push_back(p);
  }
  EXPECT_EQ(window, window_expected);
}

TEST(Primes, HighWindow) {
  const std::uint64_t lo = 1000000000000ull;
  std::vector<std::uint64_t> got;
  for_each_prime(lo, lo + 2000, [&](std::uint64_t p) { got.push_back(p); });
  std::vector<std::uint64_t> expected;
  for (std::uint64_t x = lo; x <= lo + 2000; ++x) {
    if (is_prime(x)) expected.push_back(x);
  }
  EXPECT_EQ(got, expected);
  EXPECT_FALSE(got.empty());
}

TEST(PrimesInAp, Examples) {
  const std::vector<std::uint64_t> four{5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97};
  EXPECT_EQ(primes_in_ap(100, 4, 1).primes, four);
  EXPECT_TRUE(primes_in_ap(2, 3, 1).empty());
  const std::vector<std::uint64_t> all{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  EXPECT_EQ(primes_in_ap(30, 1, 0).primes, all);
  EXPECT_THROW(primes_in_ap(100, 4, 2), InvalidParameter);
  EXPECT_EQ(primes_in_ap(100, 4, -3).primes, four);
}

TEST(PrimesInAp, ReducedClassesPartitionPrimes) {
  for (std::uint64_t k : {3u, 4u, 5u, 7u, 12u, 30u}) {
    std::set<std::uint64_t> joined;
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(k); ++a) {
      if (gcd(static_cast<std::uint64_t>(a), k) != 1) continue;
      for (auto p : primes_in_ap(5000, k, a).primes) ASSERT_TRUE(joined.insert(p).second);
    }
    std::set<std::uint64_t> expected;
    for (auto p : primes_upto(5000).primes) {
      if (gcd(p, k) == 1) expected.insert(p);
    }
    EXPECT_EQ(joined, expected) << "k=" << k;
  }
}

TEST(Theta, Examples) {
  EXPECT_NEAR(theta(10, 4, 1), std::log(5.0), 1e-12);
  EXPECT_EQ(theta(2, 3, 1), 0.0);
  EXPECT_NEAR(theta(20, 1, 0), 16.087604484200032501, 1e-12);
}

TEST(Theta, MonotoneInQ) {
  double previous = 0.0;
  for (std::uint64_t Q = 1; Q <= 3000; Q += 7) {
    const double t = theta(Q, 3, 1);
    ASSERT_GE(t, previous);
    previous = t;
  }
}

}  // namespace
}  // namespace dkn::arith
