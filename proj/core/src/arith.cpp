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
#include "dkn/arith.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dkn/error.hpp"

namespace dkn {

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) throw InvalidParameter("not an integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw InvalidParameter("not an integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

double log_big(const BigInt& x) {
  if (sgn(x) <= 0) throw InvalidParameter("log of a non-positive integer");
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

namespace arith {
namespace {

// r^k > x, without overflow.
bool pow_exceeds(std::uint64_t r, unsigned k, std::uint64_t x) {
  unsigned __int128 acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc *= r;
    if (acc > x) return true;
  }
  return false;
}

BigInt initial_estimate(const BigInt& x, unsigned k) {
  long e = 0;
  const double mant = mpz_get_d_2exp(&e, x.get_mpz_t());
  const double log2_root = (static_cast<double>(e) + std::log2(mant)) / k;
  // Nudge upward so the seed lands above the true root; Newton then descends.
  constexpr double kSlack = 1.0 + 1e-9;
  if (log2_root < 60.0) {
    const double est = std::ceil(std::exp2(log2_root) * kSlack) + 1.0;
    return to_big(static_cast<std::uint64_t>(est));
  }
  const long shift = static_cast<long>(std::floor(log2_root)) - 52;
  const double head = std::ceil(std::exp2(log2_root - static_cast<double>(shift)) * kSlack) + 1.0;
  BigInt r = to_big(static_cast<std::uint64_t>(head));
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  return r;
}

}  // namespace

BigInt ikroot(const BigInt& x, unsigned k) {
  if (k == 0) throw InvalidParameter("ikroot: k must be at least 1");
  if (sgn(x) < 0) throw InvalidParameter("ikroot: x must be nonnegative");
  if (k == 1 || x < 2) return x;
  if (fits_u64(x)) return to_big(ikroot_u64(to_u64(x), k));
  if (k >= mpz_sizeinbase(x.get_mpz_t(), 2)) return 1;

  BigInt r = initial_estimate(x, k);
  while (pow_big(r, k) <= x) r *= 2;

  // Integer Newton from above: strictly decreasing until it reaches the floor.
  BigInt next;
  for (;;) {
    BigInt rk1 = pow_big(r, k - 1);
    next = (BigInt(k - 1) * r + x / rk1) / k;
    if (next >= r) break;
    r = next;
  }
  while (pow_big(r, k) > x) --r;
  while (pow_big(r + 1, k) <= x) ++r;
  return r;
}

std::uint64_t ikroot_u64(std::uint64_t x, unsigned k) {
  if (k == 0) throw InvalidParameter("ikroot: k must be at least 1");
  if (k == 1 || x < 2) return x;
  if (k >= 64) return 1;
  double est = (k == 2) ? std::sqrt(static_cast<double>(x))
                        : std::pow(static_cast<double>(x), 1.0 / k);
  std::uint64_t r = est >= 4294967296.0 ? std::uint64_t{4294967295} : static_cast<std::uint64_t>(est);
  while (r > 0 && pow_exceeds(r, k, x)) --r;
  while (!pow_exceeds(r + 1, k, x)) ++r;
  return r;
}

std::optional<BigInt> is_kth_power(const BigInt& x, unsigned k) {
  if (k == 0) throw InvalidParameter("is_kth_power: k must be at least 1");
  if (sgn(x) <= 0) return std::nullopt;
  if (fits_u64(x)) {
    if (auto r = is_kth_power_u64(to_u64(x), k)) return to_big(*r);
    return std::nullopt;
  }
  BigInt r = ikroot(x, k);
  if (pow_big(r, k) == x) return r;
  return std::nullopt;
}

std::optional<std::uint64_t> is_kth_power_u64(std::uint64_t x, unsigned k) {
  if (k == 0) throw InvalidParameter("is_kth_power: k must be at least 1");
  if (x == 0) return std::nullopt;
  const std::uint64_t r = ikroot_u64(x, k);
  // r^k <= x always; equality iff r^k > x - 1.
  if (pow_exceeds(r, k, x - 1)) return r;
  return std::nullopt;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = (result * b) % mod;
    b = (b * b) % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t y = pow_mod(a, d, n);
    if (y == 1 || y == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      y = static_cast<std::uint64_t>((static_cast<unsigned __int128>(y) * y) % n);
      if (y == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t totient(std::uint64_t k) {
  if (k == 0) throw InvalidParameter("totient: k must be positive");
  std::uint64_t result = k;
  for (std::uint64_t p : prime_divisors(k)) result -= result / p;
  return result;
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidParameter("primitive_root: " + std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  const auto factors = prime_divisors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool generator = true;
    for (std::uint64_t q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw Error("primitive_root: no generator found");  // unreachable for prime p
}

}  // namespace arith
}  // namespace dkn
