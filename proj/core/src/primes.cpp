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
#include <algorithm>
#include <cmath>
#include <string>

#include "dkn/arith.hpp"
#include "dkn/compensated.hpp"
#include "dkn/error.hpp"

namespace dkn::arith {
namespace {

constexpr std::uint64_t kSegment = std::uint64_t{1} << 18;

std::vector<std::uint32_t> small_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

void check_limit(std::uint64_t hi) {
  if (hi > kMaxPrimeLimit) {
    throw InvalidParameter("prime limit " + std::to_string(hi) + " exceeds 2^40");
  }
}

std::uint64_t normalize_residue(std::int64_t a, std::uint64_t k) {
  const auto sk = static_cast<std::int64_t>(k);
  return static_cast<std::uint64_t>(((a % sk) + sk) % sk);
}

}  // namespace

void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& visit) {
  check_limit(hi);
  lo = std::max<std::uint64_t>(lo, 2);
  if (hi < lo) return;

  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 1;
  const auto base = small_primes(root);

  std::vector<char> composite(kSegment);
  for (std::uint64_t seg_lo = lo; seg_lo <= hi; seg_lo += kSegment) {
    const std::uint64_t seg_hi = std::min(hi, seg_lo + kSegment - 1);
    std::fill(composite.begin(), composite.end(), 0);
    for (std::uint64_t p : base) {
      if (p * p > seg_hi) break;
      std::uint64_t start = std::max(p * p, (seg_lo + p - 1) / p * p);
      for (std::uint64_t j = start; j <= seg_hi; j += p) composite[j - seg_lo] = 1;
    }
    for (std::uint64_t v = seg_lo; v <= seg_hi; ++v) {
      if (!composite[v - seg_lo]) visit(v);
    }
    if (seg_hi == hi) break;
  }
}

PrimeTable primes_upto(std::uint64_t limit) {
  PrimeTable table;
  table.limit = limit;
  for_each_prime(2, limit, [&](std::uint64_t p) { table.primes.push_back(p); });
  return table;
}

PrimeTable primes_in_ap(std::uint64_t Q, std::uint64_t k, std::int64_t a) {
  if (k == 0) throw InvalidParameter("primes_in_ap: modulus must be positive");
  PrimeTable table;
  table.limit = Q;
  if (k == 1) {
    for_each_prime(2, Q, [&](std::uint64_t p) { table.primes.push_back(p); });
    return table;
  }
  const std::uint64_t r = normalize_residue(a, k);
  if (gcd(r, k) != 1) {
    throw InvalidParameter("primes_in_ap: gcd(" + std::to_string(a) + ", " + std::to_string(k) + ") != 1");
  }
  for_each_prime(2, Q, [&](std::uint64_t p) {
    if (p % k == r) table.primes.push_back(p);
  });
  return table;
}

double theta(std::uint64_t Q, std::uint64_t k, std::int64_t a) {
  if (k == 0) throw InvalidParameter("theta: modulus must be positive");
  std::uint64_t r = 0;
  if (k > 1) {
    r = normalize_residue(a, k);
    if (gcd(r, k) != 1) {
      throw InvalidParameter("theta: gcd(" + std::to_string(a) + ", " + std::to_string(k) + ") != 1");
    }
  }
  CompensatedSum sum;
  for_each_prime(2, Q, [&](std::uint64_t p) {
    if (k == 1 || p % k == r) sum.add(std::log(static_cast<double>(p)));
  });
  return sum.value();
}

}  // namespace dkn::arith
