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
#include "dkn/characters.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dkn/arith.hpp"
#include "dkn/error.hpp"

namespace dkn::characters {
namespace {

std::uint64_t reduce(std::int64_t x, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((x % sp) + sp) % sp);
}

void check_residue_set(std::span<const std::uint64_t> set, std::uint64_t p, bool allow_zero,
                       const char* name) {
  std::vector<char> seen(p, 0);
  for (std::uint64_t x : set) {
    if (x >= p) {
      throw InvalidParameter(std::string("char_sum: ") + name + " element " + std::to_string(x) +
                             " is not a residue mod " + std::to_string(p));
    }
    if (x == 0 && !allow_zero) {
      throw InvalidParameter(std::string("char_sum: ") + name + " must not contain 0");
    }
    if (seen[x]) {
      throw InvalidParameter(std::string("char_sum: ") + name + " repeats " + std::to_string(x));
    }
    seen[x] = 1;
  }
}

}  // namespace

OrderKCharacter::OrderKCharacter(std::uint64_t p, unsigned k) : p_(p), k_(k) {
  if (k < 2) throw InvalidParameter("character: order k must be at least 2");
  if (!arith::is_prime(p)) throw InvalidParameter("character: " + std::to_string(p) + " is not prime");
  if (p > kMaxCharacterModulus) {
    throw InvalidParameter("character: modulus " + std::to_string(p) + " exceeds 2^20");
  }
  if ((p - 1) % k != 0) {
    throw InvalidParameter("character: " + std::to_string(k) + " does not divide p - 1 = " +
                           std::to_string(p - 1));
  }
  g_ = arith::primitive_root(p);
  ind_.assign(p, 0);
  std::uint64_t x = 1;
  for (std::uint64_t t = 0; t + 1 < p; ++t) {
    ind_[x] = static_cast<std::uint32_t>(t);
    x = x * g_ % p;
  }
}

std::uint32_t OrderKCharacter::index(std::uint64_t x) const {
  x %= p_;
  if (x == 0) throw InvalidParameter("character: 0 has no discrete logarithm");
  return ind_[x];
}

std::optional<unsigned> OrderKCharacter::exponent(std::int64_t x) const {
  const std::uint64_t r = reduce(x, p_);
  if (r == 0) return std::nullopt;
  return static_cast<unsigned>(ind_[r] % k_);
}

std::complex<double> OrderKCharacter::root_of_unity(unsigned e) const {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(e % k_) / static_cast<double>(k_);
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> OrderKCharacter::value(std::int64_t x) const {
  const auto e = exponent(x);
  return e ? root_of_unity(*e) : std::complex<double>{0.0, 0.0};
}

OrderKCharacter make_character(std::uint64_t p, unsigned k) { return OrderKCharacter(p, k); }

CharSumResult char_sum(const OrderKCharacter& chi, std::span<const std::uint64_t> A,
                       std::span<const std::uint64_t> B, std::int64_t n) {
  const std::uint64_t p = chi.modulus();
  if (reduce(n, p) == 0) {
    throw InvalidParameter("char_sum: gcd(n, p) != 1 for n = " + std::to_string(n));
  }
  check_residue_set(A, p, false, "A");
  check_residue_set(B, p, true, "B");

  CharSumResult result;
  result.exponent_counts.assign(chi.order(), 0);
  const std::uint64_t shift = reduce(n, p);
  for (std::uint64_t a : A) {
    for (std::uint64_t b : B) {
      const std::uint64_t x = (a * b + shift) % p;
      if (x == 0) {
        ++result.zero_terms;
      } else {
        ++result.exponent_counts[chi.index(x) % chi.order()];
      }
    }
  }
  std::complex<double> total{0.0, 0.0};
  for (unsigned e = 0; e < chi.order(); ++e) {
    total += static_cast<double>(result.exponent_counts[e]) * chi.root_of_unity(e);
  }
  result.sum = total;
  result.abs = std::abs(total);
  result.bound = std::sqrt(static_cast<double>(p) * static_cast<double>(A.size()) *
                           static_cast<double>(B.size()));
  result.holds = result.abs <= result.bound + kCharSumTolerance;
  return result;
}

double sp_bound(std::uint64_t p) {
  if (!arith::is_prime(p)) throw InvalidParameter("sp_bound: " + std::to_string(p) + " is not prime");
  return std::sqrt(static_cast<double>(p)) + 2.0;
}

}  // namespace dkn::characters
