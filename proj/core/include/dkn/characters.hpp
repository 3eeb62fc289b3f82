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

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dkn::characters {

/// Largest modulus accepted for a full discrete-log table.
inline constexpr std::uint64_t kMaxCharacterModulus = std::uint64_t{1} << 20;

/// A Dirichlet character of exact order k modulo a prime p, k | p - 1:
/// chi(g^t) = zeta_k^(t mod k) for the smallest primitive root g, chi(0) = 0.
///
/// Values are carried as exponents of zeta_k so that sums stay exact until
/// they are embedded into the complex plane. Immutable once built.
class OrderKCharacter {
 public:
  OrderKCharacter(std::uint64_t p, unsigned k);

  std::uint64_t modulus() const { return p_; }
  unsigned order() const { return k_; }
  std::uint64_t generator() const { return g_; }

  /// Discrete log of x (mod p) to base g; x must be a unit.
  std::uint32_t index(std::uint64_t x) const;

  /// Exponent e with chi(x) = zeta_k^e, or nullopt when p | x.
  std::optional<unsigned> exponent(std::int64_t x) const;

  std::complex<double> value(std::int64_t x) const;

  /// zeta_k^e embedded in double precision.
  std::complex<double> root_of_unity(unsigned e) const;

 private:
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t g_;
  std::vector<std::uint32_t> ind_;  // ind_[g^t mod p] = t
};

/// Same as constructing OrderKCharacter; kept for symmetry with the CLI.
OrderKCharacter make_character(std::uint64_t p, unsigned k);

struct CharSumResult {
  std::complex<double> sum;
  double abs = 0.0;
  double bound = 0.0;  // sqrt(p |A| |B|)
  bool holds = false;  // abs <= bound + 1e-6
  /// Number of (a, b) terms landing on each power zeta_k^e; ab + n = 0 (mod p)
  /// terms are counted in `zero_terms`.
  std::vector<std::uint64_t> exponent_counts;
  std::uint64_t zero_terms = 0;
};

inline constexpr double kCharSumTolerance = 1e-6;

/// Sum over a in A, b in B of chi(ab + n).
///
/// A must hold distinct units mod p, B distinct residues in [0, p), and
/// gcd(n, p) = 1; anything else throws InvalidParameter.
CharSumResult char_sum(const OrderKCharacter& chi, std::span<const std::uint64_t> A,
                       std::span<const std::uint64_t> B, std::int64_t n);

/// sqrt(p) + 2, the a-priori bound on |S mod p| for a D_k(n) set S.
/// Throws InvalidParameter unless p is prime.
double sp_bound(std::uint64_t p);

}  // namespace dkn::characters
