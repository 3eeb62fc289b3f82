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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dkn/bigint.hpp"

namespace dkn::sieve {

/// The prime set P fed to the larger sieve.
struct PrimeSpec {
  enum class Kind { kAll, kOneModK };
  Kind kind = Kind::kAll;
  unsigned k = 1;

  static PrimeSpec all() { return {}; }
  static PrimeSpec one_mod(unsigned k) { return {Kind::kOneModK, k}; }

  bool admits(std::uint64_t p) const { return kind == Kind::kAll || p % k == 1 % k; }
  std::string describe() const;
};

enum class SieveMode { kAPosteriori, kAPriori };

struct PrimeRow {
  std::uint64_t p = 0;
  double log_p = 0.0;
  double weight = 0.0;                   // |S_p| or min(sqrt(p) + 2, p)
  std::optional<std::uint64_t> residues;  // a-posteriori only
};

/// Both sides of Gallagher's inequality
///   |S| <= (sum log p - log N) / (sum log p / w_p - log N)
/// over p <= Q in P. `bound` is present exactly when the denominator is
/// positive.
struct SieveReport {
  SieveMode mode = SieveMode::kAPosteriori;
  BigInt N;
  std::uint64_t Q = 0;
  PrimeSpec primes;
  std::string weight_rule;
  double log_N = 0.0;
  double numerator = 0.0;
  double denominator = 0.0;
  std::optional<double> bound;
  std::size_t prime_count = 0;
  std::optional<std::size_t> set_size;  // |S|, a-posteriori only
  std::vector<PrimeRow> rows;
};

inline constexpr const char* kAPrioriWeightRule = "min(sqrt(p)+2, p)";
inline constexpr const char* kAPosterioriWeightRule = "|S mod p|";

/// |{s mod p : s in S}|. Throws InvalidParameter for empty S or p < 2.
std::uint64_t residue_count(std::span<const BigInt> S, std::uint64_t p);

/// Larger sieve on an explicit set S within [1, N] with weights |S mod p|.
SieveReport gallagher_bound(std::span<const BigInt> S, const BigInt& N, const PrimeSpec& primes,
                            std::uint64_t Q);

/// ceil((phi(k) log N)^2) with N = |n|^3.
std::uint64_t default_apriori_Q(const BigInt& n, unsigned k);

/// A-priori larger sieve for D_k(n) sets inside [1, |n|^3]: primes p = 1
/// (mod k) up to Q, weight min(sqrt(p) + 2, p) per prime. A non-positive
/// denominator yields a report without a bound rather than an error.
SieveReport apriori_sieve_bound(const BigInt& n, unsigned k, std::optional<std::uint64_t> Q = {});

struct PntCheck {
  std::uint64_t Q = 0;
  unsigned k = 0;
  std::int64_t a = 0;
  double theta = 0.0;
  double main_term = 0.0;   // Q / phi(k)
  double error = 0.0;       // |theta - main_term|
  double allowance = 0.0;   // Q / (160 log Q)
  bool applies = false;     // Q >= Q0(k)
  bool holds_empirically = false;
};

/// Compares theta(Q; k, a) with Q/phi(k) against the explicit error
/// allowance for primes in progressions. Requires k >= 3, Q >= 3.
PntCheck pnt_check(std::uint64_t Q, unsigned k, std::int64_t a);

/// Per-prime rows as CSV with header "p,log_p,weight,residues".
std::string rows_csv(const SieveReport& report);

}  // namespace dkn::sieve
