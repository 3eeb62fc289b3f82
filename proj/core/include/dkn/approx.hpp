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

#include <cstddef>
#include <optional>
#include <vector>

#include "dkn/bigint.hpp"
#include "dkn/tuples.hpp"

namespace dkn::approx {

/// alpha = (a1/a2)^(1/k) with its degree over Q and absolute height.
///
/// a1/a2 = u/w in lowest terms; d is the largest divisor of k with u and w
/// both d-th powers, so alpha = (u'/w')^(1/r) with r = k/d and x^r - u'/w'
/// irreducible. All conjugates have modulus alpha < 1, hence H = w'^(1/r).
struct RootAlpha {
  BigInt a1;
  BigInt a2;
  unsigned k = 0;
  BigInt u_red;
  BigInt w_red;
  unsigned degree = 0;
  BigInt min_num;  // u'
  BigInt min_den;  // w', leading coefficient of w' x^r - u'
  double height = 0.0;
};

RootAlpha height_of_root(const BigInt& a1, const BigInt& a2, unsigned k);

/// x = a_i with a_1 x + n = u^k and a_2 x + n = v^k (index i is 1-based).
struct SolutionPair {
  std::size_t index = 0;
  BigInt x;
  BigInt u;
  BigInt v;

  friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

/// Pairs for every i >= 3 of a verified tuple, ordered by i. Throws
/// InvalidParameter when t does not verify.
std::vector<SolutionPair> solution_pairs(const tuples::TupleRecord& t,
                                         const tuples::PowerPolicy& policy = {});

/// prod_{j=1}^{(k-1)/2} sin^2(2 pi j / k) for odd k >= 3.
double c_lemma(unsigned k);

/// 2^(1/(L-1)) c(k)^(-1/(L-1)).
double n_threshold(unsigned k, unsigned L);

/// |u/v - alpha| <= a2 / (2 v^k), decided in exact rational arithmetic.
bool lemma31_inequality(const BigInt& u, const BigInt& v, const BigInt& a1, const BigInt& a2,
                        unsigned k);

enum class Verdict { kHolds, kFails, kUnresolved };

struct CertifiedComparison {
  Verdict verdict = Verdict::kUnresolved;
  unsigned long precision_bits = 0;
};

/// |u/v - alpha| < v^-(k - 1/2) by outward-rounded interval arithmetic at
/// doubling precision. Unresolved once both enclosures are narrower than
/// 2^-256 relative to the threshold without separating.
CertifiedComparison lemma32_inequality(const BigInt& u, const BigInt& v, const BigInt& a1,
                                       const BigInt& a2, unsigned k);

struct ApproxCheck {
  std::size_t index = 0;
  BigInt u;
  BigInt v;
  bool lem31_holds = false;
  /// The second inequality is asserted only for i >= 14 with v_i > a_2^4.
  bool lem32_applicable = false;
  std::optional<bool> lem32_inequality;  // nullopt when unresolved
  std::optional<bool> lem32_holds;       // set only when applicable and resolved
  bool certified = false;
  unsigned long precision_bits = 0;
};

ApproxCheck approx_check(const tuples::TupleRecord& t, std::size_t i,
                         const tuples::PowerPolicy& policy = {});

}  // namespace dkn::approx
