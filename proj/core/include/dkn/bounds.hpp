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
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dkn/bigint.hpp"

namespace dkn::bounds {

/// One evaluated bound. Every formula carries its hypothesis: when the
/// inputs fall outside it, `applicable` is false and `reason` says why.
struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::variant<double, BigInt> value = 0.0;
  /// Natural log of the value, filled for quantities that may overflow.
  std::optional<double> log_value;
  bool applicable = true;
  std::string reason;
  std::string provenance;
  std::vector<BoundReport> parts;
};

/// 2^25 kappa^-3 log(2r) log(kappa^-1 log(2r)): the number of exceptional
/// rational approximations to an algebraic number of degree r.
double evertse_count(std::uint64_t r, double kappa);

/// Least j with (k-1)^j > 4k. Requires k >= 3.
unsigned j0(std::uint64_t k);

/// Additive constant of the large-element bound: 14, or 2 + 3 j0(k) refined.
unsigned large_bound_offset(std::uint64_t k, bool refined);

/// Bound on the number of elements >= |n|^L of a D_k(n) set (L >= 3):
/// evertse_count(k, 1/2) + 14, with 14 replaced by 2 + 3 j0(k) if refined.
BoundReport effective_large_bound(std::uint64_t k, bool refined);

/// 3 phi(k) log|n|. Requires |n| >= 2 and k >= 2.
BoundReport main_term(const BigInt& n, std::uint64_t k);

/// Q0(k): 8e9 for 3 <= k <= 1e5, exp(0.03 sqrt(k) log^3 k) above. The value
/// is +inf when it overflows a double; log_value is always finite.
BoundReport q0(std::uint64_t k);

/// Q >= Q0(k), decided without overflow.
bool q_at_least_q0(std::uint64_t Q, std::uint64_t k);

/// Whether Q = (phi(k) log N)^2 with N = |n|^3 exceeds Q0(k).
bool q_condition(const BigInt& n, std::uint64_t k);

/// Earlier explicit bounds on the size of D_k(n) sets that apply to (n, k).
/// `value` is the smallest applicable one; `parts` lists each with its
/// provenance and applicability.
BoundReport prior_bounds(const BigInt& n, std::uint64_t k);

/// Markdown table of every bound evaluated at (n, k).
std::string bounds_table(const BigInt& n, std::uint64_t k);

}  // namespace dkn::bounds
