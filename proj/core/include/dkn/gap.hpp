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
#include <span>
#include <vector>

#include "dkn/bigint.hpp"
#include "dkn/tuples.hpp"

namespace dkn::gap {

/// Exact comparison lhs >= rhs. `margin` is lhs/rhs as a double and is for
/// display only.
struct GapCheck {
  BigRational lhs;
  BigRational rhs;
  bool holds = false;
  double margin = 0.0;
};

/// bd >= k^k n^-k (ac)^(k-1) for a < b, c < d with ac+n, bc+n, ad+n, bd+n
/// all k-th powers. Throws PreconditionFailed naming the first non-power.
GapCheck check_gyar(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                    const BigInt& n, unsigned k);

/// (ac - n)(bd - n) >= abcd / 2 for n^3 <= a < b < c < d.
GapCheck check_abcd(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                    const BigInt& n);

/// bd >= k^k 2^-k n^-k (ac)^(k-1) for n^3 <= a < b < c < d with ac-n, bc-n,
/// ad-n, bd-n all k-th powers.
GapCheck check_gap_neg(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                       const BigInt& n, unsigned k);

struct GrowthVerdict {
  std::size_t j = 0;
  bool holds = false;

  friend bool operator==(const GrowthVerdict&, const GrowthVerdict&) = default;
};

/// a_{2+3j} >= a_2^((k-1)^j) for 1 <= j <= (m-2)/3, on a bare ascending
/// sequence (1-based indices as in the growth corollaries).
std::vector<GrowthVerdict> growth_verdicts(std::span<const BigInt> elements, unsigned k);

struct GrowthOptions {
  /// Skip the D_k(sign |n|) check; used for synthetic boundary inputs.
  bool skip_verification = false;
};

/// Growth certificate for a D_k(+|n|) (sign = +1) or D_k(-|n|) (sign = -1)
/// set whose elements are all >= |n|^L. Fewer than five elements gives an
/// empty list.
std::vector<GrowthVerdict> growth_certificate(const tuples::TupleRecord& t, int sign, unsigned L,
                                              const GrowthOptions& options = {});

}  // namespace dkn::gap
