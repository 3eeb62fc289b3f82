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
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dkn/bigint.hpp"

namespace dkn::tuples {

/// Which roots count as "a k-th power" when testing a_i a_j + n.
///
/// The default admits only r >= 1. allow_zero admits r = 0; allow_negative
/// admits r < 0 for odd k.
struct PowerPolicy {
  bool allow_zero = false;
  bool allow_negative = false;
};

/// Root r with r^k == value under `policy`, or nullopt.
std::optional<BigInt> kth_root(const BigInt& value, unsigned k, const PowerPolicy& policy = {});

/// A candidate set {a_1 < ... < a_m} for property D_k(n).
struct TupleRecord {
  unsigned k = 2;
  BigInt n = 1;
  std::vector<BigInt> elements;

  std::size_t size() const { return elements.size(); }

  /// Throws InvalidParameter unless k >= 2, n != 0 and the elements are
  /// positive and strictly increasing.
  void validate() const;

  friend bool operator==(const TupleRecord&, const TupleRecord&) = default;
};

/// Builds a record from unsorted elements; duplicates are rejected.
TupleRecord make_record(unsigned k, const BigInt& n, std::vector<BigInt> elements);

using IndexPair = std::pair<std::size_t, std::size_t>;  // 1-based, i < j

struct VerifyReport {
  bool ok = false;
  std::map<IndexPair, BigInt> witnesses;
  std::vector<IndexPair> failures;
};

VerifyReport verify(const TupleRecord& t, const PowerPolicy& policy = {});

/// Euler's quadruple {a, b, a+b+2r, 4r(r+a)(r+b)} when ab + 1 = r^2.
std::optional<TupleRecord> euler_family(const BigInt& a, const BigInt& b);

struct ExtendResult {
  std::vector<BigInt> values;
  bool base_verified = true;  // false: t itself failed verify (warning only)
};

/// Every x <= bound outside t such that a x + n is a k-th power for all a in t.
ExtendResult extend(const TupleRecord& t, const BigInt& bound, const PowerPolicy& policy = {});

}  // namespace dkn::tuples
