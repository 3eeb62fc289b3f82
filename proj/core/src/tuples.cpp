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
#include "dkn/tuples.hpp"

#include <algorithm>
#include <string>

#include "dkn/arith.hpp"
#include "dkn/error.hpp"

namespace dkn::tuples {

std::optional<BigInt> kth_root(const BigInt& value, unsigned k, const PowerPolicy& policy) {
  const int s = sgn(value);
  if (s > 0) return arith::is_kth_power(value, k);
  if (s == 0) return policy.allow_zero ? std::optional<BigInt>(BigInt(0)) : std::nullopt;
  if (!policy.allow_negative || k % 2 == 0) return std::nullopt;
  if (auto r = arith::is_kth_power(-value, k)) return BigInt(-*r);
  return std::nullopt;
}

void TupleRecord::validate() const {
  if (k < 2) throw InvalidParameter("tuple: k must be at least 2");
  if (sgn(n) == 0) throw InvalidParameter("tuple: n must be nonzero");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (sgn(elements[i]) <= 0) {
      throw InvalidParameter("tuple: element " + to_string(elements[i]) + " is not positive");
    }
    if (i > 0 && elements[i] <= elements[i - 1]) {
      throw InvalidParameter("tuple: elements must be distinct and increasing (" +
                             to_string(elements[i - 1]) + ", " + to_string(elements[i]) + ")");
    }
  }
}

TupleRecord make_record(unsigned k, const BigInt& n, std::vector<BigInt> elements) {
  std::sort(elements.begin(), elements.end());
  TupleRecord t{k, n, std::move(elements)};
  t.validate();
  return t;
}

VerifyReport verify(const TupleRecord& t, const PowerPolicy& policy) {
  t.validate();
  VerifyReport report;
  const std::size_t m = t.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      BigInt value = t.elements[i] * t.elements[j] + t.n;
      if (auto r = kth_root(value, t.k, policy)) {
        report.witnesses.emplace(IndexPair{i + 1, j + 1}, std::move(*r));
      } else {
        report.failures.emplace_back(i + 1, j + 1);
      }
    }
  }
  report.ok = report.failures.empty();
  return report;
}

std::optional<TupleRecord> euler_family(const BigInt& a, const BigInt& b) {
  if (sgn(a) <= 0) throw InvalidParameter("euler_family: a must be positive");
  if (a >= b) throw InvalidParameter("euler_family: requires a < b");
  auto r = arith::is_kth_power(a * b + 1, 2);
  if (!r) return std::nullopt;
  const BigInt& root = *r;
  return make_record(2, 1, {a, b, a + b + 2 * root, 4 * root * (root + a) * (root + b)});
}

ExtendResult extend(const TupleRecord& t, const BigInt& bound, const PowerPolicy& policy) {
  t.validate();
  if (t.elements.empty()) throw InvalidParameter("extend: tuple has no elements");
  ExtendResult result;
  result.base_verified = verify(t, policy).ok;
  if (sgn(bound) <= 0) return result;

  // Candidates come from the smallest element: a_1 x + n = P with P a k-th
  // power and 1 <= x <= bound, so P ranges over [a_1 + n, a_1 * bound + n].
  const BigInt& a1 = t.elements.front();
  const BigInt lo = a1 + t.n;
  const BigInt hi = a1 * bound + t.n;
  const unsigned k = t.k;
  std::vector<BigInt> candidates;

  auto consider = [&](const BigInt& power) {
    BigInt diff = power - t.n;
    if (mpz_divisible_p(diff.get_mpz_t(), a1.get_mpz_t()) == 0) return;
    BigInt x = diff / a1;
    if (sgn(x) > 0 && x <= bound) candidates.push_back(std::move(x));
  };

  if (sgn(hi) > 0) {
    BigInt r = sgn(lo) <= 0 ? BigInt(1) : BigInt(arith::ikroot(lo - 1, k) + 1);
    const BigInt r_max = arith::ikroot(hi, k);
    for (; r <= r_max; ++r) consider(pow_big(r, k));
  }
  if (policy.allow_zero && sgn(lo) <= 0 && sgn(hi) >= 0) consider(BigInt(0));
  if (policy.allow_negative && k % 2 == 1 && sgn(lo) < 0) {
    const BigInt s_max = arith::ikroot(-lo, k);
    for (BigInt s = 1; s <= s_max; ++s) {
      BigInt power = -pow_big(s, k);
      if (power <= hi) consider(power);
    }
  }

  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (auto& x : candidates) {
    if (std::binary_search(t.elements.begin(), t.elements.end(), x)) continue;
    bool all = true;
    for (const BigInt& a : t.elements) {
      if (!kth_root(a * x + t.n, k, policy)) {
        all = false;
        break;
      }
    }
    if (all) result.values.push_back(std::move(x));
  }
  return result;
}

}  // namespace dkn::tuples
