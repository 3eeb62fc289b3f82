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
#include <gtest/gtest.h>

#include <random>

#include "dkn/arith.hpp"
#include "dkn/error.hpp"
#include "dkn/tuples.hpp"

namespace dkn::tuples {
namespace {

TupleRecord tup(unsigned k, long n, std::vector<long> xs) {
  std::vector<BigInt> elements;
  for (long x : xs) elements.emplace_back(x);
  return make_record(k, BigInt(n), std::move(elements));
}

std::vector<long> as_longs(const std::vector<BigInt>& xs) {
  std::vector<long> out;
  for (const auto& x : xs) out.push_back(x.get_si());
  return out;
}

TEST(Verify, FermatQuadrupleWitnesses) {
  const auto report = verify(tup(2, 1, {1, 3, 8, 120}));
  ASSERT_TRUE(report.ok);
  EXPECT_TRUE(report.failures.empty());
  const std::map<IndexPair, BigInt> expected{{{1, 2}, 2}, {{1, 3}, 3},  {{1, 4}, 11},
                                             {{2, 3}, 5}, {{2, 4}, 19}, {{3, 4}, 31}};
  EXPECT_EQ(report.witnesses, expected);
}

TEST(Verify, ShiftedQuadrupleAndQuintuples) {
  EXPECT_TRUE(verify(tup(2, 256, {1, 33, 68, 105})).ok);
  const auto q1 = verify(tup(2, 256, {1, 33, 105, 320, 18240}));
  EXPECT_TRUE(q1.ok);
  EXPECT_EQ(q1.witnesses.size(), 10u);
  const auto q2 = verify(tup(2, 256, {5, 21, 64, 285, 6720}));
  EXPECT_TRUE(q2.ok);
  EXPECT_EQ(q2.witnesses.size(), 10u);
}

TEST(Verify, ReportsFailingPair) {
  const auto report = verify(tup(2, 5, {1, 2, 3}));
  EXPECT_FALSE(report.ok);
  EXPECT_NE(std::find(report.failures.begin(), report.failures.end(), IndexPair(2, 3)), report.failures.end());
  const auto partial = verify(tup(2, 1, {1, 3, 7}));
  EXPECT_FALSE(partial.ok);
  EXPECT_EQ(partial.failures, (std::vector<IndexPair>{{1, 3}, {2, 3}}));
  EXPECT_EQ(partial.witnesses.at({1, 2}), 2);
}

TEST(Verify, RejectsMalformedTuples) {
  EXPECT_THROW(tup(2, 1, {1, 3, 3}), InvalidParameter);
  EXPECT_THROW(tup(2, 1, {0, 3, 8}), InvalidParameter);
  EXPECT_THROW(tup(2, 1, {-1, 3, 8}), InvalidParameter);
  EXPECT_THROW(tup(2, 0, {1, 3}), InvalidParameter);
  EXPECT_THROW(tup(1, 1, {1, 3}), InvalidParameter);
  TupleRecord unsorted;
  unsorted.elements = {BigInt(8), BigInt(3)};
  EXPECT_THROW(unsorted.validate(), InvalidParameter);
  EXPECT_EQ(tup(2, 1, {120, 8, 1, 3}).elements, tup(2, 1, {1, 3, 8, 120}).elements);
}

TEST(Verify, PowerPolicy) {
  // 1*3 - 3 = 0, 1*2 - 3 = -1 = (-1)^3, 2*5 - 3 = 7.
  const auto zero = tup(3, -3, {1, 3});
  EXPECT_FALSE(verify(zero).ok);
  EXPECT_TRUE(verify(zero, {true, false}).ok);
  const auto negative = tup(3, -3, {1, 2});
  EXPECT_FALSE(verify(negative, {true, false}).ok);
  EXPECT_TRUE(verify(negative, {false, true}).ok);
  EXPECT_FALSE(verify(tup(2, -3, {1, 2}), {true, true}).ok);
  EXPECT_EQ(kth_root(BigInt(-8), 3, {false, true}), -2);
  EXPECT_FALSE(kth_root(BigInt(-4), 2, {false, true}).has_value());
  EXPECT_FALSE(kth_root(BigInt(0), 2).has_value());
  EXPECT_EQ(kth_root(BigInt(0), 2, {true, false}), 0);
}

TEST(EulerFamily, Examples) {
  EXPECT_EQ(as_longs(euler_family(BigInt(1), BigInt(3))->elements), (std::vector<long>{1, 3, 8, 120}));
  EXPECT_EQ(as_longs(euler_family(BigInt(3), BigInt(8))->elements), (std::vector<long>{3, 8, 21, 2080}));
  EXPECT_FALSE(euler_family(BigInt(1), BigInt(2)).has_value());
  EXPECT_THROW(euler_family(BigInt(3), BigInt(3)), InvalidParameter);
  EXPECT_THROW(euler_family(BigInt(5), BigInt(3)), InvalidParameter);
}

TEST(EulerFamily, EveryOutputVerifies) {
  int count = 0;
  for (long a = 1; a <= 200; ++a) {
    for (long b = a + 1; b <= 200; ++b) {
      const bool square = arith::is_kth_power(BigInt(a * b + 1), 2).has_value();
      const auto t = euler_family(BigInt(a), BigInt(b));
      ASSERT_EQ(t.has_value(), square) << a << "," << b;
      if (!t) continue;
      ++count;
      ASSERT_EQ(t->size(), 4u);
      ASSERT_EQ(t->n, 1);
      ASSERT_TRUE(verify(*t).ok) << a << "," << b;
    }
  }
  EXPECT_GT(count, 100);
}

TEST(Extend, Examples) {
  const auto r = extend(tup(2, 1, {1, 3, 8}), BigInt(200));
  EXPECT_TRUE(r.base_verified);
  EXPECT_EQ(as_longs(r.values), (std::vector<long>{120}));
  const auto s = extend(tup(2, 256, {1, 33, 68}), BigInt(110));
  EXPECT_NE(std::find(s.values.begin(), s.values.end(), BigInt(105)), s.values.end());
  EXPECT_TRUE(extend(tup(2, 1, {1, 3, 8}), BigInt(119)).values.empty());
}

TEST(Extend, WarnsButStillExtendsUnverifiedBase) {
  const auto r = extend(tup(2, 1, {1, 2}), BigInt(100));
  EXPECT_FALSE(r.base_verified);
  for (const auto& x : r.values) {
    EXPECT_TRUE(arith::is_kth_power(BigInt(x + 1), 2));
    EXPECT_TRUE(arith::is_kth_power(BigInt(2 * x + 1), 2));
  }
  EXPECT_EQ(as_longs(r.values), (std::vector<long>{24}));
}

TEST(Extend, MatchesLinearScan) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned k = 2 + static_cast<unsigned>(rng() % 2);
    const long n = static_cast<long>(rng() % 7) - 3;
    if (n == 0) continue;
    const long a = 1 + static_cast<long>(rng() % 30);
    const long b = a + 1 + static_cast<long>(rng() % 30);
    const auto t = tup(k, n, {a, b});
    const long bound = 3000;
    std::vector<long> expected;
    for (long x = 1; x <= bound; ++x) {
      if (x == a || x == b) continue;
      if (arith::is_kth_power(BigInt(a * x + n), k) && arith::is_kth_power(BigInt(b * x + n), k)) {
        expected.push_back(x);
      }
    }
    ASSERT_EQ(as_longs(extend(t, BigInt(bound)).values), expected) << a << "," << b << " n=" << n;
  }
}

TEST(Extend, ContainsKnownLastElement) {
  for (const auto& full : {tup(2, 1, {1, 3, 8, 120}), tup(2, 256, {1, 33, 105, 320, 18240}),
                           tup(2, 256, {5, 21, 64, 285, 6720})}) {
    auto prefix = full;
    prefix.elements.pop_back();
    const auto r = extend(prefix, full.elements.back());
    EXPECT_NE(std::find(r.values.begin(), r.values.end(), full.elements.back()), r.values.end());
  }
}

}  // namespace
}  // namespace dkn::tuples
