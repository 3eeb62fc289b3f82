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

#include "dkn/error.hpp"
#include "dkn/gap.hpp"

namespace dkn::gap {
namespace {

BigInt B(long v) { return BigInt(v); }

tuples::TupleRecord raw(unsigned k, long n, std::vector<long> xs) {
  tuples::TupleRecord t;
  t.k = k;
  t.n = n;
  for (long x : xs) t.elements.emplace_back(x);
  return t;
}

TEST(Gyarmati, FermatQuadruple) {
  const auto c = check_gyar(B(1), B(3), B(8), B(120), B(1), 2);
  EXPECT_EQ(c.lhs, 360);
  EXPECT_EQ(c.rhs, 32);
  EXPECT_TRUE(c.holds);
  EXPECT_DOUBLE_EQ(c.margin, 360.0 / 32.0);
}

TEST(Gyarmati, ShiftedQuadruple) {
  const auto c = check_gyar(B(1), B(33), B(68), B(105), B(256), 2);
  EXPECT_EQ(c.lhs, 33 * 105);
  EXPECT_EQ(c.rhs, BigRational(17, 4096));
  EXPECT_TRUE(c.holds);
}

TEST(Gyarmati, RefusesNonPowers) {
  EXPECT_THROW(check_gyar(B(1), B(2), B(3), B(4), B(1), 2), PreconditionFailed);
  try {
    check_gyar(B(1), B(2), B(3), B(4), B(1), 2);
  } catch (const PreconditionFailed& e) {
    EXPECT_NE(std::string(e.what()).find("b*c + n = 7"), std::string::npos) << e.what();
  }
  EXPECT_THROW(check_gyar(B(3), B(1), B(8), B(120), B(1), 2), PreconditionFailed);
  EXPECT_THROW(check_gyar(B(1), B(3), B(120), B(8), B(1), 2), PreconditionFailed);
  EXPECT_THROW(check_gyar(B(1), B(3), B(8), B(120), B(1), 1), InvalidParameter);
}

TEST(Gyarmati, AdversarialForgeries) {
  std::mt19937_64 rng(11);
  int refused = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const long a = 1 + static_cast<long>(rng() % 50);
    const long b = a + 1 + static_cast<long>(rng() % 50);
    const long c = 1 + static_cast<long>(rng() % 200);
    const long d = c + 1 + static_cast<long>(rng() % 200);
    try {
      const auto r = check_gyar(B(a), B(b), B(c), B(d), B(1), 2);
      EXPECT_TRUE(r.holds) << a << " " << b << " " << c << " " << d;
    } catch (const PreconditionFailed&) {
      ++refused;
    }
  }
  EXPECT_GT(refused, 1900);
}

TEST(Abcd, Examples) {
  const auto c = check_abcd(B(1), B(2), B(3), B(4), B(1));
  EXPECT_EQ(c.lhs, 14);
  EXPECT_EQ(c.rhs, 12);
  EXPECT_TRUE(c.holds);
  const auto d = check_abcd(B(8), B(9), B(10), B(11), B(2));
  EXPECT_EQ(d.lhs, 7566);
  EXPECT_EQ(d.rhs, 3960);
  EXPECT_TRUE(d.holds);
  EXPECT_THROW(check_abcd(B(1), B(2), B(3), B(4), B(2)), PreconditionFailed);
  EXPECT_THROW(check_abcd(B(8), B(8), B(10), B(11), B(2)), PreconditionFailed);
  EXPECT_THROW(check_abcd(B(8), B(9), B(10), B(11), B(0)), PreconditionFailed);
}

TEST(Abcd, ExhaustiveSmallRange) {
  long checked = 0;
  for (long n = 1; n <= 3; ++n) {
    for (long a = n * n * n; a <= 60; ++a) {
      for (long b = a + 1; b <= 60; ++b) {
        for (long c = b + 1; c <= 60; ++c) {
          for (long d = c + 1; d <= 60; ++d) {
            const auto r = check_abcd(B(a), B(b), B(c), B(d), B(n));
            ASSERT_TRUE(r.holds) << n << ": " << a << " " << b << " " << c << " " << d;
            // 2 (ac - n)(bd - n) >= abcd recomputed in 64-bit integers.
            ASSERT_GE(2 * (a * c - n) * (b * d - n), a * b * c * d);
            ++checked;
          }
        }
      }
    }
  }
  EXPECT_EQ(checked, 487635 + 292825 + 46376);
}

TEST(GapNeg, SyntheticInstances) {
  // ac - 1, bc - 1, ad - 1, bd - 1 are 4, 9, 144, 289.
  const auto c = check_gap_neg(B(1), B(2), B(5), B(145), B(1), 2);
  EXPECT_EQ(c.lhs, 290);
  EXPECT_EQ(c.rhs, 5);
  EXPECT_TRUE(c.holds);
  const auto d = check_gap_neg(B(9), B(43), B(114), B(822), B(2), 2);
  EXPECT_EQ(d.lhs, 35346);
  EXPECT_EQ(d.rhs, BigRational(513, 2));
  EXPECT_TRUE(d.holds);
}

TEST(GapNeg, RefusesForgedSums) {
  EXPECT_THROW(check_gap_neg(B(1), B(2), B(5), B(146), B(1), 2), PreconditionFailed);
  EXPECT_THROW(check_gap_neg(B(1), B(2), B(5), B(145), B(1), 3), PreconditionFailed);
  EXPECT_THROW(check_gap_neg(B(1), B(2), B(5), B(145), B(2), 2), PreconditionFailed);
  EXPECT_THROW(check_gap_neg(B(2), B(1), B(5), B(145), B(1), 2), PreconditionFailed);
}

TEST(Growth, ShortTuplesGiveNoVerdicts) {
  EXPECT_TRUE(growth_certificate(raw(3, 1, {1, 2, 3, 4}), 1, 3, {true}).empty());
  EXPECT_TRUE(growth_verdicts(raw(3, 1, {1, 2, 3, 4}).elements, 3).empty());
}

TEST(Growth, BoundaryHoldsAtEquality) {
  // a_2 = 2, a_5 = 2^(k-1) for k = 3 on the raw sequence.
  const std::vector<BigInt> seq{B(1), B(2), B(3), B(3), B(4)};
  EXPECT_EQ(growth_verdicts(seq, 3), (std::vector<GrowthVerdict>{{1, true}}));
  const std::vector<BigInt> below{B(1), B(3), B(4), B(5), B(8)};
  EXPECT_EQ(growth_verdicts(below, 3), (std::vector<GrowthVerdict>{{1, false}}));
  // A strictly increasing tuple with a_5 = a_2^2 exactly.
  const auto t = raw(3, 1, {1, 3, 4, 5, 9});
  EXPECT_EQ(growth_certificate(t, 1, 3, {true}), (std::vector<GrowthVerdict>{{1, true}}));
}

TEST(Growth, IndexesAndExponents) {
  // k = 5: a_{2+3j} is compared with 2^(4^j).
  std::vector<BigInt> seq{B(1), B(2), B(3), B(4), B(16), B(6), B(7), pow_big(B(2), 16) - 1, B(9), B(10),
                          pow_big(B(2), 64)};
  EXPECT_EQ(growth_verdicts(seq, 5), (std::vector<GrowthVerdict>{{1, true}, {2, false}, {3, true}}));
  seq[7] += 1;
  seq[10] -= 1;
  EXPECT_EQ(growth_verdicts(seq, 5), (std::vector<GrowthVerdict>{{1, true}, {2, true}, {3, false}}));
  seq.resize(10);
  EXPECT_EQ(growth_verdicts(seq, 5).size(), 2u);
}

TEST(Growth, Preconditions) {
  EXPECT_THROW(growth_certificate(raw(2, 1, {1, 3, 8, 120, 200}), 1, 3, {true}), PreconditionFailed);
  EXPECT_THROW(growth_certificate(raw(3, 2, {1, 9, 10, 11, 12}), 1, 3, {true}), PreconditionFailed);
  EXPECT_THROW(growth_certificate(raw(3, 1, {1, 3, 4, 5, 9}), 1, 3), PreconditionFailed);
  EXPECT_THROW(growth_certificate(raw(3, 1, {1, 3, 4, 5, 9}), 0, 3, {true}), InvalidParameter);
  EXPECT_THROW(growth_certificate(raw(3, 1, {1, 3, 4, 5, 9}), 1, 2, {true}), InvalidParameter);
  EXPECT_THROW(growth_certificate(raw(3, 1, {1, 3, 3, 5, 9}), 1, 3, {true}), InvalidParameter);
}

}  // namespace
}  // namespace dkn::gap
