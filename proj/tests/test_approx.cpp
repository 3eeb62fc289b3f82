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
#include <mpfr.h>

#include <cmath>
#include <random>

#include "dkn/approx.hpp"
#include "dkn/arith.hpp"
#include "dkn/error.hpp"

namespace dkn::approx {
namespace {

tuples::TupleRecord tup(unsigned k, long n, std::vector<long> xs) {
  std::vector<BigInt> elements;
  for (long x : xs) elements.emplace_back(x);
  return tuples::make_record(k, BigInt(n), std::move(elements));
}

// Round-to-nearest evaluation at a fixed high precision, written directly
// against MPFR. Returns the sign of lhs - rhs when they differ by more than a
// relative 2^-1500, else 0.
BigInt floor_times_alpha(const BigInt& v, const BigInt& a1, const BigInt& a2, unsigned k) {
  return arith::ikroot(BigInt(pow_big(v, k) * a1 / a2), k);
}

class HighPrecision {
 public:
  static constexpr mpfr_prec_t kBits = 3000;

  HighPrecision() {
    for (auto* x : {&alpha_, &q_, &d_, &t1_, &t2_, &tmp_}) mpfr_init2(*x, kBits);
  }
  ~HighPrecision() {
    for (auto* x : {&alpha_, &q_, &d_, &t1_, &t2_, &tmp_}) mpfr_clear(*x);
  }

  void evaluate(const BigInt& u, const BigInt& v, const BigInt& a1, const BigInt& a2, unsigned k) {
    mpfr_set_z(alpha_, a1.get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(alpha_, alpha_, a2.get_mpz_t(), MPFR_RNDN);
    mpfr_rootn_ui(alpha_, alpha_, k, MPFR_RNDN);
    mpfr_set_z(q_, u.get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(q_, q_, v.get_mpz_t(), MPFR_RNDN);
    mpfr_sub(d_, q_, alpha_, MPFR_RNDN);
    mpfr_abs(d_, d_, MPFR_RNDN);
    // t1 = a2 / (2 v^k), t2 = v^(-k - 1/2)
    const BigInt vk = pow_big(v, k);
    mpfr_set_z(t1_, a2.get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(t1_, t1_, vk.get_mpz_t(), MPFR_RNDN);
    mpfr_div_2ui(t1_, t1_, 1, MPFR_RNDN);
    mpfr_set_z(tmp_, v.get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(tmp_, tmp_, MPFR_RNDN);
    mpfr_mul_z(tmp_, tmp_, vk.get_mpz_t(), MPFR_RNDN);
    mpfr_ui_div(t2_, 1, tmp_, MPFR_RNDN);
  }

  int sign_vs_t1() { return separated(t1_); }
  int sign_vs_t2() { return separated(t2_); }

 private:
  int separated(mpfr_t t) {
    mpfr_sub(tmp_, d_, t, MPFR_RNDN);
    if (mpfr_zero_p(tmp_)) return 0;
    mpfr_t rel;
    mpfr_init2(rel, 64);
    mpfr_div(rel, tmp_, t, MPFR_RNDN);
    mpfr_abs(rel, rel, MPFR_RNDN);
    const bool clear = mpfr_get_exp(rel) > -1500;
    mpfr_clear(rel);
    return clear ? mpfr_sgn(tmp_) : 0;
  }

  mpfr_t alpha_, q_, d_, t1_, t2_, tmp_;
};

TEST(SolutionPairs, Examples) {
  const auto pairs = solution_pairs(tup(2, 1, {1, 3, 8, 120}));
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0], (SolutionPair{3, BigInt(8), BigInt(3), BigInt(5)}));
  EXPECT_EQ(pairs[1], (SolutionPair{4, BigInt(120), BigInt(11), BigInt(19)}));
  EXPECT_TRUE(solution_pairs(tup(2, 1, {1, 3})).empty());
  const auto q = solution_pairs(tup(2, 256, {1, 33, 105, 320, 18240}));
  ASSERT_EQ(q.size(), 3u);
  EXPECT_EQ(q[0].x, 105);
  EXPECT_EQ(q[0].u, 19);
  EXPECT_EQ(q[0].v, 61);
  EXPECT_THROW(solution_pairs(tup(2, 5, {1, 2, 3})), InvalidParameter);
}

TEST(SolutionPairs, ReproduceShiftedProducts) {
  for (const auto& t : {tup(2, 1, {1, 3, 8, 120}), tup(2, 256, {1, 33, 68, 105}),
                        tup(2, 256, {1, 33, 105, 320, 18240}), tup(2, 256, {5, 21, 64, 285, 6720}),
                        tup(2, 1, {3, 8, 21, 2080})}) {
    for (const auto& p : solution_pairs(t)) {
      EXPECT_EQ(pow_big(p.u, t.k), t.elements[0] * p.x + t.n);
      EXPECT_EQ(pow_big(p.v, t.k), t.elements[1] * p.x + t.n);
    }
  }
}

TEST(Height, Examples) {
  const auto rational = height_of_root(BigInt(1), BigInt(8), 3);
  EXPECT_EQ(rational.degree, 1u);
  EXPECT_EQ(rational.min_num, 1);
  EXPECT_EQ(rational.min_den, 2);
  EXPECT_DOUBLE_EQ(rational.height, 2.0);

  const auto cube = height_of_root(BigInt(1), BigInt(2), 3);
  EXPECT_EQ(cube.degree, 3u);
  EXPECT_EQ(cube.min_den, 2);
  EXPECT_EQ(cube.min_num, 1);
  EXPECT_NEAR(cube.height, std::cbrt(2.0), 1e-12);

  const auto partial = height_of_root(BigInt(4), BigInt(9), 4);  // sqrt(2/3)
  EXPECT_EQ(partial.degree, 2u);
  EXPECT_EQ(partial.min_num, 2);
  EXPECT_EQ(partial.min_den, 3);
  EXPECT_NEAR(partial.height, std::sqrt(3.0), 1e-12);

  EXPECT_THROW(height_of_root(BigInt(8), BigInt(8), 3), InvalidParameter);
  EXPECT_THROW(height_of_root(BigInt(9), BigInt(8), 3), InvalidParameter);
  EXPECT_THROW(height_of_root(BigInt(1), BigInt(8), 1), InvalidParameter);
}

TEST(Height, BoundedByRootOfA2) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned k = 2 + static_cast<unsigned>(rng() % 8);
    BigInt a1 = to_big(static_cast<std::uint64_t>(1 + rng() % 5000));
    BigInt a2 = a1 + to_big(static_cast<std::uint64_t>(1 + rng() % 5000));
    if (rng() % 3 == 0) {  // force partial perfect powers
      a1 = pow_big(a1, k);
      a2 = pow_big(a2, k) * to_big(static_cast<std::uint64_t>(1 + rng() % 3));
    }
    const auto r = height_of_root(a1, a2, k);
    EXPECT_EQ(k % r.degree, 0u);
    EXPECT_EQ(pow_big(r.min_den, k / r.degree), r.w_red);
    EXPECT_EQ(pow_big(r.min_num, k / r.degree), r.u_red);
    const double cap = std::pow(a2.get_d(), 1.0 / k);
    EXPECT_LE(r.height, cap * (1 + 1e-12)) << a1 << "/" << a2 << " k=" << k;
    EXPECT_NEAR(r.height, std::pow(r.w_red.get_d(), 1.0 / k), 1e-9 * r.height);
  }
}

TEST(CLemma, Values) {
  EXPECT_NEAR(c_lemma(3), 0.75, 1e-12);
  EXPECT_NEAR(c_lemma(5), 0.3125, 1e-12);
  EXPECT_THROW(c_lemma(4), InvalidParameter);
  EXPECT_THROW(c_lemma(1), InvalidParameter);
}

TEST(CLemma, MatchesSineProductIdentity) {
  // prod_{j<k} sin(pi j / k) = k / 2^(k-1); for odd k this equals c(k).
  for (unsigned k = 3; k <= 61; k += 2) {
    const double expected = std::ldexp(static_cast<double>(k), -static_cast<int>(k - 1));
    EXPECT_NEAR(c_lemma(k) / expected, 1.0, 1e-12) << k;
  }
}

TEST(NThreshold, Values) {
  EXPECT_NEAR(n_threshold(3, 3), 1.6329931618554520655, 1e-12);
  EXPECT_NEAR(n_threshold(5, 3), 2.5298221281347034656, 1e-12);
  EXPECT_NEAR(n_threshold(3, 100000), 1.0, 1e-4);
  double previous = n_threshold(3, 3);
  for (unsigned L = 4; L < 50; ++L) {
    EXPECT_LT(n_threshold(3, L), previous);
    previous = n_threshold(3, L);
  }
  EXPECT_THROW(n_threshold(3, 2), InvalidParameter);
  EXPECT_THROW(n_threshold(6, 3), InvalidParameter);
}

TEST(ApproxCheck, KnownTuples) {
  const auto t = tup(2, 256, {1, 33, 105, 320, 18240});
  for (std::size_t i = 3; i <= 5; ++i) {
    const auto r = approx_check(t, i);
    EXPECT_EQ(r.index, i);
    EXPECT_FALSE(r.lem32_applicable);
    EXPECT_FALSE(r.lem32_holds.has_value());
    EXPECT_TRUE(r.certified);
    EXPECT_GE(r.precision_bits, 128u);
  }
  EXPECT_THROW(approx_check(t, 2), InvalidParameter);
  EXPECT_THROW(approx_check(t, 6), InvalidParameter);
}

TEST(ApproxCheck, ExactApproximationHasDistanceZero) {
  EXPECT_TRUE(lemma31_inequality(BigInt(1), BigInt(2), BigInt(1), BigInt(8), 3));
  EXPECT_EQ(lemma32_inequality(BigInt(1), BigInt(2), BigInt(1), BigInt(8), 3).verdict, Verdict::kHolds);
  EXPECT_EQ(lemma32_inequality(BigInt(2), BigInt(4), BigInt(1), BigInt(4), 2).verdict, Verdict::kHolds);
}

TEST(ApproxCheck, AgreesWithHighPrecisionEvaluation) {
  std::mt19937_64 rng(2718);
  HighPrecision hp;
  int compared31 = 0, compared32 = 0, holds32 = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned ks[] = {2, 3, 5};
    const unsigned k = ks[rng() % 3];
    BigInt a1, a2, u, v;
    if (trial % 3 == 0) {
      // a1 / a2 = (u / v)^k + tiny, so u / v is an unusually good approximation.
      v = to_big(static_cast<std::uint64_t>(3 + rng() % 1000));
      u = to_big(static_cast<std::uint64_t>(1 + rng() % (v.get_ui() - 1)));
      const BigInt M = pow_big(BigInt(10), 10 + rng() % 40);
      a1 = pow_big(u, k) * M + to_big(static_cast<std::uint64_t>(rng() % 3));
      a2 = pow_big(v, k) * M;
    } else {
      a1 = to_big(static_cast<std::uint64_t>(1 + rng() % 1000000));
      a2 = a1 + to_big(static_cast<std::uint64_t>(1 + rng() % 1000000));
      v = to_big(static_cast<std::uint64_t>(2 + rng() % (std::uint64_t{1} << (8 + rng() % 50))));
      u = floor_times_alpha(v, a1, a2, k) + static_cast<long>(rng() % 4) - 1;
      if (sgn(u) < 0) u = 0;
    }

    hp.evaluate(u, v, a1, a2, k);
    const int s1 = hp.sign_vs_t1();
    if (s1 != 0) {
      ++compared31;
      ASSERT_EQ(lemma31_inequality(u, v, a1, a2, k), s1 < 0) << u << "/" << v << " " << a1 << "/" << a2 << " k=" << k;
    }
    const int s2 = hp.sign_vs_t2();
    const auto cmp = lemma32_inequality(u, v, a1, a2, k);
    if (s2 != 0) {
      ++compared32;
      ASSERT_NE(cmp.verdict, Verdict::kUnresolved);
      ASSERT_EQ(cmp.verdict == Verdict::kHolds, s2 < 0) << u << "/" << v << " " << a1 << "/" << a2 << " k=" << k;
      holds32 += s2 < 0;
    }
  }
  EXPECT_GE(compared31, 95);
  EXPECT_GE(compared32, 95);
  EXPECT_GT(holds32, 0);
}

}  // namespace
}  // namespace dkn::approx
