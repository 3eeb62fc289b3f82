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
#include "dkn/approx.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dkn/arith.hpp"
#include "dkn/error.hpp"
#include "interval.hpp"

namespace dkn::approx {
namespace {

constexpr mpfr_prec_t kStartPrecision = 128;
constexpr mpfr_prec_t kMaxPrecision = mpfr_prec_t{1} << 18;
constexpr long kTieExponent = -256;
constexpr std::size_t kLemma32FirstIndex = 14;

void require_odd_k(unsigned k) {
  if (k < 3 || k % 2 == 0) throw InvalidParameter("c_lemma: k must be odd and at least 3");
}

// True when both enclosures are narrower than 2^-256 * threshold.
bool below_tie_threshold(const detail::Interval& d, const detail::Interval& t) {
  const mpfr_prec_t prec = t.precision();
  mpfr_t tol;
  mpfr_init2(tol, prec);
  mpfr_mul_2si(tol, t.lo(), kTieExponent, MPFR_RNDD);
  const auto wd = d.width_bound();
  const auto wt = t.width_bound();
  const bool tiny = mpfr_less_p(wd.hi(), tol) && mpfr_less_p(wt.hi(), tol);
  mpfr_clear(tol);
  return tiny;
}

}  // namespace

RootAlpha height_of_root(const BigInt& a1, const BigInt& a2, unsigned k) {
  if (k < 2) throw InvalidParameter("height_of_root: k must be at least 2");
  if (sgn(a1) <= 0) throw InvalidParameter("height_of_root: a1 must be positive");
  if (a1 >= a2) throw InvalidParameter("height_of_root: requires a1 < a2");

  RootAlpha r;
  r.a1 = a1;
  r.a2 = a2;
  r.k = k;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a1.get_mpz_t(), a2.get_mpz_t());
  r.u_red = a1 / g;
  r.w_red = a2 / g;

  // Largest d | k with u and w both d-th powers. Coprime u, w make this
  // equivalent to u/w being a d-th power of a rational.
  unsigned best = 1;
  BigInt num = r.u_red;
  BigInt den = r.w_red;
  for (unsigned d = k; d >= 2; --d) {
    if (k % d != 0) continue;
    auto ru = arith::is_kth_power(r.u_red, d);
    if (!ru) continue;
    auto rw = arith::is_kth_power(r.w_red, d);
    if (!rw) continue;
    best = d;
    num = *ru;
    den = *rw;
    break;
  }
  r.degree = k / best;
  r.min_num = num;
  r.min_den = den;
  r.height = r.degree == 1 ? den.get_d() : std::exp(log_big(den) / r.degree);
  return r;
}

std::vector<SolutionPair> solution_pairs(const tuples::TupleRecord& t, const tuples::PowerPolicy& policy) {
  const auto report = tuples::verify(t, policy);
  if (!report.ok) throw InvalidParameter("solution_pairs: tuple does not verify");
  std::vector<SolutionPair> out;
  for (std::size_t i = 3; i <= t.size(); ++i) {
    SolutionPair pair;
    pair.index = i;
    pair.x = t.elements[i - 1];
    pair.u = report.witnesses.at({1, i});
    pair.v = report.witnesses.at({2, i});
    out.push_back(std::move(pair));
  }
  return out;
}

double c_lemma(unsigned k) {
  require_odd_k(k);
  long double product = 1.0L;
  for (unsigned j = 1; j <= (k - 1) / 2; ++j) {
    const long double s = std::sin(2.0L * std::numbers::pi_v<long double> * j / k);
    product *= s * s;
  }
  return static_cast<double>(product);
}

double n_threshold(unsigned k, unsigned L) {
  if (L < 3) throw InvalidParameter("n_threshold: L must be at least 3");
  const double c = c_lemma(k);
  return std::pow(2.0 / c, 1.0 / static_cast<double>(L - 1));
}

bool lemma31_inequality(const BigInt& u, const BigInt& v, const BigInt& a1, const BigInt& a2,
                        unsigned k) {
  if (sgn(v) <= 0 || sgn(u) < 0) throw InvalidParameter("lemma31_inequality: requires u >= 0, v > 0");
  if (sgn(a1) <= 0 || sgn(a2) <= 0) throw InvalidParameter("lemma31_inequality: a1, a2 must be positive");
  // |q - alpha| <= t  <=>  max(0, q - t)^k <= alpha^k <= (q + t)^k, alpha > 0.
  BigRational q(u, v);
  q.canonicalize();
  BigRational t(a2, 2 * pow_big(v, k));
  t.canonicalize();
  BigRational target(a1, a2);
  target.canonicalize();
  BigRational lower = q - t;
  if (sgn(lower) < 0) lower = 0;
  BigRational upper = q + t;
  BigRational lower_k;
  BigRational upper_k;
  mpz_pow_ui(mpq_numref(lower_k.get_mpq_t()), mpq_numref(lower.get_mpq_t()), k);
  mpz_pow_ui(mpq_denref(lower_k.get_mpq_t()), mpq_denref(lower.get_mpq_t()), k);
  mpz_pow_ui(mpq_numref(upper_k.get_mpq_t()), mpq_numref(upper.get_mpq_t()), k);
  mpz_pow_ui(mpq_denref(upper_k.get_mpq_t()), mpq_denref(upper.get_mpq_t()), k);
  return lower_k <= target && target <= upper_k;
}

CertifiedComparison lemma32_inequality(const BigInt& u, const BigInt& v, const BigInt& a1,
                                       const BigInt& a2, unsigned k) {
  if (k < 1) throw InvalidParameter("lemma32_inequality: k must be positive");
  if (sgn(v) <= 0 || sgn(u) < 0) throw InvalidParameter("lemma32_inequality: requires u >= 0, v > 0");
  if (sgn(a1) <= 0 || sgn(a2) <= 0) throw InvalidParameter("lemma32_inequality: a1, a2 must be positive");
  const BigInt vk = pow_big(v, k);
  for (mpfr_prec_t prec = kStartPrecision; prec <= kMaxPrecision; prec *= 2) {
    using detail::Interval;
    const Interval alpha = Interval::quotient(a1, a2, prec).kth_root(k);
    const Interval distance = (Interval::quotient(u, v, prec) - alpha).abs();
    const Interval threshold =
        (Interval::from_integer(vk, prec) * Interval::from_integer(v, prec).sqrt()).reciprocal();
    const auto bits = static_cast<unsigned long>(prec);
    if (mpfr_less_p(distance.hi(), threshold.lo())) return {Verdict::kHolds, bits};
    if (mpfr_greaterequal_p(distance.lo(), threshold.hi())) return {Verdict::kFails, bits};
    if (below_tie_threshold(distance, threshold)) return {Verdict::kUnresolved, bits};
  }
  return {Verdict::kUnresolved, static_cast<unsigned long>(kMaxPrecision)};
}

ApproxCheck approx_check(const tuples::TupleRecord& t, std::size_t i, const tuples::PowerPolicy& policy) {
  if (i < 3 || i > t.size()) {
    throw InvalidParameter("approx_check: no solution pair at index " + std::to_string(i));
  }
  const auto pairs = solution_pairs(t, policy);
  const SolutionPair& pair = pairs.at(i - 3);
  const BigInt& a1 = t.elements[0];
  const BigInt& a2 = t.elements[1];

  ApproxCheck out;
  out.index = i;
  out.u = pair.u;
  out.v = pair.v;
  if (sgn(pair.u) < 0 || sgn(pair.v) <= 0) {
    throw InvalidParameter("approx_check: the pair needs u >= 0 and v > 0");
  }
  out.lem31_holds = lemma31_inequality(pair.u, pair.v, a1, a2, t.k);

  const auto cmp = lemma32_inequality(pair.u, pair.v, a1, a2, t.k);
  out.certified = cmp.verdict != Verdict::kUnresolved;
  out.precision_bits = cmp.precision_bits;
  if (out.certified) out.lem32_inequality = cmp.verdict == Verdict::kHolds;
  out.lem32_applicable = i >= kLemma32FirstIndex && pair.v > pow_big(a2, 4);
  if (out.lem32_applicable && out.certified) out.lem32_holds = out.lem32_inequality;
  return out;
}

}  // namespace dkn::approx
