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
#include "dkn/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "dkn/arith.hpp"
#include "dkn/bounds.hpp"
#include "dkn/compensated.hpp"
#include "dkn/error.hpp"

namespace dkn::sieve {
namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void finish(SieveReport& report, const CompensatedSum& log_sum, const CompensatedSum& weighted) {
  report.numerator = log_sum.value() - report.log_N;
  report.denominator = weighted.value() - report.log_N;
  if (report.denominator > 0.0) report.bound = report.numerator / report.denominator;
}

}  // namespace

std::string PrimeSpec::describe() const {
  if (kind == Kind::kAll) return "all primes";
  return "p = 1 mod " + std::to_string(k);
}

std::uint64_t residue_count(std::span<const BigInt> S, std::uint64_t p) {
  if (S.empty()) throw InvalidParameter("residue_count: S must be nonempty");
  if (p < 2) throw InvalidParameter("residue_count: modulus must be at least 2");
  std::vector<std::uint64_t> residues;
  residues.reserve(S.size());
  for (const BigInt& s : S) residues.push_back(mpz_fdiv_ui(s.get_mpz_t(), p));
  std::sort(residues.begin(), residues.end());
  return static_cast<std::uint64_t>(std::unique(residues.begin(), residues.end()) - residues.begin());
}

SieveReport gallagher_bound(std::span<const BigInt> S, const BigInt& N, const PrimeSpec& primes,
                            std::uint64_t Q) {
  if (Q < 2) throw InvalidParameter("gallagher_bound: Q must exceed 1");
  if (sgn(N) <= 0) throw InvalidParameter("gallagher_bound: N must be positive");
  if (S.empty()) throw InvalidParameter("gallagher_bound: S must be nonempty");
  if (primes.kind == PrimeSpec::Kind::kOneModK && primes.k < 1) {
    throw InvalidParameter("gallagher_bound: modulus must be positive");
  }
  for (const BigInt& s : S) {
    if (sgn(s) <= 0 || s > N) {
      throw InvalidParameter("gallagher_bound: element " + to_string(s) + " lies outside [1, N]");
    }
  }

  SieveReport report;
  report.mode = SieveMode::kAPosteriori;
  report.N = N;
  report.Q = Q;
  report.primes = primes;
  report.weight_rule = kAPosterioriWeightRule;
  report.log_N = log_big(N);
  report.set_size = S.size();

  CompensatedSum log_sum;
  CompensatedSum weighted;
  arith::for_each_prime(2, Q, [&](std::uint64_t p) {
    if (!primes.admits(p)) return;
    const double lp = std::log(static_cast<double>(p));
    const std::uint64_t w = residue_count(S, p);
    log_sum.add(lp);
    weighted.add(lp / static_cast<double>(w));
    report.rows.push_back({p, lp, static_cast<double>(w), w});
  });
  report.prime_count = report.rows.size();
  finish(report, log_sum, weighted);
  return report;
}

std::uint64_t default_apriori_Q(const BigInt& n, unsigned k) {
  if (k < 1) throw InvalidParameter("sieve: k must be positive");
  const BigInt abs_n = abs(n);
  if (abs_n < 2) throw InvalidParameter("sieve: |n| must be at least 2");
  const double log_N = 3.0 * log_big(abs_n);
  const double root = static_cast<double>(arith::totient(k)) * log_N;
  const double q = std::ceil(root * root);
  if (!(q <= static_cast<double>(arith::kMaxPrimeLimit))) {
    throw InvalidParameter("sieve: default Q = (phi(k) log N)^2 exceeds 2^40");
  }
  return static_cast<std::uint64_t>(q);
}

SieveReport apriori_sieve_bound(const BigInt& n, unsigned k, std::optional<std::uint64_t> Q) {
  if (k < 2) throw InvalidParameter("apriori_sieve_bound: k must be at least 2");
  const BigInt abs_n = abs(n);
  if (abs_n < 2) throw InvalidParameter("apriori_sieve_bound: |n| must be at least 2");
  const std::uint64_t q = Q ? *Q : default_apriori_Q(n, k);
  if (q < 2) throw InvalidParameter("apriori_sieve_bound: Q must exceed 1");

  SieveReport report;
  report.mode = SieveMode::kAPriori;
  report.N = pow_big(abs_n, 3);
  report.Q = q;
  report.primes = PrimeSpec::one_mod(k);
  report.weight_rule = kAPrioriWeightRule;
  report.log_N = log_big(report.N);

  CompensatedSum log_sum;
  CompensatedSum weighted;
  for (std::uint64_t p : arith::primes_in_ap(q, k, 1).primes) {
    const double lp = std::log(static_cast<double>(p));
    const double w = std::min(std::sqrt(static_cast<double>(p)) + 2.0, static_cast<double>(p));
    log_sum.add(lp);
    weighted.add(lp / w);
    report.rows.push_back({p, lp, w, std::nullopt});
  }
  report.prime_count = report.rows.size();
  finish(report, log_sum, weighted);
  return report;
}

PntCheck pnt_check(std::uint64_t Q, unsigned k, std::int64_t a) {
  if (k < 3) throw InvalidParameter("pnt_check: k must be at least 3");
  if (Q < 3) throw InvalidParameter("pnt_check: Q must be at least 3");
  PntCheck out;
  out.Q = Q;
  out.k = k;
  out.a = a;
  out.theta = arith::theta(Q, k, a);
  out.main_term = static_cast<double>(Q) / static_cast<double>(arith::totient(k));
  out.error = std::fabs(out.theta - out.main_term);
  out.allowance = static_cast<double>(Q) / (160.0 * std::log(static_cast<double>(Q)));
  out.applies = bounds::q_at_least_q0(Q, k);
  out.holds_empirically = out.error < out.allowance;
  return out;
}

std::string rows_csv(const SieveReport& report) {
  std::string out = "p,log_p,weight,residues\n";
  for (const PrimeRow& row : report.rows) {
    out += std::to_string(row.p);
    out += ',';
    out += format_double(row.log_p);
    out += ',';
    out += format_double(row.weight);
    out += ',';
    if (row.residues) out += std::to_string(*row.residues);
    out += '\n';
  }
  return out;
}

}  // namespace dkn::sieve
