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
#include "dkn/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "dkn/arith.hpp"
#include "dkn/error.hpp"
#include "dkn/sieve.hpp"

namespace dkn::bounds {
namespace {

constexpr double kTwoPow25 = 33554432.0;
constexpr std::uint64_t kQ0SmallK = 100000;
constexpr double kQ0Small = 8e9;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string value_text(const BoundReport& r) {
  if (const auto* big = std::get_if<BigInt>(&r.value)) return to_string(*big);
  const double v = std::get<double>(r.value);
  if (std::isinf(v) && r.log_value) return "exp(" + fmt(*r.log_value) + ")";
  return fmt(v);
}

double q0_log(std::uint64_t k) {
  if (k <= kQ0SmallK) return std::log(kQ0Small);
  const double lk = std::log(static_cast<double>(k));
  return 0.03 * std::sqrt(static_cast<double>(k)) * lk * lk * lk;
}

void require_k3(std::uint64_t k, const char* what) {
  if (k < 3) throw InvalidParameter(std::string(what) + ": k must be at least 3");
}

}  // namespace

double evertse_count(std::uint64_t r, double kappa) {
  if (!(kappa > 0.0 && kappa <= 1.0)) throw InvalidParameter("evertse_count: kappa must lie in (0, 1]");
  if (r < 2) throw InvalidParameter("evertse_count: degree r must be at least 2");
  const double log2r = std::log(2.0 * static_cast<double>(r));
  const double inv = 1.0 / kappa;
  return kTwoPow25 * (inv * inv * inv) * log2r * std::log(inv * log2r);
}

unsigned j0(std::uint64_t k) {
  require_k3(k, "j0");
  const unsigned __int128 target = static_cast<unsigned __int128>(4) * k;
  unsigned __int128 power = 1;
  unsigned j = 0;
  while (power <= target) {
    power *= (k - 1);
    ++j;
  }
  return j;
}

unsigned large_bound_offset(std::uint64_t k, bool refined) {
  require_k3(k, "large_bound_offset");
  return refined ? 2 + 3 * j0(k) : 14;
}

BoundReport effective_large_bound(std::uint64_t k, bool refined) {
  require_k3(k, "effective_large_bound");
  BoundReport r;
  r.name = refined ? "large_elements_refined" : "large_elements";
  r.inputs = {{"k", std::to_string(k)}, {"L", ">=3"}};
  r.value = evertse_count(k, 0.5) + static_cast<double>(large_bound_offset(k, refined));
  r.provenance = refined ? "2^28 log(2k) log(2 log(2k)) + 2 + 3 j0(k)" : "2^28 log(2k) log(2 log(2k)) + 14";
  return r;
}

BoundReport main_term(const BigInt& n, std::uint64_t k) {
  if (k < 2) throw InvalidParameter("main_term: k must be at least 2");
  const BigInt abs_n = abs(n);
  if (abs_n < 2) throw InvalidParameter("main_term: |n| must be at least 2");
  BoundReport r;
  r.name = "main_term";
  r.inputs = {{"n", to_string(n)}, {"k", std::to_string(k)}};
  r.value = 3.0 * static_cast<double>(arith::totient(k)) * log_big(abs_n);
  r.provenance = "3 phi(k) log|n|";
  r.reason = "advisory: leading term only; the hypothesis k = o(log log |n|) cannot be checked at a single n";
  return r;
}

BoundReport q0(std::uint64_t k) {
  require_k3(k, "q0");
  BoundReport r;
  r.name = "Q0";
  r.inputs = {{"k", std::to_string(k)}};
  r.log_value = q0_log(k);
  r.value = k <= kQ0SmallK ? kQ0Small : std::exp(*r.log_value);
  r.provenance = k <= kQ0SmallK ? "8e9 (3 <= k <= 1e5)" : "exp(0.03 sqrt(k) log^3 k) (k > 1e5)";
  return r;
}

bool q_at_least_q0(std::uint64_t Q, std::uint64_t k) {
  require_k3(k, "q_at_least_q0");
  if (k <= kQ0SmallK) return Q >= static_cast<std::uint64_t>(kQ0Small);
  return std::log(static_cast<double>(Q)) >= q0_log(k);
}

bool q_condition(const BigInt& n, std::uint64_t k) {
  require_k3(k, "q_condition");
  const BigInt abs_n = abs(n);
  if (abs_n < 2) throw InvalidParameter("q_condition: |n| must be at least 2");
  const double log_N = 3.0 * log_big(abs_n);
  const double phi = static_cast<double>(arith::totient(k));
  if (k <= kQ0SmallK) {
    const double root = phi * log_N;
    return root * root > kQ0Small;
  }
  // log N > exp(0.015 sqrt(k) log^3 k) / phi(k), compared in log space.
  const double lk = std::log(static_cast<double>(k));
  return std::log(log_N) > 0.015 * std::sqrt(static_cast<double>(k)) * lk * lk * lk - std::log(phi);
}

BoundReport prior_bounds(const BigInt& n, std::uint64_t k) {
  if (k < 2) throw InvalidParameter("prior_bounds: k must be at least 2");
  if (sgn(n) == 0) throw InvalidParameter("prior_bounds: n must be nonzero");

  BoundReport general;
  general.name = "prior_general";
  general.provenance = "Berczes-Dujella-Hajdu-Luca: 2|n|^5 + 3 for k >= 5";
  general.value = BigInt(2 * pow_big(abs(n), 5) + 3);
  general.applicable = k >= 5;
  if (!general.applicable) general.reason = "requires k >= 5";

  BoundReport unit;
  unit.name = "prior_n_equals_1";
  unit.provenance = "Bugeaud-Dujella: M_3(1) <= 7, M_4(1) <= 5, M_k(1) <= 4 (5 <= k <= 176), M_k(1) <= 3 (k >= 177)";
  unit.applicable = n == 1 && k >= 3;
  if (n != 1) {
    unit.reason = "requires n = 1";
  } else if (k < 3) {
    unit.reason = "table covers k >= 3 only";
  }
  unit.value = BigInt(k == 3 ? 7 : k == 4 ? 5 : k <= 176 ? 4 : 3);

  BoundReport r;
  r.name = "prior_bounds";
  r.inputs = {{"n", to_string(n)}, {"k", std::to_string(k)}};
  r.applicable = false;
  for (const BoundReport* part : {&general, &unit}) {
    if (!part->applicable) continue;
    const BigInt& v = std::get<BigInt>(part->value);
    if (!r.applicable || v < std::get<BigInt>(r.value)) {
      r.value = v;
      r.provenance = part->name;
    }
    r.applicable = true;
  }
  if (!r.applicable) {
    r.value = BigInt(0);
    r.reason = "no earlier explicit bound covers these (n, k)";
  }
  r.parts = {std::move(general), std::move(unit)};
  return r;
}

std::string bounds_table(const BigInt& n, std::uint64_t k) {
  std::vector<BoundReport> rows;
  rows.push_back(main_term(n, k));
  if (k >= 3) {
    rows.push_back(effective_large_bound(k, false));
    rows.push_back(effective_large_bound(k, true));
    rows.push_back(q0(k));
    BoundReport cond;
    cond.name = "Q_exceeds_Q0";
    cond.inputs = {{"n", to_string(n)}, {"k", std::to_string(k)}};
    cond.value = q_condition(n, k) ? 1.0 : 0.0;
    cond.provenance = "(phi(k) log N)^2 > Q0(k), N = |n|^3";
    rows.push_back(std::move(cond));
  }
  BoundReport prior = prior_bounds(n, k);
  rows.push_back(prior);

  BoundReport sieve_row;
  sieve_row.name = "apriori_sieve";
  sieve_row.inputs = {{"n", to_string(n)}, {"k", std::to_string(k)}};
  sieve_row.provenance = "larger sieve, p = 1 mod k, p <= (phi(k) log N)^2";
  try {
    const auto report = sieve::apriori_sieve_bound(n, static_cast<unsigned>(k));
    sieve_row.applicable = report.bound.has_value();
    sieve_row.value = report.bound.value_or(std::numeric_limits<double>::quiet_NaN());
    if (!report.bound) sieve_row.reason = "denominator not positive";
  } catch (const InvalidParameter& e) {
    sieve_row.applicable = false;
    sieve_row.value = std::numeric_limits<double>::quiet_NaN();
    sieve_row.reason = e.what();
  }
  rows.push_back(std::move(sieve_row));

  std::string out = "| bound | value | applicable | formula | note |\n";
  out += "|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    out += "| " + r.name + " | " + value_text(r) + " | " + (r.applicable ? "yes" : "no") + " | " +
           r.provenance + " | " + r.reason + " |\n";
  }
  return out;
}

}  // namespace dkn::bounds
