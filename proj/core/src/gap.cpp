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
#include "dkn/gap.hpp"

#include <limits>
#include <string>

#include "dkn/arith.hpp"
#include "dkn/error.hpp"

namespace dkn::gap {
namespace {

GapCheck compare(BigRational lhs, BigRational rhs) {
  lhs.canonicalize();
  rhs.canonicalize();
  GapCheck out;
  out.holds = lhs >= rhs;
  out.margin = sgn(rhs) == 0 ? std::numeric_limits<double>::infinity()
                             : BigRational(lhs / rhs).get_d();
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  return out;
}

void require_positive(const BigInt& x, const char* name) {
  if (sgn(x) <= 0) throw PreconditionFailed(std::string(name) + " must be positive");
}

void require_power(const BigInt& x, const BigInt& y, const BigInt& shift, unsigned k,
                   const char* label) {
  const BigInt value = x * y + shift;
  if (!arith::is_kth_power(value, k)) {
    throw PreconditionFailed(std::string(label) + " = " + to_string(value) + " is not a positive " +
                             std::to_string(k) + "-th power");
  }
}

void require_cube_ordering(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                           const BigInt& n) {
  require_positive(n, "n");
  const BigInt n3 = pow_big(n, 3);
  if (a < n3) {
    throw PreconditionFailed("a = " + to_string(a) + " is below n^3 = " + to_string(n3));
  }
  if (!(a < b && b < c && c < d)) throw PreconditionFailed("requires a < b < c < d");
}

// k^k (ac)^(k-1) / (scale n^k)
BigRational gyarmati_rhs(const BigInt& ac, const BigInt& n, unsigned k, const BigInt& scale) {
  BigRational r(pow_big(BigInt(k), k) * pow_big(ac, k - 1), scale * pow_big(n, k));
  r.canonicalize();
  return r;
}

}  // namespace

GapCheck check_gyar(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                    const BigInt& n, unsigned k) {
  if (k < 2) throw InvalidParameter("check_gyar: k must be at least 2");
  for (const auto* x : {&a, &b, &c, &d}) require_positive(*x, "a, b, c, d");
  require_positive(n, "n");
  if (!(a < b)) throw PreconditionFailed("check_gyar: requires a < b");
  if (!(c < d)) throw PreconditionFailed("check_gyar: requires c < d");
  require_power(a, c, n, k, "a*c + n");
  require_power(b, c, n, k, "b*c + n");
  require_power(a, d, n, k, "a*d + n");
  require_power(b, d, n, k, "b*d + n");
  return compare(BigRational(b * d), gyarmati_rhs(a * c, n, k, BigInt(1)));
}

GapCheck check_abcd(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                    const BigInt& n) {
  require_cube_ordering(a, b, c, d, n);
  return compare(BigRational((a * c - n) * (b * d - n)), BigRational(a * b * c * d, 2));
}

GapCheck check_gap_neg(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                       const BigInt& n, unsigned k) {
  if (k < 2) throw InvalidParameter("check_gap_neg: k must be at least 2");
  require_cube_ordering(a, b, c, d, n);
  const BigInt minus_n = -n;
  require_power(a, c, minus_n, k, "a*c - n");
  require_power(b, c, minus_n, k, "b*c - n");
  require_power(a, d, minus_n, k, "a*d - n");
  require_power(b, d, minus_n, k, "b*d - n");
  return compare(BigRational(b * d), gyarmati_rhs(a * c, n, k, pow_big(BigInt(2), k)));
}

std::vector<GrowthVerdict> growth_verdicts(std::span<const BigInt> elements, unsigned k) {
  if (k < 2) throw InvalidParameter("growth_verdicts: k must be at least 2");
  std::vector<GrowthVerdict> out;
  const std::size_t m = elements.size();
  if (m < 5) return out;
  const BigInt& base = elements[1];
  std::uint64_t exponent = 1;
  bool saturated = false;
  for (std::size_t j = 1; 2 + 3 * j <= m; ++j) {
    if (!saturated) {
      if (exponent > std::numeric_limits<std::uint64_t>::max() / (k - 1)) {
        saturated = true;
      } else {
        exponent *= (k - 1);
      }
    }
    const BigInt& target = elements[1 + 3 * j];
    bool holds = false;
    if (base <= 1) {
      holds = target >= base;
    } else {
      // base^E has at least E*(bits(base)-1)+1 bits; skip the power when that
      // already exceeds the target.
      const std::uint64_t base_bits = mpz_sizeinbase(base.get_mpz_t(), 2);
      const std::uint64_t target_bits = mpz_sizeinbase(target.get_mpz_t(), 2);
      if (saturated || exponent > target_bits || (base_bits - 1) * exponent + 1 > target_bits) {
        holds = false;
      } else {
        holds = target >= pow_big(base, static_cast<unsigned long>(exponent));
      }
    }
    out.push_back({j, holds});
  }
  return out;
}

std::vector<GrowthVerdict> growth_certificate(const tuples::TupleRecord& t, int sign, unsigned L,
                                              const GrowthOptions& options) {
  if (sign != 1 && sign != -1) throw InvalidParameter("growth_certificate: sign must be +1 or -1");
  if (L < 3) throw InvalidParameter("growth_certificate: L must be at least 3");
  if (t.k < 3) throw PreconditionFailed("growth_certificate: requires k >= 3");
  if (t.size() < 5) return {};

  const BigInt abs_n = abs(t.n);
  if (!options.skip_verification) {
    tuples::TupleRecord signed_t = t;
    signed_t.n = sign > 0 ? abs_n : BigInt(-abs_n);
    if (!tuples::verify(signed_t).ok) {
      throw PreconditionFailed("growth_certificate: tuple does not have property D_k(" +
                               to_string(signed_t.n) + ")");
    }
  } else {
    t.validate();
  }
  const BigInt floor_value = pow_big(abs_n, L);
  for (const BigInt& a : t.elements) {
    if (a < floor_value) {
      throw PreconditionFailed("growth_certificate: element " + to_string(a) + " is below |n|^" +
                               std::to_string(L) + " = " + to_string(floor_value));
    }
  }
  return growth_verdicts(t.elements, t.k);
}

}  // namespace dkn::gap
