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
#include "interval.hpp"

#include "dkn/error.hpp"

namespace dkn::detail {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_integer(const BigInt& x, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, x.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, x.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::quotient(const BigInt& num, const BigInt& den, mpfr_prec_t prec) {
  if (sgn(num) < 0 || sgn(den) <= 0) throw InvalidParameter("interval: quotient expects num >= 0, den > 0");
  Interval r(prec);
  mpfr_set_z(r.lo_, num.get_mpz_t(), MPFR_RNDD);
  mpfr_div_z(r.lo_, r.lo_, den.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, num.get_mpz_t(), MPFR_RNDU);
  mpfr_div_z(r.hi_, r.hi_, den.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::kth_root(unsigned k) const {
  Interval r(prec_);
  mpfr_rootn_ui(r.lo_, lo_, k, MPFR_RNDD);
  mpfr_rootn_ui(r.hi_, hi_, k, MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  Interval r(prec_);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::reciprocal() const {
  if (mpfr_sgn(lo_) <= 0) throw InvalidParameter("interval: reciprocal of an interval touching 0");
  Interval r(prec_);
  mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
  mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(a.prec_);
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  if (mpfr_sgn(a.lo_) < 0 || mpfr_sgn(b.lo_) < 0) {
    throw InvalidParameter("interval: product expects nonnegative operands");
  }
  Interval r(a.prec_);
  mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::abs() const {
  Interval r(prec_);
  if (mpfr_sgn(lo_) >= 0) {
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
  } else if (mpfr_sgn(hi_) <= 0) {
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  } else {
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    if (mpfr_cmp(hi_, r.hi_) > 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
  }
  return r;
}

Interval Interval::width_bound() const {
  Interval r(prec_);
  mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
  mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
  return r;
}

}  // namespace dkn::detail
