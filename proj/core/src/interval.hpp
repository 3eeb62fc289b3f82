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

#include <mpfr.h>

#include "dkn/bigint.hpp"

namespace dkn::detail {

// Closed interval [lo, hi] with MPFR endpoints rounded outward.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval& other);
  Interval& operator=(const Interval&) = delete;
  ~Interval();

  static Interval from_integer(const BigInt& x, mpfr_prec_t prec);
  static Interval quotient(const BigInt& num, const BigInt& den, mpfr_prec_t prec);

  /// Enclosure of x^(1/k) for x >= 0.
  Interval kth_root(unsigned k) const;
  Interval sqrt() const;
  Interval reciprocal() const;  // requires lo > 0

  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);  // nonnegative operands

  Interval abs() const;

  /// hi - lo, rounded up.
  Interval width_bound() const;

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_prec_t precision() const { return prec_; }

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace dkn::detail
