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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dkn {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Parses a decimal integer with optional sign. Throws InvalidParameter.
BigInt parse_bigint(std::string_view text);

inline std::string to_string(const BigInt& x) { return x.get_str(10); }

/// Natural logarithm of x > 0, accurate to double precision for any size.
double log_big(const BigInt& x);

inline BigInt to_big(std::int64_t v) {
  BigInt r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

inline BigInt to_big(std::uint64_t v) {
  BigInt r;
  mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
  return r;
}

inline bool fits_u64(const BigInt& x) { return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64; }

inline bool fits_i64(const BigInt& x) { return mpz_fits_slong_p(x.get_mpz_t()) != 0; }

inline std::uint64_t to_u64(const BigInt& x) { return mpz_get_ui(x.get_mpz_t()); }

inline std::int64_t to_i64(const BigInt& x) { return mpz_get_si(x.get_mpz_t()); }

inline BigInt pow_big(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace dkn
