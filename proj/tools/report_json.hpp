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

// JSON renderings of the library's report types for the command line.
// Integers beyond 2^53 become decimal strings; rationals are "p/q" strings.

#include "dkn/approx.hpp"
#include "dkn/bounds.hpp"
#include "dkn/characters.hpp"
#include "dkn/gap.hpp"
#include "dkn/sieve.hpp"
#include "dkn/tuples.hpp"
#include "json.hpp"

namespace dkn::cli {

using nlohmann::json;

json integer_json(const BigInt& x);
json tuple_json(const tuples::TupleRecord& t);
json verify_json(const tuples::TupleRecord& t, const tuples::VerifyReport& report);
json gap_json(const char* check, const gap::GapCheck& c);
json growth_json(const std::vector<gap::GrowthVerdict>& verdicts);
json char_sum_json(const characters::OrderKCharacter& chi, std::int64_t n,
                   const characters::CharSumResult& r);
json sieve_json(const sieve::SieveReport& r);
json pnt_json(const sieve::PntCheck& r);
json pair_json(const approx::SolutionPair& p);
json root_alpha_json(const approx::RootAlpha& r);
json approx_check_json(const approx::ApproxCheck& c);
json bound_json(const bounds::BoundReport& r);

}  // namespace dkn::cli
