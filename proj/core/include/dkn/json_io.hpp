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

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "dkn/search.hpp"
#include "dkn/tuples.hpp"

namespace dkn::io {

/// Integers up to 2^53 in magnitude are emitted as JSON numbers, larger ones
/// as decimal strings. Parsers accept either form.
inline constexpr std::int64_t kMaxJsonSafeInteger = std::int64_t{1} << 53;

/// {"k":2,"n":1,"elements":[1,3,8,120]} on one line, no newline.
std::string tuple_to_json(const tuples::TupleRecord& t);

/// Throws InvalidParameter on malformed input.
tuples::TupleRecord tuple_from_json(std::string_view text);

/// Reads a JSON Lines stream of tuple records; blank lines are skipped.
std::vector<tuples::TupleRecord> read_tuples_jsonl(std::istream& in);

/// {"prefix":[...],"max":B,"digest":"..."} on one line.
std::string checkpoint_to_json(const tuples::Checkpoint& cp);
tuples::Checkpoint checkpoint_from_json(std::string_view text);

}  // namespace dkn::io
