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
#include "dkn/json_io.hpp"

#include "dkn/error.hpp"
#include "json.hpp"

namespace dkn::io {
namespace {

using nlohmann::json;

json integer_json(const BigInt& x) {
  if (fits_i64(x)) {
    const std::int64_t v = to_i64(x);
    if (v <= kMaxJsonSafeInteger && v >= -kMaxJsonSafeInteger) return v;
  }
  return to_string(x);
}

BigInt integer_from(const json& j, const char* field) {
  if (j.is_number_integer()) return to_big(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return to_big(j.get<std::uint64_t>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw InvalidParameter(std::string("json: field '") + field + "' is not an integer");
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidParameter(std::string("json: ") + e.what());
  }
}

const json& member(const json& j, const char* field) {
  if (!j.is_object() || !j.contains(field)) {
    throw InvalidParameter(std::string("json: missing field '") + field + "'");
  }
  return j.at(field);
}

std::uint64_t u64_from(const json& j, const char* field) {
  const BigInt v = integer_from(j, field);
  if (!fits_u64(v)) throw InvalidParameter(std::string("json: field '") + field + "' is out of range");
  return to_u64(v);
}

}  // namespace

std::string tuple_to_json(const tuples::TupleRecord& t) {
  json j;
  j["k"] = t.k;
  j["n"] = integer_json(t.n);
  json elems = json::array();
  for (const BigInt& e : t.elements) elems.push_back(integer_json(e));
  j["elements"] = std::move(elems);
  return j.dump();
}

tuples::TupleRecord tuple_from_json(std::string_view text) {
  const json j = parse(text);
  tuples::TupleRecord t;
  const BigInt k = integer_from(member(j, "k"), "k");
  if (k < 2 || k > 1u << 20) throw InvalidParameter("json: k out of range");
  t.k = static_cast<unsigned>(to_u64(k));
  t.n = integer_from(member(j, "n"), "n");
  const json& elems = member(j, "elements");
  if (!elems.is_array()) throw InvalidParameter("json: 'elements' must be an array");
  for (const json& e : elems) t.elements.push_back(integer_from(e, "elements"));
  t.validate();
  return t;
}

std::vector<tuples::TupleRecord> read_tuples_jsonl(std::istream& in) {
  std::vector<tuples::TupleRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(tuple_from_json(line));
  }
  return out;
}

std::string checkpoint_to_json(const tuples::Checkpoint& cp) {
  json j;
  j["prefix"] = cp.prefix;
  j["max"] = cp.max;
  j["digest"] = cp.digest;
  return j.dump();
}

tuples::Checkpoint checkpoint_from_json(std::string_view text) {
  const json j = parse(text);
  tuples::Checkpoint cp;
  const json& prefix = member(j, "prefix");
  if (!prefix.is_array()) throw InvalidParameter("json: 'prefix' must be an array");
  for (const json& p : prefix) cp.prefix.push_back(u64_from(p, "prefix"));
  cp.max = u64_from(member(j, "max"), "max");
  const json& digest = member(j, "digest");
  if (!digest.is_string()) throw InvalidParameter("json: 'digest' must be a string");
  cp.digest = digest.get<std::string>();
  return cp;
}

}  // namespace dkn::io
