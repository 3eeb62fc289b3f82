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
#include "report_json.hpp"

#include "dkn/json_io.hpp"

namespace dkn::cli {
namespace {

std::string rational_text(const BigRational& q) {
  if (q.get_den() == 1) return to_string(q.get_num());
  return to_string(q.get_num()) + "/" + to_string(q.get_den());
}

}  // namespace

json integer_json(const BigInt& x) {
  if (fits_i64(x)) {
    const std::int64_t v = to_i64(x);
    if (v <= io::kMaxJsonSafeInteger && v >= -io::kMaxJsonSafeInteger) return v;
  }
  return to_string(x);
}

json tuple_json(const tuples::TupleRecord& t) { return json::parse(io::tuple_to_json(t)); }

json verify_json(const tuples::TupleRecord& t, const tuples::VerifyReport& report) {
  json witnesses = json::array();
  for (const auto& [pair, root] : report.witnesses) {
    witnesses.push_back({{"i", pair.first}, {"j", pair.second}, {"root", integer_json(root)}});
  }
  json failures = json::array();
  for (const auto& [i, j] : report.failures) {
    const BigInt value = t.elements[i - 1] * t.elements[j - 1] + t.n;
    failures.push_back({{"i", i}, {"j", j}, {"value", integer_json(value)}});
  }
  return {{"tuple", tuple_json(t)}, {"ok", report.ok}, {"witnesses", witnesses}, {"failures", failures}};
}

json gap_json(const char* check, const gap::GapCheck& c) {
  return {{"check", check},
          {"lhs", rational_text(c.lhs)},
          {"rhs", rational_text(c.rhs)},
          {"holds", c.holds},
          {"margin", c.margin}};
}

json growth_json(const std::vector<gap::GrowthVerdict>& verdicts) {
  json out = json::array();
  for (const auto& v : verdicts) out.push_back({{"j", v.j}, {"holds", v.holds}});
  return {{"check", "growth"}, {"verdicts", out}};
}

json char_sum_json(const characters::OrderKCharacter& chi, std::int64_t n,
                   const characters::CharSumResult& r) {
  return {{"p", chi.modulus()},
          {"k", chi.order()},
          {"generator", chi.generator()},
          {"n", n},
          {"sum", {{"re", r.sum.real()}, {"im", r.sum.imag()}}},
          {"abs", r.abs},
          {"bound", r.bound},
          {"holds", r.holds},
          {"exponent_counts", r.exponent_counts},
          {"zero_terms", r.zero_terms},
          {"sp_bound", characters::sp_bound(chi.modulus())}};
}

json sieve_json(const sieve::SieveReport& r) {
  json out = {{"mode", r.mode == sieve::SieveMode::kAPriori ? "a-priori" : "a-posteriori"},
              {"N", integer_json(r.N)},
              {"Q", r.Q},
              {"primes", r.primes.describe()},
              {"weight_rule", r.weight_rule},
              {"log_N", r.log_N},
              {"prime_count", r.prime_count},
              {"numerator", r.numerator},
              {"denominator", r.denominator}};
  out["bound"] = r.bound ? json(*r.bound) : json(nullptr);
  if (r.set_size) out["set_size"] = *r.set_size;
  return out;
}

json pnt_json(const sieve::PntCheck& r) {
  return {{"Q", r.Q},          {"k", r.k},
          {"a", r.a},          {"theta", r.theta},
          {"main_term", r.main_term}, {"error", r.error},
          {"allowance", r.allowance}, {"applies", r.applies},
          {"holds_empirically", r.holds_empirically}};
}

json pair_json(const approx::SolutionPair& p) {
  return {{"i", p.index}, {"x", integer_json(p.x)}, {"u", integer_json(p.u)}, {"v", integer_json(p.v)}};
}

json root_alpha_json(const approx::RootAlpha& r) {
  return {{"a1", integer_json(r.a1)},
          {"a2", integer_json(r.a2)},
          {"k", r.k},
          {"u_red", integer_json(r.u_red)},
          {"w_red", integer_json(r.w_red)},
          {"degree", r.degree},
          {"min_num", integer_json(r.min_num)},
          {"min_den", integer_json(r.min_den)},
          {"height", r.height}};
}

json approx_check_json(const approx::ApproxCheck& c) {
  json out = {{"i", c.index},
              {"u", integer_json(c.u)},
              {"v", integer_json(c.v)},
              {"lem31_holds", c.lem31_holds},
              {"lem32_applicable", c.lem32_applicable},
              {"certified", c.certified},
              {"precision_bits", c.precision_bits}};
  out["lem32_inequality"] = c.lem32_inequality ? json(*c.lem32_inequality) : json(nullptr);
  if (!c.lem32_applicable) {
    out["lem32_holds"] = "not-applicable";
  } else if (!c.lem32_holds) {
    out["lem32_holds"] = "unresolved";
  } else {
    out["lem32_holds"] = *c.lem32_holds;
  }
  return out;
}

json bound_json(const bounds::BoundReport& r) {
  json inputs = json::object();
  for (const auto& [key, value] : r.inputs) inputs[key] = value;
  json out = {{"name", r.name}, {"inputs", inputs}, {"applicable", r.applicable}};
  if (const auto* big = std::get_if<BigInt>(&r.value)) {
    out["value"] = integer_json(*big);
  } else {
    out["value"] = std::get<double>(r.value);  // non-finite values render as null
  }
  if (r.log_value) out["log_value"] = *r.log_value;
  if (!r.provenance.empty()) out["provenance"] = r.provenance;
  if (!r.reason.empty()) out["reason"] = r.reason;
  if (!r.parts.empty()) {
    json parts = json::array();
    for (const auto& p : r.parts) parts.push_back(bound_json(p));
    out["parts"] = parts;
  }
  return out;
}

}  // namespace dkn::cli
