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
#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dkn/approx.hpp"
#include "dkn/arith.hpp"
#include "dkn/bounds.hpp"
#include "dkn/characters.hpp"
#include "dkn/error.hpp"
#include "dkn/gap.hpp"
#include "dkn/json_io.hpp"
#include "dkn/search.hpp"
#include "dkn/sieve.hpp"
#include "dkn/tuples.hpp"
#include "report_json.hpp"

namespace dkn::cli {
namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InvalidParameter("empty entry in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw InvalidParameter("empty list");
  return out;
}

std::vector<BigInt> parse_big_list(const std::string& text) {
  std::vector<BigInt> out;
  for (const auto& s : split_list(text)) out.push_back(parse_bigint(s));
  return out;
}

std::vector<std::uint64_t> parse_residue_list(const std::string& text, std::uint64_t p) {
  if (text == "units" || text == "all") {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = text == "all" ? 0 : 1; x < p; ++x) out.push_back(x);
    return out;
  }
  std::vector<std::uint64_t> out;
  for (const auto& s : split_list(text)) {
    const BigInt v = parse_bigint(s);
    if (!fits_u64(v)) throw InvalidParameter("residue " + s + " out of range");
    out.push_back(to_u64(v));
  }
  return out;
}

std::int64_t parse_i64(const std::string& text, const char* name) {
  const BigInt v = parse_bigint(text);
  if (!fits_i64(v)) throw InvalidParameter(std::string(name) + " does not fit in 64 bits");
  return to_i64(v);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InvalidParameter("cannot open '" + path + "' for writing");
  f << contents;
  if (!f) throw Error("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidParameter("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

unsigned worker_count(unsigned flag) {
  if (flag != 0) return flag;
  if (const char* env = std::getenv("DKN_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v < 1 || v > 1024) throw InvalidParameter("DKN_WORKERS must be between 1 and 1024");
    return static_cast<unsigned>(v);
  }
  return 1;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string command_line;

  void emit(const json& j) const { out << j.dump() << '\n'; }
};

// Shared flags of commands that take a tuple.
struct TupleFlags {
  std::string n;
  unsigned k = 2;
  std::string set;
  bool allow_zero = false;
  bool allow_negative = false;

  void add(CLI::App* app, bool need_set = true) {
    app->add_option("--n", n, "shift n (nonzero integer)")->required();
    app->add_option("--k", k, "exponent k >= 2")->default_val(2);
    auto* opt = app->add_option("--set", set, "comma-separated elements");
    if (need_set) opt->required();
    app->add_flag("--allow-zero", allow_zero, "accept 0 as a k-th power");
    app->add_flag("--allow-negative", allow_negative, "accept negative k-th powers for odd k");
  }

  tuples::TupleRecord tuple() const { return tuples::make_record(k, parse_bigint(n), parse_big_list(set)); }
  tuples::PowerPolicy policy() const { return {allow_zero, allow_negative}; }
};

struct Quad {
  std::string a, b, c, d, n;
  unsigned k = 2;

  void add(CLI::App* app, bool with_k) {
    app->add_option("--a", a)->required();
    app->add_option("--b", b)->required();
    app->add_option("--c", c)->required();
    app->add_option("--d", d)->required();
    app->add_option("--n", n, "n > 0")->required();
    if (with_k) app->add_option("--k", k)->default_val(2);
  }
};

int run_search(const Context& ctx, const tuples::SearchParams& params, unsigned workers,
               std::uint64_t budget, const std::string& out_path, const std::string& resume_path,
               std::string checkpoint_path) {
  tuples::SearchOptions options;
  options.workers = workers;
  options.node_budget = budget;
  if (!resume_path.empty()) options.resume = io::checkpoint_from_json(read_file(resume_path));
  if (checkpoint_path.empty() && !out_path.empty()) checkpoint_path = out_path + ".checkpoint.json";

  std::vector<tuples::TupleRecord> records;
  std::optional<tuples::Checkpoint> checkpoint;
  try {
    records = tuples::search(params, options);
  } catch (const tuples::SearchBudgetExceeded& e) {
    records = e.partial();
    checkpoint = e.checkpoint();
  }

  std::string body;
  for (const auto& r : records) body += io::tuple_to_json(r) + "\n";

  std::vector<std::string> outputs;
  if (out_path.empty()) {
    ctx.out << body;
  } else {
    write_file(out_path, body);
    outputs.push_back(out_path);
  }
  if (checkpoint) {
    const std::string line = io::checkpoint_to_json(*checkpoint) + "\n";
    if (checkpoint_path.empty()) {
      ctx.err << "checkpoint: " << line;
    } else {
      write_file(checkpoint_path, line);
      outputs.push_back(checkpoint_path);
    }
  }
  if (!out_path.empty()) {
    json manifest = {{"tool", "dkn"},
                     {"version", DKN_VERSION},
                     {"command", ctx.command_line},
                     {"timestamp", utc_timestamp()},
                     {"input_digest", tuples::search_digest(params)},
                     {"outputs", outputs},
                     {"complete", !checkpoint.has_value()}};
    write_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
  }
  if (checkpoint) {
    ctx.err << "search: node budget exhausted; " << records.size() << " records written, resume from "
            << (checkpoint_path.empty() ? std::string("the checkpoint above") : checkpoint_path) << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::string command_line = "dkn";
  for (const auto& a : args) command_line += " " + a;
  Context ctx{out, err, command_line};

  CLI::App app{"dkn: generalized Diophantine tuples with property D_k(n)", "dkn"};
  app.require_subcommand(1);
  app.set_version_flag("--version", DKN_VERSION);

  std::function<int()> action;

  // verify
  TupleFlags verify_flags;
  std::string verify_input;
  auto* verify_cmd = app.add_subcommand("verify", "check every pair a_i a_j + n for a k-th power");
  verify_flags.add(verify_cmd, false);
  verify_cmd->add_option("--input", verify_input, "JSON Lines file of tuple records");
  verify_cmd->callback([&] {
    action = [&] {
      std::vector<tuples::TupleRecord> records;
      if (!verify_input.empty()) {
        std::ifstream f(verify_input);
        if (!f) throw InvalidParameter("cannot open '" + verify_input + "'");
        records = io::read_tuples_jsonl(f);
      } else {
        if (verify_flags.set.empty()) throw InvalidParameter("verify: --set or --input is required");
        records.push_back(verify_flags.tuple());
      }
      bool all_ok = true;
      for (const auto& t : records) {
        const auto report = tuples::verify(t, verify_flags.policy());
        all_ok = all_ok && report.ok;
        ctx.emit(verify_json(t, report));
      }
      return all_ok ? kExitOk : kExitCheckFailed;
    };
  });

  // euler
  std::string euler_a, euler_b;
  auto* euler_cmd = app.add_subcommand("euler", "Euler's D(1) quadruple through {a, b}");
  euler_cmd->add_option("--a", euler_a)->required();
  euler_cmd->add_option("--b", euler_b)->required();
  euler_cmd->callback([&] {
    action = [&] {
      const BigInt a = parse_bigint(euler_a);
      const BigInt b = parse_bigint(euler_b);
      const auto t = tuples::euler_family(a, b);
      json j = {{"a", integer_json(a)}, {"b", integer_json(b)}, {"found", t.has_value()}};
      if (!t) {
        ctx.emit(j);
        return kExitCheckFailed;
      }
      j["tuple"] = tuple_json(*t);
      j["verified"] = tuples::verify(*t).ok;
      ctx.emit(j);
      return j["verified"].get<bool>() ? kExitOk : kExitCheckFailed;
    };
  });

  // extend
  TupleFlags extend_flags;
  std::string extend_max;
  auto* extend_cmd = app.add_subcommand("extend", "all x <= max extending a tuple");
  extend_flags.add(extend_cmd);
  extend_cmd->add_option("--max", extend_max, "search bound B")->required();
  extend_cmd->callback([&] {
    action = [&] {
      const auto t = extend_flags.tuple();
      const BigInt bound = parse_bigint(extend_max);
      const auto r = tuples::extend(t, bound, extend_flags.policy());
      if (!r.base_verified) ctx.err << "warning: the base tuple does not verify; extending anyway\n";
      json values = json::array();
      for (const auto& v : r.values) values.push_back(integer_json(v));
      ctx.emit({{"tuple", tuple_json(t)},
                {"max", integer_json(bound)},
                {"base_verified", r.base_verified},
                {"extensions", values}});
      return kExitOk;
    };
  });

  // search
  std::string search_n;
  unsigned search_k = 2, search_m = 4, search_workers = 0;
  std::uint64_t search_max = 0, search_budget = 0;
  std::string search_out, search_resume, search_checkpoint;
  bool search_zero = false, search_negative = false;
  auto* search_cmd = app.add_subcommand("search", "all m-subsets of [1, max] with property D_k(n)");
  search_cmd->add_option("--n", search_n)->required();
  search_cmd->add_option("--k", search_k)->default_val(2);
  search_cmd->add_option("--m", search_m)->required();
  search_cmd->add_option("--max", search_max, "bound B")->required();
  search_cmd->add_option("--out", search_out, "JSON Lines output file (stdout if absent)");
  search_cmd->add_option("--workers", search_workers, "worker threads (default: DKN_WORKERS or 1)");
  search_cmd->add_option("--budget", search_budget, "node budget, 0 = unlimited")->default_val(0);
  search_cmd->add_option("--resume", search_resume, "checkpoint file to continue from");
  search_cmd->add_option("--checkpoint", search_checkpoint, "where to write a checkpoint");
  search_cmd->add_flag("--allow-zero", search_zero);
  search_cmd->add_flag("--allow-negative", search_negative);
  search_cmd->callback([&] {
    action = [&] {
      tuples::SearchParams params;
      params.n = parse_i64(search_n, "n");
      params.k = search_k;
      params.m = search_m;
      params.bound = search_max;
      params.policy = {search_zero, search_negative};
      return run_search(ctx, params, worker_count(search_workers), search_budget, search_out,
                        search_resume, search_checkpoint);
    };
  });

  // gap-check
  auto* gap_cmd = app.add_subcommand("gap-check", "gap-principle inequalities on given instances");
  gap_cmd->require_subcommand(1);
  Quad gyar_q, abcd_q, neg_q;
  auto* gyar_cmd = gap_cmd->add_subcommand("gyar", "bd >= k^k n^-k (ac)^(k-1)");
  gyar_q.add(gyar_cmd, true);
  gyar_cmd->callback([&] {
    action = [&] {
      const auto c = gap::check_gyar(parse_bigint(gyar_q.a), parse_bigint(gyar_q.b), parse_bigint(gyar_q.c),
                                     parse_bigint(gyar_q.d), parse_bigint(gyar_q.n), gyar_q.k);
      ctx.emit(gap_json("gyar", c));
      return c.holds ? kExitOk : kExitCheckFailed;
    };
  });
  auto* abcd_cmd = gap_cmd->add_subcommand("abcd", "(ac-n)(bd-n) >= abcd/2");
  abcd_q.add(abcd_cmd, false);
  abcd_cmd->callback([&] {
    action = [&] {
      const auto c = gap::check_abcd(parse_bigint(abcd_q.a), parse_bigint(abcd_q.b), parse_bigint(abcd_q.c),
                                     parse_bigint(abcd_q.d), parse_bigint(abcd_q.n));
      ctx.emit(gap_json("abcd", c));
      return c.holds ? kExitOk : kExitCheckFailed;
    };
  });
  auto* neg_cmd = gap_cmd->add_subcommand("neg", "bd >= k^k 2^-k n^-k (ac)^(k-1) for D_k(-n)");
  neg_q.add(neg_cmd, true);
  neg_cmd->callback([&] {
    action = [&] {
      const auto c = gap::check_gap_neg(parse_bigint(neg_q.a), parse_bigint(neg_q.b), parse_bigint(neg_q.c),
                                        parse_bigint(neg_q.d), parse_bigint(neg_q.n), neg_q.k);
      ctx.emit(gap_json("neg", c));
      return c.holds ? kExitOk : kExitCheckFailed;
    };
  });
  TupleFlags growth_flags;
  int growth_sign = 1;
  unsigned growth_L = 3;
  bool growth_skip = false;
  auto* growth_cmd = gap_cmd->add_subcommand("growth", "a_{2+3j} >= a_2^((k-1)^j)");
  growth_flags.add(growth_cmd);
  growth_cmd->add_option("--sign", growth_sign, "+1 for D_k(|n|), -1 for D_k(-|n|)")->default_val(1);
  growth_cmd->add_option("--L", growth_L, "elements must be >= |n|^L")->default_val(3);
  growth_cmd->add_flag("--skip-verify", growth_skip, "do not require the tuple property");
  growth_cmd->callback([&] {
    action = [&] {
      const auto t = growth_flags.tuple();
      const auto v = gap::growth_certificate(t, growth_sign, growth_L, {growth_skip});
      ctx.emit(growth_json(v));
      for (const auto& x : v) {
        if (!x.holds) return kExitCheckFailed;
      }
      return kExitOk;
    };
  });

  // char-sum
  std::uint64_t cs_p = 0;
  unsigned cs_k = 2;
  std::string cs_A, cs_B, cs_n = "1";
  auto* cs_cmd = app.add_subcommand("char-sum", "sum of chi(ab + n) over A x B for an order-k character");
  cs_cmd->add_option("--p", cs_p, "prime modulus")->required();
  cs_cmd->add_option("--k", cs_k, "character order, k | p-1")->required();
  cs_cmd->add_option("--A", cs_A, "units mod p, comma-separated or 'units'")->required();
  cs_cmd->add_option("--B", cs_B, "residues mod p, comma-separated, 'units' or 'all'")->required();
  cs_cmd->add_option("--n", cs_n)->default_val("1");
  cs_cmd->callback([&] {
    action = [&] {
      const auto chi = characters::make_character(cs_p, cs_k);
      const std::int64_t n = parse_i64(cs_n, "n");
      const auto A = parse_residue_list(cs_A, cs_p);
      const auto B = parse_residue_list(cs_B, cs_p);
      const auto r = characters::char_sum(chi, A, B, n);
      ctx.emit(char_sum_json(chi, n, r));
      return r.holds ? kExitOk : kExitCheckFailed;
    };
  });

  // sieve
  auto* sieve_cmd = app.add_subcommand("sieve", "larger-sieve bounds and prime sums");
  sieve_cmd->require_subcommand(1);
  std::string gal_set, gal_N, gal_primes = "all", gal_csv;
  std::uint64_t gal_Q = 0;
  unsigned gal_k = 1;
  auto* gal_cmd = sieve_cmd->add_subcommand("gallagher", "larger sieve on an explicit set");
  gal_cmd->add_option("--set", gal_set)->required();
  gal_cmd->add_option("--N", gal_N, "ambient bound N")->required();
  gal_cmd->add_option("--Q", gal_Q, "prime bound Q > 1")->required();
  gal_cmd->add_option("--primes", gal_primes, "'all' or 'one-mod-k'")->default_val("all");
  gal_cmd->add_option("--k", gal_k, "modulus for --primes one-mod-k")->default_val(1);
  gal_cmd->add_option("--csv", gal_csv, "write per-prime rows as CSV");
  gal_cmd->callback([&] {
    action = [&] {
      sieve::PrimeSpec spec;
      if (gal_primes == "all") {
        spec = sieve::PrimeSpec::all();
      } else if (gal_primes == "one-mod-k") {
        spec = sieve::PrimeSpec::one_mod(gal_k);
      } else {
        throw InvalidParameter("--primes must be 'all' or 'one-mod-k'");
      }
      const auto S = parse_big_list(gal_set);
      const auto r = sieve::gallagher_bound(S, parse_bigint(gal_N), spec, gal_Q);
      if (!gal_csv.empty()) write_file(gal_csv, sieve::rows_csv(r));
      ctx.emit(sieve_json(r));
      const bool violated = r.bound && static_cast<double>(S.size()) > *r.bound;
      return violated ? kExitCheckFailed : kExitOk;
    };
  });
  std::string apr_n, apr_csv;
  unsigned apr_k = 2;
  std::uint64_t apr_Q = 0;
  auto* apr_cmd = sieve_cmd->add_subcommand("apriori", "a-priori sieve bound for D_k(n) sets in [1, |n|^3]");
  apr_cmd->add_option("--n", apr_n)->required();
  apr_cmd->add_option("--k", apr_k)->default_val(2);
  apr_cmd->add_option("--Q", apr_Q, "prime bound (default ceil((phi(k) log N)^2))");
  apr_cmd->add_option("--csv", apr_csv, "write per-prime rows as CSV");
  apr_cmd->callback([&] {
    action = [&] {
      std::optional<std::uint64_t> q;
      if (apr_Q != 0) q = apr_Q;
      const auto r = sieve::apriori_sieve_bound(parse_bigint(apr_n), apr_k, q);
      if (!apr_csv.empty()) write_file(apr_csv, sieve::rows_csv(r));
      ctx.emit(sieve_json(r));
      return kExitOk;
    };
  });
  std::uint64_t pnt_Q = 0;
  unsigned pnt_k = 3;
  std::string pnt_a = "1";
  auto* pnt_cmd = sieve_cmd->add_subcommand("pnt-check", "theta(Q; k, a) against Q/phi(k)");
  pnt_cmd->add_option("--Q", pnt_Q)->required();
  pnt_cmd->add_option("--k", pnt_k)->required();
  pnt_cmd->add_option("--a", pnt_a)->default_val("1");
  pnt_cmd->callback([&] {
    action = [&] {
      const auto r = sieve::pnt_check(pnt_Q, pnt_k, parse_i64(pnt_a, "a"));
      ctx.emit(pnt_json(r));
      return (r.applies && !r.holds_empirically) ? kExitCheckFailed : kExitOk;
    };
  });

  // approx
  auto* approx_cmd = app.add_subcommand("approx", "rational approximation side: pairs, heights, checks");
  approx_cmd->require_subcommand(1);
  TupleFlags pairs_flags;
  auto* pairs_cmd = approx_cmd->add_subcommand("pairs", "(u_i, v_i) with a_1 a_i + n = u^k, a_2 a_i + n = v^k");
  pairs_flags.add(pairs_cmd);
  pairs_cmd->callback([&] {
    action = [&] {
      json arr = json::array();
      for (const auto& p : approx::solution_pairs(pairs_flags.tuple(), pairs_flags.policy())) {
        arr.push_back(pair_json(p));
      }
      ctx.emit({{"pairs", arr}});
      return kExitOk;
    };
  });
  std::string h_a1, h_a2;
  unsigned h_k = 2;
  auto* height_cmd = approx_cmd->add_subcommand("height", "degree and height of (a1/a2)^(1/k)");
  height_cmd->add_option("--a1", h_a1)->required();
  height_cmd->add_option("--a2", h_a2)->required();
  height_cmd->add_option("--k", h_k)->required();
  height_cmd->callback([&] {
    action = [&] {
      ctx.emit(root_alpha_json(approx::height_of_root(parse_bigint(h_a1), parse_bigint(h_a2), h_k)));
      return kExitOk;
    };
  });
  TupleFlags check_flags;
  std::size_t check_i = 3;
  auto* check_cmd = approx_cmd->add_subcommand("check", "approximation inequalities for pair i");
  check_flags.add(check_cmd);
  check_cmd->add_option("--i", check_i, "1-based index >= 3")->required();
  check_cmd->callback([&] {
    action = [&] {
      ctx.emit(approx_check_json(approx::approx_check(check_flags.tuple(), check_i, check_flags.policy())));
      return kExitOk;
    };
  });
  unsigned c_k = 3, c_L = 3;
  auto* c_cmd = approx_cmd->add_subcommand("c-lemma", "c(k) and the n threshold for odd k");
  c_cmd->add_option("--k", c_k)->required();
  c_cmd->add_option("--L", c_L)->default_val(3);
  c_cmd->callback([&] {
    action = [&] {
      ctx.emit({{"k", c_k}, {"L", c_L}, {"c", approx::c_lemma(c_k)}, {"n_threshold", approx::n_threshold(c_k, c_L)}});
      return kExitOk;
    };
  });

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bounds and constants");
  bool bounds_table_flag = false;
  std::string bt_n;
  std::uint64_t bt_k = 2;
  bounds_cmd->add_flag("--table", bounds_table_flag, "print a Markdown table for (--n, --k)");
  bounds_cmd->add_option("--n", bt_n);
  bounds_cmd->add_option("--k", bt_k)->default_val(2);
  bounds_cmd->require_subcommand(0, 1);
  auto table_action = [&] {
    if (bt_n.empty()) throw InvalidParameter("bounds table: --n is required");
    ctx.out << bounds::bounds_table(parse_bigint(bt_n), bt_k);
    return kExitOk;
  };
  bounds_cmd->callback([&] {
    if (bounds_cmd->get_subcommands().empty()) {
      if (!bounds_table_flag) throw CLI::RequiredError("a bounds subcommand or --table");
      action = table_action;
    }
  });

  std::uint64_t ev_r = 2;
  double ev_kappa = 1.0;
  auto* ev_cmd = bounds_cmd->add_subcommand("evertse", "2^25 kappa^-3 log(2r) log(kappa^-1 log(2r))");
  ev_cmd->add_option("--r", ev_r)->required();
  ev_cmd->add_option("--kappa", ev_kappa)->required();
  ev_cmd->callback([&] {
    action = [&] {
      ctx.emit({{"name", "evertse_count"}, {"r", ev_r}, {"kappa", ev_kappa}, {"value", bounds::evertse_count(ev_r, ev_kappa)}});
      return kExitOk;
    };
  });
  std::uint64_t large_k = 3;
  bool large_refined = false;
  auto* large_cmd = bounds_cmd->add_subcommand("large", "bound on elements >= |n|^L");
  large_cmd->add_option("--k", large_k)->required();
  large_cmd->add_flag("--refined", large_refined, "use 2 + 3 j0(k) as the additive constant");
  large_cmd->callback([&] {
    action = [&] {
      auto j = bound_json(bounds::effective_large_bound(large_k, large_refined));
      j["j0"] = bounds::j0(large_k);
      ctx.emit(j);
      return kExitOk;
    };
  });
  std::string mt_n;
  std::uint64_t mt_k = 2;
  auto* mt_cmd = bounds_cmd->add_subcommand("main-term", "3 phi(k) log|n|");
  mt_cmd->add_option("--n", mt_n)->required();
  mt_cmd->add_option("--k", mt_k)->required();
  mt_cmd->callback([&] {
    action = [&] {
      ctx.emit(bound_json(bounds::main_term(parse_bigint(mt_n), mt_k)));
      return kExitOk;
    };
  });
  std::uint64_t q0_k = 3;
  std::string q0_n;
  auto* q0_cmd = bounds_cmd->add_subcommand("q0", "Q0(k), and with --n whether (phi(k) log N)^2 exceeds it");
  q0_cmd->add_option("--k", q0_k)->required();
  q0_cmd->add_option("--n", q0_n);
  q0_cmd->callback([&] {
    action = [&] {
      auto j = bound_json(bounds::q0(q0_k));
      if (!q0_n.empty()) j["q_condition"] = bounds::q_condition(parse_bigint(q0_n), q0_k);
      ctx.emit(j);
      return kExitOk;
    };
  });
  std::uint64_t j0_k = 3;
  auto* j0_cmd = bounds_cmd->add_subcommand("j0", "least j with (k-1)^j > 4k");
  j0_cmd->add_option("--k", j0_k)->required();
  j0_cmd->callback([&] {
    action = [&] {
      ctx.emit({{"k", j0_k}, {"j0", bounds::j0(j0_k)}});
      return kExitOk;
    };
  });
  std::string pr_n;
  std::uint64_t pr_k = 2;
  auto* prior_cmd = bounds_cmd->add_subcommand("prior", "earlier explicit bounds");
  prior_cmd->add_option("--n", pr_n)->required();
  prior_cmd->add_option("--k", pr_k)->required();
  prior_cmd->callback([&] {
    action = [&] {
      const auto r = bounds::prior_bounds(parse_bigint(pr_n), pr_k);
      ctx.emit(bound_json(r));
      return r.applicable ? kExitOk : kExitCheckFailed;
    };
  });
  std::string tb_n;
  std::uint64_t tb_k = 2;
  auto* tb_cmd = bounds_cmd->add_subcommand("table", "Markdown table of all bounds for (n, k)");
  tb_cmd->add_option("--n", tb_n)->required();
  tb_cmd->add_option("--k", tb_k)->required();
  tb_cmd->callback([&] {
    action = [&] {
      ctx.out << bounds::bounds_table(parse_bigint(tb_n), tb_k);
      return kExitOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (!action) throw CLI::RequiredError("subcommand");
    return action();
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << DKN_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalidInput;
  } catch (const InvalidParameter& e) {
    err << "invalid-parameter: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const PreconditionFailed& e) {
    err << "precondition-failed: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace dkn::cli
