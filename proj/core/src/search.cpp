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
#include "dkn/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <iterator>
#include <thread>

#include "dkn/arith.hpp"

namespace dkn::tuples {
namespace {

using i128 = __int128;

constexpr std::uint64_t kMaxBound = std::uint64_t{1} << 31;
constexpr std::int64_t kMaxAbsN = std::int64_t{1} << 60;

void check_params(const SearchParams& p) {
  if (p.k < 2) throw InvalidParameter("search: k must be at least 2");
  if (p.n == 0) throw InvalidParameter("search: n must be nonzero");
  if (p.m < 2) throw InvalidParameter("search: m must be at least 2");
  if (p.bound < 1) throw InvalidParameter("search: bound must be positive");
  if (p.bound > kMaxBound) throw InvalidParameter("search: bound exceeds 2^31");
  if (p.n > kMaxAbsN || p.n < -kMaxAbsN) throw InvalidParameter("search: |n| exceeds 2^60");
}

// r^k, or a value above `cap` when it would exceed it.
i128 power_capped(std::uint64_t r, unsigned k, i128 cap) {
  i128 acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc *= static_cast<i128>(r);
    if (acc > cap) return cap + 1;
  }
  return acc;
}

std::uint64_t root_floor(i128 v, unsigned k) {
  return v <= 0 ? 0 : arith::ikroot_u64(static_cast<std::uint64_t>(v), k);
}

// Neighbours b in (a, B] of vertex a, ascending.
std::vector<std::uint32_t> forward_neighbours(std::uint64_t a, const SearchParams& p) {
  const i128 n = p.n;
  const i128 lo = static_cast<i128>(a) * static_cast<i128>(a + 1) + n;
  const i128 hi = static_cast<i128>(a) * static_cast<i128>(p.bound) + n;
  std::vector<std::uint32_t> out;
  if (hi < lo) return out;

  auto consider = [&](i128 power) {
    const i128 diff = power - n;
    if (diff <= 0 || diff % static_cast<i128>(a) != 0) return;
    const i128 b = diff / static_cast<i128>(a);
    if (b > static_cast<i128>(a) && b <= static_cast<i128>(p.bound)) {
      out.push_back(static_cast<std::uint32_t>(b));
    }
  };

  if (p.policy.allow_negative && p.k % 2 == 1 && lo < 0) {
    const std::uint64_t s_max = root_floor(-lo, p.k);
    for (std::uint64_t s = s_max; s >= 1; --s) {
      const i128 power = -power_capped(s, p.k, -lo);
      if (power <= hi) consider(power);
    }
  }
  if (p.policy.allow_zero && lo <= 0 && hi >= 0) consider(0);
  if (hi >= 1) {
    const std::uint64_t r_lo = lo <= 1 ? 1 : root_floor(lo - 1, p.k) + 1;
    const std::uint64_t r_hi = root_floor(hi, p.k);
    if (p.k == 2) {
      for (std::uint64_t r = r_lo; r <= r_hi; ++r) consider(static_cast<i128>(r) * r);
    } else {
      for (std::uint64_t r = r_lo; r <= r_hi; ++r) consider(power_capped(r, p.k, hi));
    }
  }
  return out;
}

template <typename Fn>
void run_workers(unsigned workers, Fn&& body) {
  if (workers <= 1) {
    body(0u);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&body, w] { body(w); });
  for (auto& t : pool) t.join();
}

struct BudgetAbort {};

class CliqueEnumerator {
 public:
  CliqueEnumerator(const PowerGraph& graph, const SearchParams& params, std::uint64_t node_cap)
      : graph_(graph), params_(params), node_cap_(node_cap) {}

  // Enumerates cliques whose smallest element is v. Throws BudgetAbort when
  // this vertex alone exceeds the node cap.
  std::vector<TupleRecord> run(std::uint32_t v) {
    out_.clear();
    nodes_ = 0;
    clique_.assign(1, v);
    expand(graph_.forward[v]);
    return std::move(out_);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void tick() {
    ++nodes_;
    if (node_cap_ != 0 && nodes_ > node_cap_) throw BudgetAbort{};
  }

  void emit() {
    TupleRecord t;
    t.k = params_.k;
    t.n = to_big(params_.n);
    t.elements.reserve(clique_.size());
    for (std::uint32_t x : clique_) t.elements.push_back(to_big(std::uint64_t{x}));
    out_.push_back(std::move(t));
  }

  void expand(const std::vector<std::uint32_t>& cand) {
    tick();
    const std::size_t need = params_.m - clique_.size();
    if (need == 1) {
      for (std::uint32_t c : cand) {
        tick();
        clique_.push_back(c);
        emit();
        clique_.pop_back();
      }
      return;
    }
    std::vector<std::uint32_t> next;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (cand.size() - i < need) break;
      const std::uint32_t c = cand[i];
      const auto& nb = graph_.forward[c];
      next.clear();
      std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end(),
                            nb.begin(), nb.end(), std::back_inserter(next));
      if (next.size() + 1 < need) continue;
      clique_.push_back(c);
      expand(next);
      clique_.pop_back();
    }
  }

  const PowerGraph& graph_;
  const SearchParams& params_;
  std::uint64_t node_cap_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint32_t> clique_;
  std::vector<TupleRecord> out_;
};

}  // namespace

SearchBudgetExceeded::SearchBudgetExceeded(std::vector<TupleRecord> partial, Checkpoint checkpoint)
    : Error("search: node budget exhausted after first element " +
            (checkpoint.prefix.empty() ? std::string("(none)")
                                       : std::to_string(checkpoint.prefix.front()))),
      partial_(std::move(partial)),
      checkpoint_(std::move(checkpoint)) {}

std::string search_digest(const SearchParams& params) {
  const std::string canon = "dkn-search;n=" + std::to_string(params.n) + ";k=" + std::to_string(params.k) +
                            ";m=" + std::to_string(params.m) + ";B=" + std::to_string(params.bound) +
                            ";zero=" + (params.policy.allow_zero ? "1" : "0") +
                            ";neg=" + (params.policy.allow_negative ? "1" : "0");
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : canon) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::size_t PowerGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : forward) total += row.size();
  return total;
}

PowerGraph build_power_graph(const SearchParams& params, unsigned workers) {
  check_params(params);
  PowerGraph g;
  g.bound = params.bound;
  g.forward.resize(params.bound + 1);
  workers = std::max(1u, workers);
  run_workers(workers, [&](unsigned w) {
    for (std::uint64_t a = 1 + w; a <= params.bound; a += workers) {
      g.forward[a] = forward_neighbours(a, params);
    }
  });
  return g;
}

std::vector<TupleRecord> search(const SearchParams& params, const SearchOptions& options) {
  check_params(params);
  const std::string digest = search_digest(params);
  std::uint64_t start = 1;
  if (options.resume) {
    const Checkpoint& cp = *options.resume;
    if (cp.digest != digest || cp.max != params.bound) {
      throw InvalidParameter("search: checkpoint does not match the search parameters");
    }
    if (cp.prefix.size() > 1) throw InvalidParameter("search: checkpoint prefix has more than one element");
    if (!cp.prefix.empty()) start = cp.prefix.front() + 1;
  }
  if (start > params.bound) return {};

  const unsigned workers = std::max(1u, options.workers);
  const PowerGraph graph = build_power_graph(params, workers);
  const std::uint64_t budget = options.node_budget;

  const std::size_t count = params.bound - start + 1;
  std::vector<std::vector<TupleRecord>> per_vertex(count);
  std::vector<std::uint64_t> nodes(count, 0);
  std::vector<char> done(count, 0);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> spent{0};

  // Vertices are claimed in increasing order and each is abandoned only if it
  // alone exceeds the budget, so the completed prefix below is the same for
  // any worker count.
  run_workers(workers, [&](unsigned) {
    CliqueEnumerator enumerator(graph, params, budget);
    for (;;) {
      if (budget != 0 && spent.load() > budget) return;
      const std::uint64_t idx = next.fetch_add(1);
      if (idx >= count) return;
      const auto v = static_cast<std::uint32_t>(start + idx);
      try {
        per_vertex[idx] = enumerator.run(v);
        nodes[idx] = enumerator.nodes();
        done[idx] = 1;
      } catch (const BudgetAbort&) {
        nodes[idx] = enumerator.nodes();
      }
      spent.fetch_add(nodes[idx]);
    }
  });

  std::size_t cutoff = count;
  std::uint64_t cumulative = 0;
  if (budget != 0) {
    for (std::size_t i = 0; i < count; ++i) {
      cumulative += nodes[i];
      if (!done[i] || cumulative > budget) {
        cutoff = i;
        break;
      }
    }
  }

  std::vector<TupleRecord> results;
  for (std::size_t i = 0; i < cutoff; ++i) {
    std::move(per_vertex[i].begin(), per_vertex[i].end(), std::back_inserter(results));
  }
  if (cutoff < count) {
    Checkpoint cp;
    cp.max = params.bound;
    cp.digest = digest;
    const std::uint64_t last = start + cutoff - 1;
    if (last >= 1) cp.prefix.push_back(last);
    throw SearchBudgetExceeded(std::move(results), std::move(cp));
  }
  return results;
}

}  // namespace dkn::tuples
