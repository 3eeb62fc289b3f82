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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dkn/error.hpp"
#include "dkn/tuples.hpp"

namespace dkn::tuples {

struct SearchParams {
  std::int64_t n = 1;
  unsigned k = 2;
  unsigned m = 4;
  std::uint64_t bound = 1;  // B: elements are drawn from [1, B]
  PowerPolicy policy;
};

/// Resume point: every first element <= prefix.front() has been enumerated.
struct Checkpoint {
  std::vector<std::uint64_t> prefix;
  std::uint64_t max = 0;
  std::string digest;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

struct SearchOptions {
  unsigned workers = 1;
  /// Maximum clique-extension nodes per run; 0 means unlimited.
  std::uint64_t node_budget = 0;
  std::optional<Checkpoint> resume;
};

/// Stable hex digest of the search parameters; ties checkpoints to a query.
std::string search_digest(const SearchParams& params);

/// Thrown when the node budget runs out. Carries the completed prefix of the
/// output and the checkpoint from which a rerun continues.
class SearchBudgetExceeded : public Error {
 public:
  SearchBudgetExceeded(std::vector<TupleRecord> partial, Checkpoint checkpoint);

  const std::vector<TupleRecord>& partial() const { return partial_; }
  const Checkpoint& checkpoint() const { return checkpoint_; }

 private:
  std::vector<TupleRecord> partial_;
  Checkpoint checkpoint_;
};

/// Forward adjacency of the graph on [1, B] with a ~ b iff ab + n is a k-th
/// power. forward[a] lists the neighbours b > a in ascending order; index 0
/// is unused.
struct PowerGraph {
  std::uint64_t bound = 0;
  std::vector<std::vector<std::uint32_t>> forward;

  std::size_t edge_count() const;
};

PowerGraph build_power_graph(const SearchParams& params, unsigned workers = 1);

/// All m-subsets of [1, B] with property D_k(n), lexicographically ordered.
///
/// The result is independent of the worker count. With a resume checkpoint,
/// returns exactly the records whose first element exceeds the checkpoint.
std::vector<TupleRecord> search(const SearchParams& params, const SearchOptions& options = {});

}  // namespace dkn::tuples
