// Copyright 2026 The bpp-dff Authors
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

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "bpp/bounds.hpp"
#include "bpp/instance.hpp"
#include "bpp/knapsack.hpp"
#include "bpp/parallel.hpp"
#include "bpp/propagator.hpp"

namespace bpp {

struct SearchConfig {
  BoundMode bound_mode = BoundMode::kDffsSeq;
  // Commit an item that exactly fills a bin's residual capacity.
  bool dominance = true;
  // Commit the heaviest candidate of a bin that can take at most one more item.
  bool single_fit_dominance = true;
  // On refuting item->bin, drop the bin from every unassigned item of the same weight.
  bool sym_break_same_size = true;
  // On refuting item->bin, also drop every bin equivalent to it.
  bool sym_break_equivalent_bins = true;
  std::chrono::milliseconds time_limit{600'000};
  std::size_t workers = 1;
  std::vector<DffKind> dff_order{kAllDffs.begin(), kAllDffs.end()};
  KnapsackMode knapsack = KnapsackMode::kExact;

  void validate() const;
  PropagatorConfig propagator_config() const;
};

// A node is one item->bin trial; fails counts trials whose subtree held no
// solution, so fails <= nodes.
struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t fails = 0;
  std::uint64_t propagations = 0;
  std::uint64_t bound_calls = 0;
  std::chrono::milliseconds solve_time{0};
  bool solved = false;
  std::optional<std::size_t> bins;

  SearchStats& operator+=(const SearchStats& other);
};

enum class DecisionStatus { kSolution, kInfeasible, kTimedOut };

struct DecisionResult {
  DecisionStatus status = DecisionStatus::kInfeasible;
  std::vector<std::size_t> assignment;  // bin of each item, when solved
  std::vector<Weight> loads;
  SearchStats stats;
};

// Can the instance be packed into k bins? `engine` is used for
// BoundMode::kDffsPar; one is created from cfg.workers when null.
DecisionResult solve_decision(const Instance& instance, std::size_t k, const SearchConfig& cfg,
                              ParallelBoundEngine* engine = nullptr);

struct MinimizeResult {
  std::optional<std::size_t> bins;  // empty on timeout
  std::vector<std::size_t> assignment;
  std::vector<Weight> loads;
  std::size_t first_k = 0;
  std::vector<SearchStats> per_k;  // one entry per attempted k, from first_k upwards
  SearchStats total;
  bool timed_out = false;
};

// Root lower bound under the configured bound mode.
std::uint64_t root_lower_bound(const Instance& instance, const SearchConfig& cfg,
                               ParallelBoundEngine* engine = nullptr);

// Tries k = root lower bound, +1, ... until a packing is found; the time
// limit covers all attempts.
MinimizeResult minimize(const Instance& instance, const SearchConfig& cfg);

}  // namespace bpp
