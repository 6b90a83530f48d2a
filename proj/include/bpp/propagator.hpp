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

#include <cstdint>
#include <memory>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bpp/bounds.hpp"
#include "bpp/domain_store.hpp"
#include "bpp/instance.hpp"
#include "bpp/knapsack.hpp"
#include "bpp/parallel.hpp"

namespace bpp {

// Lower bound used by the feasibility check.
enum class BoundMode { kL2, kDffsSeq, kDffsPar };

std::string_view bound_mode_name(BoundMode mode);
BoundMode parse_bound_mode(std::string_view text);

struct PropagatorConfig {
  BoundMode bound_mode = BoundMode::kDffsSeq;
  std::vector<DffKind> dff_order{kAllDffs.begin(), kAllDffs.end()};
  KnapsackMode knapsack = KnapsackMode::kExact;
};

enum class PropagationStatus { kFixpoint, kFailure };

struct PropagationOutcome {
  PropagationStatus status = PropagationStatus::kFixpoint;
  std::vector<std::size_t> changed_items;
  std::vector<std::size_t> changed_bins;
  std::uint64_t iterations = 0;
  std::uint64_t bound_calls = 0;

  bool failed() const { return status == PropagationStatus::kFailure; }
};

// Filtering for bin_packing(x, w, l) over a DomainStore. Each sub-rule is a
// public method returning false on failure; propagate() runs them to a
// fixpoint and finishes with the lower-bound feasibility check.
class BinPackingPropagator {
 public:
  // `engine` is required for BoundMode::kDffsPar and must outlive this.
  BinPackingPropagator(const Instance& instance, PropagatorConfig config,
                       ParallelBoundEngine* engine = nullptr);

  PropagationOutcome propagate(DomainStore& store);

  Weight committed_load(const DomainStore& store, std::size_t bin) const;
  Weight possible_load(const DomainStore& store, std::size_t bin) const;
  std::vector<std::size_t> candidates(const DomainStore& store, std::size_t bin) const;

  bool load_coherence(DomainStore& store, std::size_t bin) const;
  bool basic_load_tightening(DomainStore& store, std::size_t bin) const;
  bool basic_item_filter(DomainStore& store, std::size_t item, std::size_t bin) const;

  // committed(bin) + every subset sum of the bin's candidates, over [0, c].
  SumBitset reachable_sums(const DomainStore& store, std::size_t bin) const;
  bool packable(const DomainStore& store, std::size_t bin) const;
  bool knapsack_tighten(DomainStore& store, std::size_t bin) const;
  bool knapsack_item_filter(DomainStore& store, std::size_t item, std::size_t bin) const;

  // Lower bound of the reduced instance under the configured engine.
  std::uint64_t lower_bound(const DomainStore& store) const;
  bool feasibility_check(const DomainStore& store) const;

  const Instance& instance() const { return instance_; }
  const PropagatorConfig& config() const { return config_; }

 private:
  struct BinView {
    Weight committed = 0;
    Weight possible = 0;
    std::vector<std::size_t> items;  // unassigned items with the bin in their domain
    std::vector<Weight> weights;
  };

  BinView view(const DomainStore& store, std::size_t bin) const;
  bool basic_filter_bin(DomainStore& store, std::size_t bin) const;
  bool knapsack_filter_bin(DomainStore& store, std::size_t bin) const;

  struct MultisetHash {
    std::size_t operator()(const std::vector<Weight>& v) const;
  };
  struct CachedBound {
    std::uint64_t lb = 0;
    bool complete = false;  // false when the sweep stopped early at lb > k
  };
  static constexpr std::size_t kBoundCacheLimit = 1 << 15;

  const Instance& instance_;
  PropagatorConfig config_;
  ParallelBoundEngine* engine_;
  std::unique_ptr<SumReasoner> reasoner_;
  // Bounds of sorted reduced weight multisets already evaluated.
  mutable std::unordered_map<std::vector<Weight>, CachedBound, MultisetHash> bound_cache_;
};

}  // namespace bpp
