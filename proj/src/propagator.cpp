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

#include "bpp/propagator.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bpp {

std::string_view bound_mode_name(BoundMode mode) {
  switch (mode) {
    case BoundMode::kL2: return "l2";
    case BoundMode::kDffsSeq: return "dffs-seq";
    case BoundMode::kDffsPar: return "dffs-par";
  }
  return "?";
}

BoundMode parse_bound_mode(std::string_view text) {
  for (BoundMode mode : {BoundMode::kL2, BoundMode::kDffsSeq, BoundMode::kDffsPar}) {
    if (bound_mode_name(mode) == text) return mode;
  }
  throw std::invalid_argument("unknown bound mode '" + std::string(text) + "'");
}

BinPackingPropagator::BinPackingPropagator(const Instance& instance, PropagatorConfig config,
                                           ParallelBoundEngine* engine)
    : instance_(instance),
      config_(std::move(config)),
      engine_(engine),
      reasoner_(make_sum_reasoner(config_.knapsack)) {
  if (config_.bound_mode == BoundMode::kDffsPar && engine_ == nullptr) {
    throw std::invalid_argument("dffs-par bound mode needs a parallel engine");
  }
}

BinPackingPropagator::BinView BinPackingPropagator::view(const DomainStore& store,
                                                         std::size_t bin) const {
  BinView v;
  for (std::size_t i = 0; i < instance_.size(); ++i) {
    if (!store.contains(i, bin)) continue;
    if (store.assigned(i)) {
      v.committed += instance_.weight(i);
    } else {
      v.items.push_back(i);
      v.weights.push_back(instance_.weight(i));
    }
  }
  v.possible = v.committed;
  for (Weight w : v.weights) v.possible += w;
  return v;
}

Weight BinPackingPropagator::committed_load(const DomainStore& store, std::size_t bin) const {
  return view(store, bin).committed;
}

Weight BinPackingPropagator::possible_load(const DomainStore& store, std::size_t bin) const {
  return view(store, bin).possible;
}

std::vector<std::size_t> BinPackingPropagator::candidates(const DomainStore& store,
                                                          std::size_t bin) const {
  return view(store, bin).items;
}

bool BinPackingPropagator::load_coherence(DomainStore& store, std::size_t bin) const {
  Weight others_low = 0;
  Weight others_high = 0;
  for (std::size_t j = 0; j < store.bin_count(); ++j) {
    if (j == bin) continue;
    others_low += store.load_low(j);
    others_high += store.load_high(j);
  }
  const Weight total = instance_.total_weight();
  return store.raise_load_low(bin, total - others_high) &&
         store.lower_load_high(bin, total - others_low);
}

bool BinPackingPropagator::basic_load_tightening(DomainStore& store, std::size_t bin) const {
  BinView v = view(store, bin);
  return store.raise_load_low(bin, v.committed) && store.lower_load_high(bin, v.possible);
}

bool BinPackingPropagator::basic_item_filter(DomainStore& store, std::size_t item,
                                             std::size_t bin) const {
  if (store.assigned(item) || !store.contains(item, bin)) return true;
  BinView v = view(store, bin);
  const Weight w = instance_.weight(item);
  const bool eliminate = v.committed + w > store.load_high(bin);
  const bool commit = v.possible - w < store.load_low(bin);
  if (eliminate && commit) return false;
  if (eliminate) return store.remove(item, bin);
  if (commit) return store.assign(item, bin);
  return true;
}

bool BinPackingPropagator::basic_filter_bin(DomainStore& store, std::size_t bin) const {
  if (!load_coherence(store, bin) || !basic_load_tightening(store, bin)) return false;
  // The view may go stale as items move; stale committed/possible loads only
  // weaken the tests, so every deduction stays valid.
  BinView v = view(store, bin);
  const Weight low = store.load_low(bin);
  const Weight high = store.load_high(bin);
  for (std::size_t t = 0; t < v.items.size(); ++t) {
    const std::size_t item = v.items[t];
    const Weight w = v.weights[t];
    const bool eliminate = v.committed + w > high;
    const bool commit = v.possible - w < low;
    if (eliminate && commit) return false;
    if (eliminate && !store.remove(item, bin)) return false;
    if (commit && !store.assign(item, bin)) return false;
  }
  return true;
}

SumBitset BinPackingPropagator::reachable_sums(const DomainStore& store, std::size_t bin) const {
  BinView v = view(store, bin);
  const Weight c = instance_.capacity();
  return SumBitset::subset_sums(v.weights, c).shifted(v.committed, c);
}

bool BinPackingPropagator::packable(const DomainStore& store, std::size_t bin) const {
  BinView v = view(store, bin);
  return reasoner_
      ->window(v.weights, store.load_low(bin) - v.committed, store.load_high(bin) - v.committed)
      .has_value();
}

bool BinPackingPropagator::knapsack_tighten(DomainStore& store, std::size_t bin) const {
  BinView v = view(store, bin);
  auto window = reasoner_->window(v.weights, store.load_low(bin) - v.committed,
                                  store.load_high(bin) - v.committed);
  if (!window) return false;
  return store.raise_load_low(bin, v.committed + window->lo) &&
         store.lower_load_high(bin, v.committed + window->hi);
}

bool BinPackingPropagator::knapsack_item_filter(DomainStore& store, std::size_t item,
                                                std::size_t bin) const {
  if (store.assigned(item) || !store.contains(item, bin)) return true;
  BinView v = view(store, bin);
  std::vector<Weight> others;
  others.reserve(v.weights.size());
  for (std::size_t t = 0; t < v.items.size(); ++t) {
    if (v.items[t] != item) others.push_back(v.weights[t]);
  }
  auto support = reasoner_->support(others, instance_.weight(item),
                                    store.load_low(bin) - v.committed,
                                    store.load_high(bin) - v.committed);
  if (!support.with_item && !support.without_item) return false;
  if (!support.with_item) return store.remove(item, bin);
  if (!support.without_item) return store.assign(item, bin);
  return true;
}

bool BinPackingPropagator::knapsack_filter_bin(DomainStore& store, std::size_t bin) const {
  if (!knapsack_tighten(store, bin)) return false;
  BinView v = view(store, bin);
  const Weight low = store.load_low(bin) - v.committed;
  const Weight high = store.load_high(bin) - v.committed;
  // Taking every candidate reaches a valid load, so every item has support
  // with itself; and the empty set is valid when nothing more is needed.
  const bool may_eliminate = v.possible > store.load_high(bin);
  const bool may_commit = v.committed < store.load_low(bin);
  if (!may_eliminate && !may_commit) return true;

  const std::vector<SumReasoner::Support> supports = reasoner_->supports(v.weights, low, high);
  for (std::size_t t = 0; t < v.items.size(); ++t) {
    const SumReasoner::Support& s = supports[t];
    if (!s.with_item && !s.without_item) return false;
    if (!s.with_item && may_eliminate && !store.remove(v.items[t], bin)) return false;
    if (!s.without_item && may_commit && !store.assign(v.items[t], bin)) return false;
  }
  return true;
}

std::size_t BinPackingPropagator::MultisetHash::operator()(const std::vector<Weight>& v) const {
  std::size_t h = v.size();
  for (Weight w : v) h ^= std::hash<Weight>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t BinPackingPropagator::lower_bound(const DomainStore& store) const {
  ReducedInstance red = reduce(instance_, store);
  const std::uint64_t k = store.bin_count();
  if (config_.bound_mode == BoundMode::kL2) return l2(red);

  // The bound depends only on the multiset of reduced weights. An entry cut
  // short by the early exit is reused only while it still exceeds k.
  std::sort(red.weights.begin(), red.weights.end());
  if (auto it = bound_cache_.find(red.weights); it != bound_cache_.end()) {
    if (it->second.complete || it->second.lb > k) return it->second.lb;
  }
  const BoundResult result = config_.bound_mode == BoundMode::kDffsSeq
                                 ? lower_bound_seq(red, k, config_.dff_order)
                                 : engine_->lower_bound(red, k, config_.dff_order);
  if (bound_cache_.size() >= kBoundCacheLimit) bound_cache_.clear();
  bound_cache_[std::move(red.weights)] = {result.lb, !result.exceeded_k};
  return result.lb;
}

bool BinPackingPropagator::feasibility_check(const DomainStore& store) const {
  return lower_bound(store) <= store.bin_count();
}

PropagationOutcome BinPackingPropagator::propagate(DomainStore& store) {
  PropagationOutcome outcome;
  std::vector<std::size_t> sizes(store.item_count());
  for (std::size_t i = 0; i < sizes.size(); ++i) sizes[i] = store.domain_size(i);
  std::vector<std::pair<Weight, Weight>> loads(store.bin_count());
  for (std::size_t j = 0; j < loads.size(); ++j) loads[j] = {store.load_low(j), store.load_high(j)};

  auto fail = [&] {
    outcome.status = PropagationStatus::kFailure;
    return outcome;
  };

  for (;;) {
    ++outcome.iterations;
    const std::uint64_t before = store.version();
    for (std::size_t j = 0; j < store.bin_count(); ++j) {
      if (!basic_filter_bin(store, j)) return fail();
    }
    for (std::size_t j = 0; j < store.bin_count(); ++j) {
      if (!knapsack_filter_bin(store, j)) return fail();
    }
    if (store.version() != before) continue;
    ++outcome.bound_calls;
    if (!feasibility_check(store)) return fail();
    break;
  }

  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (store.domain_size(i) != sizes[i]) outcome.changed_items.push_back(i);
  }
  for (std::size_t j = 0; j < loads.size(); ++j) {
    if (loads[j] != std::pair{store.load_low(j), store.load_high(j)}) {
      outcome.changed_bins.push_back(j);
    }
  }
  return outcome;
}

}  // namespace bpp
