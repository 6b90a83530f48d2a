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

#include "bpp/search.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "bpp/domain_store.hpp"

namespace bpp {

namespace {

using Clock = std::chrono::steady_clock;

struct TimeoutSignal {};

constexpr std::size_t kNoItem = static_cast<std::size_t>(-1);

class DecisionSearch {
 public:
  DecisionSearch(const Instance& instance, std::size_t k, const SearchConfig& cfg,
                 ParallelBoundEngine* engine)
      : instance_(instance),
        cfg_(cfg),
        deadline_(Clock::now() + cfg.time_limit),
        store_(instance.size(), k, instance.capacity()),
        propagator_(instance, cfg.propagator_config(), engine) {}

  DecisionResult run() {
    DecisionResult result;
    auto start = Clock::now();
    try {
      result.status = dfs() ? DecisionStatus::kSolution : DecisionStatus::kInfeasible;
    } catch (const TimeoutSignal&) {
      result.status = DecisionStatus::kTimedOut;
    }
    stats_.solve_time =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    stats_.solved = result.status != DecisionStatus::kTimedOut;
    if (result.status == DecisionStatus::kSolution) {
      stats_.bins = store_.bin_count();
      result.assignment = solution_;
      result.loads = loads_;
    }
    result.stats = stats_;
    return result;
  }

 private:
  std::vector<Weight> committed_loads() const {
    std::vector<Weight> loads(store_.bin_count(), 0);
    for (std::size_t i = 0; i < instance_.size(); ++i) {
      if (store_.assigned(i)) loads[store_.first_bin(i)] += instance_.weight(i);
    }
    return loads;
  }

  enum class Dominance { kNone, kCommitted };

  // Applies at most one dominance commitment.
  Dominance apply_dominance() {
    if (!cfg_.dominance && !cfg_.single_fit_dominance) return Dominance::kNone;
    std::vector<Weight> committed = committed_loads();
    for (std::size_t j = 0; j < store_.bin_count(); ++j) {
      const Weight residual = store_.load_high(j) - committed[j];
      std::size_t exact = kNoItem;
      std::size_t heaviest = kNoItem;
      std::size_t fitting = 0;
      Weight smallest = 0;
      Weight second = 0;
      for (std::size_t i = 0; i < instance_.size(); ++i) {
        if (store_.assigned(i) || !store_.contains(i, j)) continue;
        const Weight w = instance_.weight(i);
        if (w > residual) continue;
        if (w == residual && exact == kNoItem) exact = i;
        if (heaviest == kNoItem || w > instance_.weight(heaviest)) heaviest = i;
        if (fitting == 0 || w < smallest) {
          second = smallest;
          smallest = w;
        } else if (fitting == 1 || w < second) {
          second = w;
        }
        ++fitting;
      }
      if (cfg_.dominance && exact != kNoItem) {
        store_.assign(exact, j);
        return Dominance::kCommitted;
      }
      if (cfg_.single_fit_dominance && fitting > 0 &&
          (fitting == 1 || smallest + second > residual)) {
        store_.assign(heaviest, j);
        return Dominance::kCommitted;
      }
    }
    return Dominance::kNone;
  }

  // Propagation and dominance to a common fixpoint.
  bool settle() {
    for (;;) {
      ++stats_.propagations;
      PropagationOutcome outcome = propagator_.propagate(store_);
      stats_.bound_calls += outcome.bound_calls;
      if (outcome.failed()) return false;
      if (apply_dominance() == Dominance::kNone) return true;
    }
  }

  std::size_t select_item() const {
    std::size_t best = kNoItem;
    for (std::size_t i = 0; i < instance_.size(); ++i) {
      if (store_.assigned(i)) continue;
      if (best == kNoItem || instance_.weight(i) > instance_.weight(best)) best = i;
    }
    return best;
  }

  // Smallest residual capacity that still holds the item; lowest index on ties.
  std::size_t best_fit(std::size_t item, const std::vector<Weight>& committed) const {
    const Weight w = instance_.weight(item);
    std::size_t best = kNoItem;
    Weight best_residual = 0;
    for (std::size_t j : store_.bins_of(item)) {
      const Weight residual = store_.load_high(j) - committed[j];
      if (residual < w) continue;
      if (best == kNoItem || residual < best_residual) {
        best = j;
        best_residual = residual;
      }
    }
    return best == kNoItem ? store_.first_bin(item) : best;
  }

  // Bins interchangeable with `bin`: same committed load, same load interval,
  // and the same membership in every unassigned item's domain.
  std::vector<std::size_t> equivalent_bins(std::size_t bin,
                                           const std::vector<Weight>& committed) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < store_.bin_count(); ++j) {
      if (j == bin || committed[j] != committed[bin] ||
          store_.load_low(j) != store_.load_low(bin) ||
          store_.load_high(j) != store_.load_high(bin)) {
        continue;
      }
      bool same = true;
      for (std::size_t i = 0; i < instance_.size() && same; ++i) {
        if (!store_.assigned(i) && store_.contains(i, j) != store_.contains(i, bin)) same = false;
      }
      if (same) out.push_back(j);
    }
    return out;
  }

  bool refute(std::size_t item, std::size_t bin, const std::vector<std::size_t>& equivalents) {
    std::vector<std::size_t> targets{item};
    if (cfg_.sym_break_same_size) {
      for (std::size_t i = 0; i < instance_.size(); ++i) {
        if (i != item && !store_.assigned(i) && instance_.weight(i) == instance_.weight(item)) {
          targets.push_back(i);
        }
      }
    }
    for (std::size_t t : targets) {
      if (!store_.remove(t, bin)) return false;
      for (std::size_t j : equivalents) {
        if (!store_.remove(t, j)) return false;
      }
    }
    return true;
  }

  bool dfs() {
    for (;;) {
      if (Clock::now() > deadline_) throw TimeoutSignal{};
      if (!settle()) return false;
      const std::size_t item = select_item();
      if (item == kNoItem) {
        record_solution();
        return true;
      }
      std::vector<Weight> committed = committed_loads();
      const std::size_t bin = best_fit(item, committed);
      std::vector<std::size_t> equivalents;
      if (cfg_.sym_break_equivalent_bins) equivalents = equivalent_bins(bin, committed);

      ++stats_.nodes;
      const std::size_t mark = store_.mark();
      store_.assign(item, bin);
      if (dfs()) return true;
      store_.undo(mark);
      ++stats_.fails;
      if (!refute(item, bin, equivalents)) return false;
    }
  }

  void record_solution() {
    solution_.resize(instance_.size());
    for (std::size_t i = 0; i < instance_.size(); ++i) solution_[i] = store_.first_bin(i);
    loads_ = committed_loads();
  }

  const Instance& instance_;
  const SearchConfig& cfg_;
  Clock::time_point deadline_;
  DomainStore store_;
  BinPackingPropagator propagator_;
  SearchStats stats_;
  std::vector<std::size_t> solution_;
  std::vector<Weight> loads_;
};

}  // namespace

void SearchConfig::validate() const {
  if (time_limit.count() <= 0) throw std::invalid_argument("time limit must be positive");
  if (workers == 0) throw std::invalid_argument("worker count must be positive");
  if (dff_order.empty()) throw std::invalid_argument("DFF order must not be empty");
}

PropagatorConfig SearchConfig::propagator_config() const {
  return PropagatorConfig{bound_mode, dff_order, knapsack};
}

SearchStats& SearchStats::operator+=(const SearchStats& other) {
  nodes += other.nodes;
  fails += other.fails;
  propagations += other.propagations;
  bound_calls += other.bound_calls;
  solve_time += other.solve_time;
  return *this;
}

DecisionResult solve_decision(const Instance& instance, std::size_t k, const SearchConfig& cfg,
                              ParallelBoundEngine* engine) {
  if (k == 0) throw std::invalid_argument("solve_decision needs k >= 1");
  cfg.validate();
  std::unique_ptr<ParallelBoundEngine> owned;
  if (cfg.bound_mode == BoundMode::kDffsPar && engine == nullptr) {
    owned = std::make_unique<ParallelBoundEngine>(cfg.workers);
    engine = owned.get();
  }
  return DecisionSearch(instance, k, cfg, engine).run();
}

std::uint64_t root_lower_bound(const Instance& instance, const SearchConfig& cfg,
                               ParallelBoundEngine* engine) {
  ReducedInstance red{instance.capacity(), instance.weights()};
  switch (cfg.bound_mode) {
    case BoundMode::kL2:
      return l2(red);
    case BoundMode::kDffsSeq:
      return lower_bound_seq(red, kNoBinLimit, cfg.dff_order).lb;
    case BoundMode::kDffsPar:
      if (engine != nullptr) return engine->lower_bound(red, kNoBinLimit, cfg.dff_order).lb;
      return lower_bound_par(red, kNoBinLimit, cfg.dff_order, cfg.workers).lb;
  }
  return 0;
}

MinimizeResult minimize(const Instance& instance, const SearchConfig& cfg) {
  cfg.validate();
  const auto start = Clock::now();
  std::unique_ptr<ParallelBoundEngine> engine;
  if (cfg.bound_mode == BoundMode::kDffsPar) {
    engine = std::make_unique<ParallelBoundEngine>(cfg.workers);
  }
  MinimizeResult result;
  result.first_k = std::max<std::size_t>(
      1, static_cast<std::size_t>(root_lower_bound(instance, cfg, engine.get())));
  for (std::size_t k = result.first_k; k <= instance.size(); ++k) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    SearchConfig attempt = cfg;
    attempt.time_limit = cfg.time_limit - elapsed;
    if (attempt.time_limit.count() <= 0) {
      result.timed_out = true;
      break;
    }
    DecisionResult decision = solve_decision(instance, k, attempt, engine.get());
    result.per_k.push_back(decision.stats);
    result.total += decision.stats;
    if (decision.status == DecisionStatus::kTimedOut) {
      result.timed_out = true;
      break;
    }
    if (decision.status == DecisionStatus::kSolution) {
      result.bins = k;
      result.assignment = std::move(decision.assignment);
      result.loads = std::move(decision.loads);
      break;
    }
  }
  result.total.solve_time =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  result.total.solved = result.bins.has_value();
  result.total.bins = result.bins;
  return result;
}

}  // namespace bpp
