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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bpp/oracle.hpp"
#include "bpp/search.hpp"
#include "random_instances.hpp"

namespace bpp {
namespace {

void check_packing(const Instance& inst, std::size_t bins, const std::vector<std::size_t>& a,
                   const std::vector<Weight>& loads) {
  REQUIRE(a.size() == inst.size());
  REQUIRE(loads.size() == bins);
  std::vector<Weight> sums(bins, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i] < bins);
    sums[a[i]] += inst.weight(i);
  }
  CHECK(sums == loads);
  for (Weight s : sums) CHECK(s <= inst.capacity());
}

SearchConfig config_with(bool dominance, bool symmetry, BoundMode mode = BoundMode::kDffsSeq) {
  SearchConfig cfg;
  cfg.bound_mode = mode;
  cfg.dominance = cfg.single_fit_dominance = dominance;
  cfg.sym_break_same_size = cfg.sym_break_equivalent_bins = symmetry;
  return cfg;
}

TEST_CASE("decision examples") {
  const Instance six_items(9, {4, 4, 3, 3, 2, 2});
  DecisionResult yes = solve_decision(six_items, 2, {});
  REQUIRE(yes.status == DecisionStatus::kSolution);
  CHECK(yes.loads == std::vector<Weight>{9, 9});
  check_packing(six_items, 2, yes.assignment, yes.loads);

  CHECK(solve_decision(Instance(10, {6, 6, 6}), 2, {}).status == DecisionStatus::kInfeasible);

  DecisionResult single = solve_decision(Instance(7, {7}), 1, {});
  CHECK(single.status == DecisionStatus::kSolution);
  CHECK(single.stats.nodes <= 1);
}

TEST_CASE("minimize examples") {
  CHECK(minimize(Instance(9, {4, 4, 3, 3, 2, 2}), {}).bins == 2);

  const MinimizeResult full = minimize(Instance(5, {5, 5, 5}), {});
  CHECK(full.bins == 3);
  CHECK(full.total.fails == 0);

  SearchConfig l1_only = config_with(true, true, BoundMode::kL2);
  const MinimizeResult six = minimize(Instance(10, {6, 6, 6}), l1_only);
  CHECK(six.bins == 3);
  CHECK(six.first_k <= 3);
  CHECK(six.per_k.size() == 3 - six.first_k + 1);
  CHECK(root_lower_bound(Instance(10, {6, 6, 6}), {}) == 3);
}

TEST_CASE("minimize matches the exhaustive optimum under every rule combination") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 120; ++trial) {
    const Instance inst = testing::random_instance(rng, 10, 5, 40);
    const auto expected = oracle::oracle_optimum(inst).optimum;
    for (bool dominance : {true, false}) {
      for (bool symmetry : {true, false}) {
        SearchConfig cfg = config_with(dominance, symmetry, static_cast<BoundMode>(trial % 2));
        const MinimizeResult r = minimize(inst, cfg);
        REQUIRE(r.bins == expected);
        check_packing(inst, *r.bins, r.assignment, r.loads);
        CHECK(r.total.fails <= r.total.nodes);
      }
    }
  }
}

TEST_CASE("the NoSum knapsack reasoner keeps minimize exact") {
  std::mt19937_64 rng(52);
  SearchConfig cfg;
  cfg.knapsack = KnapsackMode::kNoSum;
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = testing::random_instance(rng, 10, 5, 40);
    CHECK(minimize(inst, cfg).bins == oracle::oracle_optimum(inst).optimum);
  }
}

TEST_CASE("search is deterministic, also with the parallel engine") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance inst = testing::random_instance(rng, 25, 50, 200);
    SearchConfig cfg = config_with(true, true, BoundMode::kDffsPar);
    cfg.workers = 4;
    const MinimizeResult a = minimize(inst, cfg);
    const MinimizeResult b = minimize(inst, cfg);
    SearchConfig seq = cfg;
    seq.bound_mode = BoundMode::kDffsSeq;
    const MinimizeResult c = minimize(inst, seq);
    CHECK(a.bins == b.bins);
    CHECK(a.total.nodes == b.total.nodes);
    CHECK(a.assignment == b.assignment);
    CHECK(a.bins == c.bins);
    CHECK(a.total.nodes == c.total.nodes);
  }
}

TEST_CASE("disabling symmetry breaking on equal items does not save nodes") {
  const Instance inst(10, {4, 4, 4, 4, 4, 4});
  const MinimizeResult on = minimize(inst, {});
  const MinimizeResult off = minimize(inst, config_with(true, false));
  CHECK(on.bins == off.bins);
  CHECK(off.total.nodes >= on.total.nodes);
}

TEST_CASE("the time limit stops the search") {
  // Many medium items with an empty bound gap are slow to refute.
  WeibullSpec spec{150, 2.0, 1000.0, 1.4, 5};
  SearchConfig cfg;
  cfg.time_limit = std::chrono::milliseconds(1);
  cfg.bound_mode = BoundMode::kL2;
  const Instance inst = generate_weibull(spec);
  const MinimizeResult r = minimize(inst, cfg);
  if (r.timed_out) {
    CHECK_FALSE(r.bins.has_value());
  } else {
    check_packing(inst, *r.bins, r.assignment, r.loads);
  }
  CHECK(r.total.solve_time.count() < 1000);
}

TEST_CASE("SearchConfig::validate") {
  SearchConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.time_limit = std::chrono::milliseconds(0);
  CHECK_THROWS(cfg.validate());
  cfg = {};
  cfg.workers = 0;
  CHECK_THROWS(cfg.validate());
  cfg = {};
  cfg.dff_order.clear();
  CHECK_THROWS(cfg.validate());
  CHECK_THROWS(solve_decision(Instance(10, {5}), 0, {}));
}

}  // namespace
}  // namespace bpp
