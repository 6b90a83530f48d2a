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

#include <atomic>
#include <random>

#include "bpp/parallel.hpp"
#include "random_instances.hpp"

namespace bpp {
namespace {

std::uint64_t total_lambdas(const ReducedInstance& red) {
  std::uint64_t total = 0;
  for (DffKind kind : kAllDffs) total += lambda_range(kind, red).size();
  return total;
}

TEST_CASE("WorkerPool runs every unit exactly once") {
  for (std::size_t workers : {1, 2, 5}) {
    WorkerPool pool(workers);
    CHECK(pool.size() == workers);
    for (std::size_t units : {0, 1, 7, 1000}) {
      std::vector<std::atomic<int>> hits(units);
      pool.run(units, [&](std::size_t i) { hits[i].fetch_add(1); });
      for (auto& h : hits) CHECK(h.load() == 1);
    }
  }
}

TEST_CASE("SharedMax keeps the maximum under contention") {
  SharedMax shared;
  WorkerPool pool(4);
  pool.run(10000, [&](std::size_t i) { shared.fold((i * 7919) % 10007); });
  std::uint64_t expected = 0;
  for (std::size_t i = 0; i < 10000; ++i) expected = std::max<std::uint64_t>(expected, (i * 7919) % 10007);
  CHECK(shared.value() == expected);
}

TEST_CASE("parallel engine on the three sixes") {
  const ReducedInstance six{10, {6, 6, 6}};
  ParallelBoundEngine engine(8);
  BoundResult done = engine.lower_bound(six, 3);
  CHECK(done.lb == 3);
  CHECK_FALSE(done.exceeded_k);
  CHECK(done.lb == lower_bound_seq(six, 3).lb);

  BoundResult early = engine.lower_bound(six, 1);
  CHECK(early.exceeded_k);
  CHECK(early.lb > 1);
}

TEST_CASE("a single worker reproduces the sequential engine run to completion") {
  std::mt19937_64 rng(21);
  ParallelBoundEngine engine(1);
  for (int trial = 0; trial < 100; ++trial) {
    const ReducedInstance red = testing::random_reduced(rng, 25, 300);
    const BoundResult seq = lower_bound_seq(red, kNoBinLimit);
    const BoundResult par = engine.lower_bound(red, kNoBinLimit);
    CHECK(par.lb == seq.lb);
    CHECK(par.per_dff == seq.per_dff);
    CHECK(par.evaluations == seq.evaluations);
  }
}

TEST_CASE("without cancellation no lambda is lost") {
  std::mt19937_64 rng(22);
  ParallelBoundEngine engine(4);
  for (int trial = 0; trial < 50; ++trial) {
    const ReducedInstance red = testing::random_reduced(rng, 25, 2000);
    const BoundResult par = engine.lower_bound(red, 0, kAllDffs, /*cancellation=*/false);
    CHECK(par.evaluations == total_lambdas(red));
    CHECK(par.lb == lower_bound_seq(red, kNoBinLimit).lb);
  }
}

TEST_CASE("parallel and sequential engines agree on the decision") {
  std::mt19937_64 rng(23);
  for (std::size_t workers : {2, 3, 8}) {
    ParallelBoundEngine engine(workers);
    for (int trial = 0; trial < 150; ++trial) {
      const ReducedInstance red = testing::random_reduced(rng, 30, 1000);
      const std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(0, red.weights.size())(rng);
      const BoundResult seq = lower_bound_seq(red, k);
      const BoundResult par = engine.lower_bound(red, k);
      REQUIRE(par.exceeded_k == seq.exceeded_k);
      if (!seq.exceeded_k) {
        CHECK(par.lb == seq.lb);
      } else {
        CHECK(par.lb > k);
      }
      // A subset of kinds in a custom order.
      const std::array<DffKind, 2> kinds = {DffKind::kBJ1, DffKind::kRAD2};
      CHECK(engine.lower_bound(red, k, kinds).exceeded_k == lower_bound_seq(red, k, kinds).exceeded_k);
    }
  }
}

TEST_CASE("lower_bound_par handles an empty instance") {
  const BoundResult r = lower_bound_par({10, {}}, 0, kAllDffs, 3);
  CHECK(r.lb == 0);
  CHECK_FALSE(r.exceeded_k);
  CHECK(default_worker_count() >= 1);
}

}  // namespace
}  // namespace bpp
