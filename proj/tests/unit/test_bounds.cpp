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

#include "bpp/bounds.hpp"
#include "bpp/oracle.hpp"
#include "random_instances.hpp"

namespace bpp {
namespace {

using K = DffKind;

TEST_CASE("dff_value on hand-computed points") {
  CHECK(dff_value(K::kMT, 140, 150, 30) == 150);
  CHECK(dff_value(K::kMT, 75, 150, 30) == 75);
  CHECK(dff_value(K::kMT, 20, 150, 30) == 0);

  CHECK(dff_value(K::kCCM1, 6, 10, 3) == 4);
  CHECK(dff_value(K::kCCM1, 5, 10, 3) == 3);
  CHECK(dff_value(K::kCCM1, 4, 10, 3) == 2);

  CHECK(dff_value(K::kBJ1, 7, 10, 4) == 3);

  CHECK(dff_value(K::kFS1, 5, 10, 3) == 15);
  CHECK(dff_value(K::kFS1, 4, 10, 3) == 10);

  CHECK(dff_value(K::kVB2, 6, 10, 2) == 2);
  CHECK(dff_value(K::kVB2, 4, 10, 2) == 0);
}

TEST_CASE("dff_value maps 0 to 0 and agrees with the reference evaluation") {
  for (Weight c : {1, 2, 3, 7, 10, 31, 64, 150, 301}) {
    for (K kind : kAllDffs) {
      const LambdaRange range = lambda_range(kind, c);
      for (std::int64_t lambda = range.lo; lambda <= range.hi; ++lambda) {
        CHECK(dff_value(kind, 0, c, lambda) == 0);
        for (Weight w = 0; w <= c; ++w) {
          const auto expected = oracle::oracle_dff_value(kind, w, c, lambda);
          if (dff_value(kind, w, c, lambda) != static_cast<std::uint64_t>(expected)) {
            FAIL(dff_name(kind) << " c=" << c << " lambda=" << lambda << " w=" << w);
          }
        }
      }
    }
  }
}

TEST_CASE("lambda_range bounds") {
  CHECK(lambda_range(K::kRAD2, 150) == LambdaRange{38, 50});
  CHECK(lambda_range(K::kRAD2, 7) == LambdaRange{2, 2});
  CHECK(lambda_range(K::kRAD2, 4).empty());
  CHECK(lambda_range(K::kMT, 1) == LambdaRange{0, 0});
  CHECK(lambda_range(K::kMT, 150) == LambdaRange{0, 75});
  CHECK(lambda_range(K::kFS1, 150) == LambdaRange{1, 100});
  CHECK(lambda_range(K::kCCM1, 150) == LambdaRange{1, 75});
  CHECK(lambda_range(K::kVB2, 150) == LambdaRange{2, 150});
  CHECK(lambda_range(K::kBJ1, 150) == LambdaRange{1, 150});
}

TEST_CASE("every lambda of a range satisfies the defining inequalities") {
  for (Weight c = 1; c <= 200; ++c) {
    for (K kind : kAllDffs) {
      const LambdaRange range = lambda_range(kind, c);
      for (std::int64_t lambda = range.lo; lambda <= range.hi; ++lambda) {
        CHECK(oracle::oracle_lambda_valid(kind, c, lambda));
      }
      // The range is maximal: its neighbours are invalid.
      if (!range.empty()) {
        CHECK_FALSE(oracle::oracle_lambda_valid(kind, c, range.lo - 1));
        if (kind != K::kFS1) CHECK_FALSE(oracle::oracle_lambda_valid(kind, c, range.hi + 1));
      }
    }
  }
}

TEST_CASE("VB2 range is capped so that the bound sum fits in 64 bits") {
  ReducedInstance red{100000, std::vector<Weight>(200, 30000)};
  const LambdaRange range = lambda_range(K::kVB2, red);
  CHECK(range.hi == 100000);
  ReducedInstance huge{4'000'000'000'000LL, std::vector<Weight>(1000, 3'000'000'000'000LL)};
  const LambdaRange capped = lambda_range(K::kVB2, huge);
  CHECK(capped.hi < huge.capacity);
  CHECK(static_cast<unsigned __int128>(capped.hi) * 1000 * 3'000'000'000'000ULL <=
        std::numeric_limits<std::uint64_t>::max());
  CHECK(dff_bound(K::kVB2, huge, capped.hi) ==
        static_cast<std::uint64_t>(oracle::oracle_dff_bound(K::kVB2, huge, capped.hi)));
}

TEST_CASE("l1") {
  CHECK(l1({9, {4, 4, 3, 3, 2, 2}}) == 2);
  CHECK(l1({9, {}}) == 0);
  CHECK(l1({10, {6, 6, 6}}) == 2);
}

TEST_CASE("l2") {
  CHECK(l2({10, {6, 6, 6}}) == 3);
  CHECK(l2_at({10, {6, 6, 6}}, 4) == 3);
  const L2Partition p = l2_partition({10, {6, 6, 6}}, 4);
  CHECK(p.w1.empty());
  CHECK(p.w2.size() == 3);
  CHECK(p.w3.empty());
  CHECK(l2({10, {6, 6, 4, 4, 2}}) == 3);
  CHECK(l2_at({10, {6, 6, 4, 4, 2}}, 2) == 3);
  CHECK(l2({10, {10}}) == 1);
  CHECK(l2({10, {}}) == 0);
}

TEST_CASE("dff_bound") {
  const ReducedInstance six{10, {6, 6, 6}};
  CHECK(dff_bound(K::kMT, six, 4) == 2);
  CHECK(dff_bound(K::kMT, six, 5) == 3);
  CHECK(dff_bound(K::kFS1, {10, {5, 5}}, 3) == 1);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const ReducedInstance red = testing::random_reduced(rng, 20, 120);
    CHECK(dff_bound(K::kMT, red, 0) == l1(red));
    for (K kind : kAllDffs) {
      const LambdaRange range = lambda_range(kind, red);
      for (std::int64_t lambda = range.lo; lambda <= range.hi; ++lambda) {
        REQUIRE(dff_bound(kind, red, lambda) ==
                static_cast<std::uint64_t>(oracle::oracle_dff_bound(kind, red, lambda)));
      }
    }
  }
}

TEST_CASE("dual feasibility: a feasible bin never exceeds f(c)") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 3000; ++trial) {
    const Weight c = std::uniform_int_distribution<Weight>(1, 400)(rng);
    std::vector<Weight> items;
    Weight room = c;
    while (room > 0 && std::uniform_int_distribution<int>(0, 5)(rng) != 0) {
      const Weight w = std::uniform_int_distribution<Weight>(1, room)(rng);
      items.push_back(w);
      room -= w;
    }
    for (K kind : kAllDffs) {
      const LambdaRange range = lambda_range(kind, c);
      if (range.empty()) continue;
      const std::int64_t lambda =
          std::uniform_int_distribution<std::int64_t>(range.lo, range.hi)(rng);
      std::uint64_t sum = 0;
      for (Weight w : items) sum += dff_value(kind, w, c, lambda);
      REQUIRE(sum <= dff_value(kind, c, c, lambda));
    }
  }
}

TEST_CASE("the restricted L2 sweep equals the full sweep and bounds the MT bound") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const ReducedInstance red = testing::random_reduced(rng, 40, 150);
    const std::uint64_t full = l2_full_sweep(red);
    CHECK(l2(red) == full);
    const std::uint64_t mt = dff_lower_bound(K::kMT, red);
    CHECK(mt <= full);
    // With integer lambda the two coincide only for even capacities.
    if (red.capacity % 2 == 0) CHECK(mt == full);
  }
}

TEST_CASE("odd capacities separate the MT bound from L2") {
  // Items of weight (c + 1) / 2 need a bin each, which L2 counts, but no
  // integer lambda <= c / 2 lets f_MT raise them to c.
  const ReducedInstance red{3, {2, 2, 2}};
  CHECK(l2(red) == 3);
  CHECK(dff_lower_bound(K::kMT, red) == 2);
  CHECK(oracle::oracle_optimum(Instance(3, {2, 2, 2})).optimum == 3);
}

TEST_CASE("lower_bound_seq") {
  const ReducedInstance six{10, {6, 6, 6}};
  BoundResult early = lower_bound_seq(six, 1);
  CHECK(early.exceeded_k);
  CHECK(early.lb >= 2);
  CHECK(early.per_dff[dff_index(K::kMT)].has_value());
  CHECK_FALSE(early.per_dff[dff_index(K::kRAD2)].has_value());

  BoundResult full = lower_bound_seq(six, 3);
  CHECK_FALSE(full.exceeded_k);
  CHECK(full.lb == 3);

  BoundResult empty = lower_bound_seq({10, {}}, 0);
  CHECK(empty.lb == 0);
  CHECK_FALSE(empty.exceeded_k);

  const std::array<K, 1> only_vb2 = {K::kVB2};
  CHECK(lower_bound_seq(six, kNoBinLimit, only_vb2).per_dff[dff_index(K::kMT)] == std::nullopt);
}

TEST_CASE("lower_bound_seq equals the per-kind maxima of the reference grid") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 150; ++trial) {
    const ReducedInstance red = testing::random_reduced(rng, 15, 90);
    const BoundResult result = lower_bound_seq(red, kNoBinLimit);
    std::uint64_t best = 0;
    for (K kind : kAllDffs) {
      const std::uint64_t expected = oracle::oracle_lb_grid(kind, red);
      CHECK(result.per_dff[dff_index(kind)] == expected);
      CHECK(dff_lower_bound(kind, red) == expected);
      best = std::max(best, expected);
    }
    CHECK(result.lb == best);
    CHECK(result.lb >= l1(red));
  }
}

TEST_CASE("dff names") {
  for (K kind : kAllDffs) CHECK(parse_dff_name(dff_name(kind)) == kind);
  CHECK(parse_dff_name("vb2") == K::kVB2);
  CHECK_FALSE(parse_dff_name("L3").has_value());
  CHECK(parse_dff_order("BJ1,mt") == std::vector<K>{K::kBJ1, K::kMT});
  CHECK_THROWS(parse_dff_order("MT,MT"));
  CHECK_THROWS(parse_dff_order("MT,XX"));
}

}  // namespace
}  // namespace bpp
