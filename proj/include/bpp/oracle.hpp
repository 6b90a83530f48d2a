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
#include <functional>
#include <vector>

#include "bpp/bounds.hpp"
#include "bpp/instance.hpp"

// Brute-force references for tests. Nothing here calls into the bounds,
// propagator or search code; DFFs are re-derived from their definitions
// in 128-bit arithmetic.
namespace bpp::oracle {

struct OracleResult {
  std::size_t optimum = 0;
  std::vector<std::size_t> witness;  // bin of each item, bins numbered from 0
};

inline constexpr std::size_t kMaxOptimumItems = 14;
inline constexpr std::size_t kMaxSubsetItems = 20;

// Exact optimum by enumeration with canonical bin opening. Throws
// std::invalid_argument for more than kMaxOptimumItems items.
OracleResult oracle_optimum(const Instance& instance);

// Every subset sum <= cap, ascending. Throws for more than kMaxSubsetItems.
std::vector<Weight> oracle_subset_sums(const std::vector<Weight>& weights, Weight cap);

// Whether lambda satisfies the DFF's parameter condition for capacity c,
// tested directly on the defining inequalities.
bool oracle_lambda_valid(DffKind kind, Weight capacity, std::int64_t lambda);

unsigned __int128 oracle_dff_value(DffKind kind, Weight w, Weight capacity, std::int64_t lambda);

// ceil(sum f / f(c)) for one lambda, 0 when f(c) is 0.
unsigned __int128 oracle_dff_bound(DffKind kind, const ReducedInstance& red,
                                   std::int64_t lambda);

// Max of oracle_dff_bound over every valid lambda in [0, c] (FS1: [1, 100]).
std::uint64_t oracle_lb_grid(DffKind kind, const ReducedInstance& red);

// Calls visit(assignment) for every map of items to k bins whose loads stay
// within capacity.
void for_each_packing(const Instance& instance, std::size_t k,
                      const std::function<void(const std::vector<std::size_t>&)>& visit);

}  // namespace bpp::oracle
