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

#include "bpp/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bpp::oracle {

namespace {

using U128 = unsigned __int128;
using I128 = __int128;

struct Optimizer {
  const std::vector<Weight>& weights;  // sorted non-increasing
  Weight capacity;
  std::vector<Weight> loads;
  std::vector<std::size_t> current;
  std::size_t best;
  std::vector<std::size_t> best_assignment;

  void search(std::size_t item, std::size_t open) {
    if (open >= best) return;
    if (item == weights.size()) {
      best = open;
      best_assignment = current;
      return;
    }
    // Existing bins, then at most one new bin.
    for (std::size_t b = 0; b <= open && b < weights.size(); ++b) {
      if (loads[b] + weights[item] > capacity) continue;
      loads[b] += weights[item];
      current[item] = b;
      search(item + 1, std::max(open, b + 1));
      loads[b] -= weights[item];
    }
  }
};

U128 ceil_div(U128 a, U128 b) { return (a + b - 1) / b; }

}  // namespace

OracleResult oracle_optimum(const Instance& instance) {
  if (instance.size() > kMaxOptimumItems) {
    throw std::invalid_argument("oracle_optimum: too many items");
  }
  std::vector<std::size_t> order(instance.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return instance.weight(a) > instance.weight(b);
  });
  std::vector<Weight> sorted;
  for (std::size_t i : order) sorted.push_back(instance.weight(i));

  Optimizer opt{sorted, instance.capacity(), std::vector<Weight>(sorted.size(), 0),
                std::vector<std::size_t>(sorted.size(), 0), sorted.size() + 1, {}};
  opt.search(0, 0);

  OracleResult result;
  result.optimum = opt.best;
  result.witness.resize(instance.size());
  for (std::size_t t = 0; t < order.size(); ++t) result.witness[order[t]] = opt.best_assignment[t];
  return result;
}

std::vector<Weight> oracle_subset_sums(const std::vector<Weight>& weights, Weight cap) {
  if (weights.size() > kMaxSubsetItems) {
    throw std::invalid_argument("oracle_subset_sums: too many items");
  }
  std::vector<Weight> sums;
  const std::uint64_t subsets = std::uint64_t{1} << weights.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Weight s = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (mask >> i & 1U) s += weights[i];
    }
    if (s <= cap) sums.push_back(s);
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

bool oracle_lambda_valid(DffKind kind, Weight capacity, std::int64_t lambda) {
  const I128 c = capacity;
  const I128 l = lambda;
  switch (kind) {
    case DffKind::kMT: return 0 <= l && 2 * l <= c;
    case DffKind::kRAD2: return c < 4 * l && 3 * l <= c;
    case DffKind::kFS1: return 1 <= l && l <= 100;
    case DffKind::kCCM1: return 1 <= l && 2 * l <= c;
    case DffKind::kVB2: return 2 <= l && l <= c;
    case DffKind::kBJ1: return 1 <= l && l <= c;
  }
  return false;
}

U128 oracle_dff_value(DffKind kind, Weight weight, Weight capacity, std::int64_t lambda) {
  const I128 w = weight;
  const I128 c = capacity;
  const I128 l = lambda;
  switch (kind) {
    case DffKind::kMT:
      if (w > c - l) return static_cast<U128>(c);
      if (w >= l) return static_cast<U128>(w);
      return 0;
    case DffKind::kRAD2:
      if (w < l) return 0;
      if (w <= c - 2 * l) return static_cast<U128>(c / 3);
      if (w < 2 * l) return static_cast<U128>(c / 2);
      return static_cast<U128>(c) - oracle_dff_value(kind, capacity - weight, capacity, lambda);
    case DffKind::kFS1: {
      const I128 scaled = w * (l + 1);
      if (scaled % c == 0) return static_cast<U128>(w * l);
      return static_cast<U128>((scaled / c) * c);
    }
    case DffKind::kCCM1:
      if (2 * w > c) return static_cast<U128>(2 * (c / l) - 2 * ((c - w) / l));
      if (2 * w == c) return static_cast<U128>(c / l);
      return static_cast<U128>(2 * (w / l));
    case DffKind::kVB2: {
      auto step = [&](I128 x) -> I128 {
        I128 v = (x * l + c - 1) / c - 1;
        return v > 0 ? v : 0;
      };
      if (2 * w > c) return static_cast<U128>(2 * step(c) - 2 * step(c - w));
      if (2 * w == c) return static_cast<U128>(step(c));
      return static_cast<U128>(2 * step(w));
    }
    case DffKind::kBJ1: {
      const I128 base = (w / l) * (l - c % l);
      if (w % l <= c % l) return static_cast<U128>(base);
      return static_cast<U128>(base + w % l - c % l);
    }
  }
  return 0;
}

U128 oracle_dff_bound(DffKind kind, const ReducedInstance& red, std::int64_t lambda) {
  const U128 fc = oracle_dff_value(kind, red.capacity, red.capacity, lambda);
  if (fc == 0) return 0;
  U128 sum = 0;
  for (Weight w : red.weights) sum += oracle_dff_value(kind, w, red.capacity, lambda);
  return ceil_div(sum, fc);
}

std::uint64_t oracle_lb_grid(DffKind kind, const ReducedInstance& red) {
  if (red.weights.empty()) return 0;
  U128 best = 0;
  const std::int64_t top = std::max<std::int64_t>(red.capacity, 100);
  for (std::int64_t lambda = 0; lambda <= top; ++lambda) {
    if (!oracle_lambda_valid(kind, red.capacity, lambda)) continue;
    best = std::max(best, oracle_dff_bound(kind, red, lambda));
  }
  return static_cast<std::uint64_t>(best);
}

void for_each_packing(const Instance& instance, std::size_t k,
                      const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> assignment(instance.size(), 0);
  std::vector<Weight> loads(k, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t item) {
    if (item == instance.size()) {
      visit(assignment);
      return;
    }
    for (std::size_t b = 0; b < k; ++b) {
      if (loads[b] + instance.weight(item) > instance.capacity()) continue;
      loads[b] += instance.weight(item);
      assignment[item] = b;
      rec(item + 1);
      loads[b] -= instance.weight(item);
    }
  };
  rec(0);
}

}  // namespace bpp::oracle
