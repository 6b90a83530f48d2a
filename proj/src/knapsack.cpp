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

#include "bpp/knapsack.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

namespace bpp {

namespace {

constexpr std::size_t kBits = 64;

std::size_t word_count(Weight cap) { return static_cast<std::size_t>(cap) / kBits + 1; }

}  // namespace

SumBitset::SumBitset(Weight cap) : cap_(std::max<Weight>(cap, 0)), words_(word_count(cap_), 0) {}

SumBitset SumBitset::subset_sums(std::span<const Weight> items, Weight cap) {
  SumBitset sums(cap);
  sums.set(0);
  for (Weight w : items) sums.add_item(w);
  return sums;
}

bool SumBitset::test(Weight value) const {
  if (value < 0 || value > cap_) return false;
  auto v = static_cast<std::size_t>(value);
  return (words_[v / kBits] >> (v % kBits)) & 1U;
}

void SumBitset::set(Weight value) {
  if (value < 0 || value > cap_) return;
  auto v = static_cast<std::size_t>(value);
  words_[v / kBits] |= std::uint64_t{1} << (v % kBits);
}

void SumBitset::clear_tail() {
  std::size_t used = static_cast<std::size_t>(cap_) % kBits + 1;
  if (used < kBits) words_.back() &= (std::uint64_t{1} << used) - 1;
}

void SumBitset::add_item(Weight shift) {
  if (shift <= 0 || shift > cap_) return;
  const std::size_t ws = static_cast<std::size_t>(shift) / kBits;
  const std::size_t bs = static_cast<std::size_t>(shift) % kBits;
  // Descending so that every source word is read before it is updated.
  for (std::size_t i = words_.size(); i-- > ws;) {
    std::uint64_t v = words_[i - ws] << bs;
    if (bs != 0 && i > ws) v |= words_[i - ws - 1] >> (kBits - bs);
    words_[i] |= v;
  }
  clear_tail();
}

SumBitset SumBitset::shifted(Weight offset, Weight new_cap) const {
  SumBitset out(new_cap);
  if (offset < 0) return out;
  const std::size_t ws = static_cast<std::size_t>(offset) / kBits;
  const std::size_t bs = static_cast<std::size_t>(offset) % kBits;
  for (std::size_t i = ws; i < out.words_.size(); ++i) {
    std::uint64_t v = 0;
    if (i - ws < words_.size()) v = words_[i - ws] << bs;
    if (bs != 0 && i > ws && i - ws - 1 < words_.size()) v |= words_[i - ws - 1] >> (kBits - bs);
    out.words_[i] = v;
  }
  out.clear_tail();
  return out;
}

std::optional<Weight> SumBitset::min_in(Weight lo, Weight hi) const {
  lo = std::max<Weight>(lo, 0);
  hi = std::min(hi, cap_);
  if (lo > hi) return std::nullopt;
  auto l = static_cast<std::size_t>(lo);
  auto h = static_cast<std::size_t>(hi);
  for (std::size_t w = l / kBits; w <= h / kBits; ++w) {
    std::uint64_t word = words_[w];
    if (w == l / kBits) word &= ~std::uint64_t{0} << (l % kBits);
    if (w == h / kBits && h % kBits != kBits - 1) word &= (std::uint64_t{1} << (h % kBits + 1)) - 1;
    if (word != 0) return static_cast<Weight>(w * kBits + std::countr_zero(word));
  }
  return std::nullopt;
}

std::optional<Weight> SumBitset::max_in(Weight lo, Weight hi) const {
  lo = std::max<Weight>(lo, 0);
  hi = std::min(hi, cap_);
  if (lo > hi) return std::nullopt;
  auto l = static_cast<std::size_t>(lo);
  auto h = static_cast<std::size_t>(hi);
  for (std::size_t w = h / kBits + 1; w-- > l / kBits;) {
    std::uint64_t word = words_[w];
    if (w == l / kBits) word &= ~std::uint64_t{0} << (l % kBits);
    if (w == h / kBits && h % kBits != kBits - 1) word &= (std::uint64_t{1} << (h % kBits + 1)) - 1;
    if (word != 0) return static_cast<Weight>(w * kBits + kBits - 1 - std::countl_zero(word));
  }
  return std::nullopt;
}

bool SumBitset::any_in(Weight lo, Weight hi) const { return min_in(lo, hi).has_value(); }

std::size_t SumBitset::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Weight> SumBitset::values() const {
  std::vector<Weight> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      out.push_back(static_cast<Weight>(w * kBits + std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

SumReasoner::Support SumReasoner::support(std::span<const Weight> others, Weight item,
                                          Weight lo, Weight hi) const {
  return {window(others, lo - item, hi - item).has_value(),
          window(others, lo, hi).has_value()};
}

std::optional<SumWindow> ExactSumReasoner::window(std::span<const Weight> items, Weight lo,
                                                  Weight hi) const {
  lo = std::max<Weight>(lo, 0);
  if (hi < lo) return std::nullopt;
  SumBitset sums = SumBitset::subset_sums(items, hi);
  auto first = sums.min_in(lo, hi);
  if (!first) return std::nullopt;
  return SumWindow{*first, *sums.max_in(lo, hi)};
}

std::vector<SumReasoner::Support> SumReasoner::supports(std::span<const Weight> items,
                                                       Weight lo, Weight hi) const {
  // Same weight means the same multiset of others, hence the same answer.
  std::vector<Weight> sorted(items.begin(), items.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::map<Weight, Support> by_weight;
  std::vector<Support> out;
  out.reserve(items.size());
  std::vector<Weight> others;
  for (Weight w : items) {
    auto it = by_weight.find(w);
    if (it == by_weight.end()) {
      others = sorted;
      others.erase(std::find(others.begin(), others.end(), w));
      it = by_weight.emplace(w, support(others, w, lo, hi)).first;
    }
    out.push_back(it->second);
  }
  return out;
}

namespace {

struct WeightGroup {
  Weight weight;
  std::size_t count;
};

// Fills answers[g] for groups [first, last); `outside` holds the subset sums
// of every item not in those groups.
void leave_one_out(const std::vector<WeightGroup>& groups, std::size_t first, std::size_t last,
                   const SumBitset& outside, Weight lo, Weight hi,
                   std::vector<SumReasoner::Support>& answers) {
  if (last - first == 1) {
    const WeightGroup& g = groups[first];
    SumBitset others = outside;
    for (std::size_t copy = 1; copy < g.count; ++copy) others.add_item(g.weight);
    answers[first] = {others.any_in(lo - g.weight, hi - g.weight), others.any_in(lo, hi)};
    return;
  }
  const std::size_t mid = first + (last - first) / 2;
  SumBitset left = outside;
  for (std::size_t g = mid; g < last; ++g) {
    for (std::size_t copy = 0; copy < groups[g].count; ++copy) left.add_item(groups[g].weight);
  }
  leave_one_out(groups, first, mid, left, lo, hi, answers);
  SumBitset right = outside;
  for (std::size_t g = first; g < mid; ++g) {
    for (std::size_t copy = 0; copy < groups[g].count; ++copy) right.add_item(groups[g].weight);
  }
  leave_one_out(groups, mid, last, right, lo, hi, answers);
}

}  // namespace

std::vector<SumReasoner::Support> ExactSumReasoner::supports(std::span<const Weight> items,
                                                             Weight lo, Weight hi) const {
  lo = std::max<Weight>(lo, 0);
  if (items.empty()) return {};
  if (hi < lo) return std::vector<Support>(items.size(), Support{false, false});
  std::vector<WeightGroup> groups;
  {
    std::vector<Weight> sorted(items.begin(), items.end());
    std::sort(sorted.begin(), sorted.end());
    for (Weight w : sorted) {
      if (!groups.empty() && groups.back().weight == w) {
        ++groups.back().count;
      } else {
        groups.push_back({w, 1});
      }
    }
  }
  SumBitset none(hi);
  none.set(0);
  std::vector<Support> by_group(groups.size());
  leave_one_out(groups, 0, groups.size(), none, lo, hi, by_group);
  std::vector<Support> out;
  out.reserve(items.size());
  for (Weight w : items) {
    auto it = std::lower_bound(groups.begin(), groups.end(), w,
                               [](const WeightGroup& g, Weight x) { return g.weight < x; });
    out.push_back(by_group[static_cast<std::size_t>(it - groups.begin())]);
  }
  return out;
}

SumReasoner::Support ExactSumReasoner::support(std::span<const Weight> others, Weight item,
                                               Weight lo, Weight hi) const {
  lo = std::max<Weight>(lo, 0);
  if (hi < lo) return {false, false};
  SumBitset sums = SumBitset::subset_sums(others, hi);
  return {sums.any_in(lo - item, hi - item), sums.any_in(lo, hi)};
}

NoSumResult no_sum(std::span<const Weight> items, Weight alpha, Weight beta) {
  const Weight total = std::accumulate(items.begin(), items.end(), Weight{0});
  if (alpha <= 0 || beta >= total) return {false, 0, 0};
  // items[last - t] walks the light end, items[t] the heavy end.
  const std::ptrdiff_t last = static_cast<std::ptrdiff_t>(items.size()) - 1;
  auto at = [&](std::ptrdiff_t i) { return items[static_cast<std::size_t>(i)]; };
  Weight sum_a = 0;
  Weight sum_b = 0;
  Weight sum_c = 0;
  std::ptrdiff_t k = 0;
  std::ptrdiff_t k_light = 0;
  while (sum_c + at(last - k_light) < alpha) {
    sum_c += at(last - k_light);
    ++k_light;
  }
  sum_b = at(last - k_light);
  while (sum_a < alpha && sum_b <= beta) {
    sum_a += at(k);
    ++k;
    if (sum_a < alpha) {
      --k_light;
      sum_b += at(last - k_light);
      sum_c -= at(last - k_light);
      while (sum_a + sum_c >= alpha) {
        --k_light;
        sum_c -= at(last - k_light);
        sum_b += at(last - k_light) - at(last - k_light - k - 1);
      }
    }
  }
  return {sum_a < alpha, sum_a + sum_c, sum_b};
}

std::optional<SumWindow> NoSumReasoner::window(std::span<const Weight> items, Weight lo,
                                               Weight hi) const {
  const Weight total = std::accumulate(items.begin(), items.end(), Weight{0});
  lo = std::max<Weight>(lo, 0);
  hi = std::min(hi, total);
  if (hi < lo) return std::nullopt;
  std::vector<Weight> sorted(items.begin(), items.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (no_sum(sorted, lo, hi).no_sum) return std::nullopt;
  SumWindow out{lo, hi};
  if (NoSumResult r = no_sum(sorted, lo, lo); r.no_sum) out.lo = r.above;
  if (NoSumResult r = no_sum(sorted, hi, hi); r.no_sum) out.hi = r.below;
  return out;
}

std::unique_ptr<SumReasoner> make_sum_reasoner(KnapsackMode mode) {
  if (mode == KnapsackMode::kNoSum) return std::make_unique<NoSumReasoner>();
  return std::make_unique<ExactSumReasoner>();
}

}  // namespace bpp
