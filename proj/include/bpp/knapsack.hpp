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
#include <optional>
#include <span>
#include <vector>

#include "bpp/instance.hpp"

namespace bpp {

// Set of achievable sums over [0, cap], one bit per value.
class SumBitset {
 public:
  explicit SumBitset(Weight cap);

  // {sum(S) : S subset of items, sum(S) <= cap}
  static SumBitset subset_sums(std::span<const Weight> items, Weight cap);

  Weight cap() const { return cap_; }
  bool test(Weight value) const;
  void set(Weight value);
  // this |= this << shift, truncated at cap.
  void add_item(Weight shift);
  // Every set bit moved up by offset; bits beyond cap are dropped.
  SumBitset shifted(Weight offset, Weight new_cap) const;

  bool any_in(Weight lo, Weight hi) const;
  // Smallest / largest set value in [lo, hi], or nullopt.
  std::optional<Weight> min_in(Weight lo, Weight hi) const;
  std::optional<Weight> max_in(Weight lo, Weight hi) const;

  std::size_t count() const;
  std::vector<Weight> values() const;

 private:
  void clear_tail();

  Weight cap_;
  std::vector<std::uint64_t> words_;
};

struct SumWindow {
  Weight lo;
  Weight hi;
};

// Answers knapsack queries about a bin's candidate items. Implementations
// may over-approximate the achievable sums but never under-approximate:
// nullopt means no subset sum lies in [lo, hi], and a returned window
// contains every subset sum that lies in [lo, hi].
class SumReasoner {
 public:
  struct Support {
    bool with_item;     // some sum in [lo, hi] may include the item
    bool without_item;  // some sum in [lo, hi] may exclude it
  };

  virtual ~SumReasoner() = default;
  virtual std::optional<SumWindow> window(std::span<const Weight> items, Weight lo,
                                          Weight hi) const = 0;

  // Support of items[index] for sums in [lo, hi]; `others` is items without
  // that one entry.
  virtual Support support(std::span<const Weight> others, Weight item, Weight lo,
                          Weight hi) const;

  // support() of every entry of items, in order.
  virtual std::vector<Support> supports(std::span<const Weight> items, Weight lo,
                                        Weight hi) const;
};

// Exact answers from the subset-sum bitset.
class ExactSumReasoner final : public SumReasoner {
 public:
  std::optional<SumWindow> window(std::span<const Weight> items, Weight lo,
                                  Weight hi) const override;
  Support support(std::span<const Weight> others, Weight item, Weight lo,
                  Weight hi) const override;
  std::vector<Support> supports(std::span<const Weight> items, Weight lo,
                                Weight hi) const override;
};

// Shaw's NoSum approximation: linear in the number of items, sound but not
// complete.
class NoSumReasoner final : public SumReasoner {
 public:
  std::optional<SumWindow> window(std::span<const Weight> items, Weight lo,
                                  Weight hi) const override;
};

struct NoSumResult {
  bool no_sum;
  Weight below;  // an achievable sum < alpha, valid when no_sum
  Weight above;  // an achievable sum > beta, valid when no_sum
};

// items sorted in non-increasing order.
NoSumResult no_sum(std::span<const Weight> items, Weight alpha, Weight beta);

enum class KnapsackMode { kExact, kNoSum };
std::unique_ptr<SumReasoner> make_sum_reasoner(KnapsackMode mode);

}  // namespace bpp
