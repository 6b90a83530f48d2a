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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bpp/instance.hpp"

namespace bpp {

// Dual feasible functions, in their default evaluation priority.
enum class DffKind : std::uint8_t { kMT, kRAD2, kFS1, kCCM1, kVB2, kBJ1 };

inline constexpr std::size_t kDffCount = 6;
inline constexpr std::array<DffKind, kDffCount> kAllDffs = {
    DffKind::kMT, DffKind::kRAD2, DffKind::kFS1, DffKind::kCCM1, DffKind::kVB2, DffKind::kBJ1};

std::string_view dff_name(DffKind kind);
std::optional<DffKind> parse_dff_name(std::string_view name);
// Comma separated, e.g. "CCM1,BJ1,MT". Throws std::invalid_argument.
std::vector<DffKind> parse_dff_order(std::string_view text);
inline std::size_t dff_index(DffKind kind) { return static_cast<std::size_t>(kind); }

// Inclusive integer parameter interval; empty when lo > hi.
struct LambdaRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  bool empty() const { return lo > hi; }
  std::uint64_t size() const { return empty() ? 0 : static_cast<std::uint64_t>(hi - lo + 1); }
  bool contains(std::int64_t lambda) const { return lo <= lambda && lambda <= hi; }
  bool operator==(const LambdaRange&) const = default;
};

// Valid parameters of `kind` for capacity c, without the VB2 overflow cap.
LambdaRange lambda_range(DffKind kind, Weight capacity);

// Same, with the VB2 upper end capped so that r * max_weight * lambda fits
// in 64 bits.
LambdaRange lambda_range(DffKind kind, const ReducedInstance& red);

// Transformed weight f(w, lambda) for 0 <= w <= c. Lambda must lie in
// lambda_range(kind, c).
std::uint64_t dff_value(DffKind kind, Weight w, Weight capacity, std::int64_t lambda);

// ceil(sum f(w) / f(c)); 0 when f(c) == 0.
std::uint64_t dff_bound(DffKind kind, const ReducedInstance& red, std::int64_t lambda);

// ceil(total / c), 0 for an empty instance.
std::uint64_t l1(const ReducedInstance& red);

struct L2Partition {
  std::vector<Weight> w1;  // c - lambda < w
  std::vector<Weight> w2;  // c/2 < w <= c - lambda
  std::vector<Weight> w3;  // lambda <= w <= c/2
  std::int64_t lambda = 0;
};

L2Partition l2_partition(const ReducedInstance& red, std::int64_t lambda);
std::uint64_t l2_at(const ReducedInstance& red, std::int64_t lambda);

// Maximum of l2_at over lambda in {0} and the distinct weights <= c/2, which
// are the only points where the maximum can be attained.
std::uint64_t l2(const ReducedInstance& red);
// Maximum of l2_at over every lambda in [0, c/2].
std::uint64_t l2_full_sweep(const ReducedInstance& red);

struct BoundResult {
  std::uint64_t lb = 0;
  // Best bound per DFF; empty for kinds that were not evaluated.
  std::array<std::optional<std::uint64_t>, kDffCount> per_dff{};
  bool exceeded_k = false;
  // Number of dff_bound evaluations performed.
  std::uint64_t evaluations = 0;
};

inline constexpr std::uint64_t kNoBinLimit = UINT64_MAX;

// Sweeps every kind in order and returns as soon as the running maximum
// exceeds k. With k == kNoBinLimit the sweep always completes.
BoundResult lower_bound_seq(const ReducedInstance& red, std::uint64_t k,
                            std::span<const DffKind> kinds = kAllDffs);

// Best bound of one kind over its whole range.
std::uint64_t dff_lower_bound(DffKind kind, const ReducedInstance& red);

}  // namespace bpp
