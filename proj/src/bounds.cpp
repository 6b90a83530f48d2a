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

#include "bpp/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace bpp {

namespace {

using U64 = std::uint64_t;

U64 ceil_div(U64 num, U64 den) { return num / den + (num % den != 0 ? 1 : 0); }

// Division by a divisor fixed for a whole sweep. With Lemire's reciprocal
// the quotient is exact whenever divisor and numerator fit in 32 bits.
class Divisor {
 public:
  Divisor(U64 d, bool small_operands)
      : d_(d), magic_(small_operands && d >= 2 ? ~U64{0} / d + 1 : 0) {}
  U64 value() const { return d_; }
  U64 div(U64 n) const {
    if (magic_ == 0) return n / d_;
    return static_cast<U64>((static_cast<unsigned __int128>(magic_) * n) >> 64);
  }
  U64 mod(U64 n) const { return n - div(n) * d_; }

 private:
  U64 d_;
  U64 magic_;
};

// Every numerator below stays under c * max(c, 101), which fits in 32 bits
// for capacities up to this limit.
constexpr U64 kSmallCapacity = 42'000;

struct Params {
  U64 c;
  U64 lambda;
  Divisor by_c;
  Divisor by_lambda;

  Params(U64 capacity, U64 l)
      : c(capacity),
        lambda(l),
        by_c(capacity, capacity <= kSmallCapacity),
        by_lambda(l == 0 ? 1 : l, capacity <= kSmallCapacity) {}

  U64 ceil_by_c(U64 n) const {
    const U64 q = by_c.div(n);
    return q + (q * c != n ? 1 : 0);
  }
};

U64 f_mt(U64 w, const Params& p) {
  if (p.c - p.lambda < w) return p.c;
  if (p.lambda <= w) return w;
  return 0;
}

// Cases of f_RAD2 below 2*lambda.
U64 f_rad2_base(U64 w, const Params& p) {
  if (w < p.lambda) return 0;
  if (w + 2 * p.lambda <= p.c) return p.c / 3;
  return p.c / 2;
}

U64 f_rad2(U64 w, const Params& p) {
  if (w < 2 * p.lambda) return f_rad2_base(w, p);
  // c - w < 2 * lambda here since lambda > c / 4.
  return p.c - f_rad2_base(p.c - w, p);
}

U64 f_fs1(U64 w, const Params& p) {
  const U64 scaled = w * (p.lambda + 1);
  const U64 q = p.by_c.div(scaled);
  if (q * p.c == scaled) return w * p.lambda;
  return q * p.c;
}

U64 f_ccm1(U64 w, const Params& p) {
  if (2 * w > p.c) return 2 * (p.by_lambda.div(p.c) - p.by_lambda.div(p.c - w));
  if (2 * w == p.c) return p.by_lambda.div(p.c);
  return 2 * p.by_lambda.div(w);
}

// max(0, ceil(x * lambda / c) - 1)
U64 vb2_step(U64 x, const Params& p) {
  const U64 v = p.ceil_by_c(x * p.lambda);
  return v > 0 ? v - 1 : 0;
}

U64 f_vb2(U64 w, const Params& p) {
  if (2 * w > p.c) return 2 * vb2_step(p.c, p) - 2 * vb2_step(p.c - w, p);
  if (2 * w == p.c) return vb2_step(p.c, p);
  return 2 * vb2_step(w, p);
}

U64 f_bj1(U64 w, const Params& p) {
  const U64 c_mod = p.by_lambda.mod(p.c);
  const U64 q = p.by_lambda.div(w);
  const U64 w_mod = w - q * p.lambda;
  const U64 base = q * (p.lambda - c_mod);
  if (w_mod <= c_mod) return base;
  return base + w_mod - c_mod;
}

template <U64 (*F)(U64, const Params&)>
U64 transformed_bound(const ReducedInstance& red, U64 lambda) {
  const Params p(static_cast<U64>(red.capacity), lambda);
  const U64 transformed_capacity = F(p.c, p);
  if (transformed_capacity == 0) return 0;
  U64 sum = 0;
  for (Weight w : red.weights) sum += F(static_cast<U64>(w), p);
  return ceil_div(sum, transformed_capacity);
}

}  // namespace

std::string_view dff_name(DffKind kind) {
  switch (kind) {
    case DffKind::kMT: return "MT";
    case DffKind::kRAD2: return "RAD2";
    case DffKind::kFS1: return "FS1";
    case DffKind::kCCM1: return "CCM1";
    case DffKind::kVB2: return "VB2";
    case DffKind::kBJ1: return "BJ1";
  }
  return "?";
}

std::optional<DffKind> parse_dff_name(std::string_view name) {
  for (DffKind kind : kAllDffs) {
    std::string_view label = dff_name(kind);
    if (label.size() == name.size() &&
        std::equal(label.begin(), label.end(), name.begin(),
                   [](char a, char b) { return std::toupper(a) == std::toupper(b); })) {
      return kind;
    }
  }
  return std::nullopt;
}

std::vector<DffKind> parse_dff_order(std::string_view text) {
  std::vector<DffKind> order;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    auto kind = parse_dff_name(item);
    if (!kind) throw std::invalid_argument("unknown DFF '" + std::string(item) + "'");
    if (std::find(order.begin(), order.end(), *kind) != order.end()) {
      throw std::invalid_argument("DFF listed twice: " + std::string(item));
    }
    order.push_back(*kind);
    pos = comma + 1;
  }
  return order;
}

LambdaRange lambda_range(DffKind kind, Weight capacity) {
  const std::int64_t c = capacity;
  switch (kind) {
    case DffKind::kMT: return {0, c / 2};
    case DffKind::kRAD2: return {c / 4 + 1, c / 3};
    case DffKind::kFS1: return {1, 100};
    case DffKind::kCCM1: return {1, c / 2};
    case DffKind::kVB2: return {2, c};
    case DffKind::kBJ1: return {1, c};
  }
  return {};
}

LambdaRange lambda_range(DffKind kind, const ReducedInstance& red) {
  LambdaRange range = lambda_range(kind, red.capacity);
  if (kind == DffKind::kVB2 && !red.weights.empty()) {
    U64 scale = static_cast<U64>(red.weights.size()) * static_cast<U64>(red.max_weight());
    U64 cap = std::numeric_limits<U64>::max() / scale;
    if (cap < static_cast<U64>(range.hi)) range.hi = static_cast<std::int64_t>(cap);
  }
  return range;
}

std::uint64_t dff_value(DffKind kind, Weight w, Weight capacity, std::int64_t lambda) {
  assert(lambda_range(kind, capacity).contains(lambda));
  assert(0 <= w && w <= capacity);
  const U64 x = static_cast<U64>(w);
  const Params p(static_cast<U64>(capacity), static_cast<U64>(lambda));
  switch (kind) {
    case DffKind::kMT: return f_mt(x, p);
    case DffKind::kRAD2: return f_rad2(x, p);
    case DffKind::kFS1: return f_fs1(x, p);
    case DffKind::kCCM1: return f_ccm1(x, p);
    case DffKind::kVB2: return f_vb2(x, p);
    case DffKind::kBJ1: return f_bj1(x, p);
  }
  return 0;
}

std::uint64_t dff_bound(DffKind kind, const ReducedInstance& red, std::int64_t lambda) {
  assert(lambda_range(kind, red.capacity).contains(lambda));
  const U64 l = static_cast<U64>(lambda);
  switch (kind) {
    case DffKind::kMT: return transformed_bound<f_mt>(red, l);
    case DffKind::kRAD2: return transformed_bound<f_rad2>(red, l);
    case DffKind::kFS1: return transformed_bound<f_fs1>(red, l);
    case DffKind::kCCM1: return transformed_bound<f_ccm1>(red, l);
    case DffKind::kVB2: return transformed_bound<f_vb2>(red, l);
    case DffKind::kBJ1: return transformed_bound<f_bj1>(red, l);
  }
  return 0;
}

std::uint64_t l1(const ReducedInstance& red) {
  return ceil_div(static_cast<U64>(red.total_weight()), static_cast<U64>(red.capacity));
}

L2Partition l2_partition(const ReducedInstance& red, std::int64_t lambda) {
  L2Partition part;
  part.lambda = lambda;
  const Weight c = red.capacity;
  for (Weight w : red.weights) {
    if (c - lambda < w) {
      part.w1.push_back(w);
    } else if (2 * w > c) {
      part.w2.push_back(w);
    } else if (lambda <= w) {
      part.w3.push_back(w);
    }
  }
  return part;
}

std::uint64_t l2_at(const ReducedInstance& red, std::int64_t lambda) {
  const Weight c = red.capacity;
  std::int64_t big = 0;
  std::int64_t medium = 0;
  Weight medium_sum = 0;
  Weight small_sum = 0;
  for (Weight w : red.weights) {
    if (c - lambda < w) {
      ++big;
    } else if (2 * w > c) {
      ++medium;
      medium_sum += w;
    } else if (lambda <= w) {
      small_sum += w;
    }
  }
  Weight overflow = small_sum - (c * medium - medium_sum);
  std::int64_t extra = overflow > 0 ? (overflow + c - 1) / c : 0;
  return static_cast<U64>(big + medium + extra);
}

std::uint64_t l2(const ReducedInstance& red) {
  if (red.weights.empty()) return 0;
  std::vector<Weight> candidates{0};
  for (Weight w : red.weights) {
    if (2 * w <= red.capacity) candidates.push_back(w);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  U64 best = 0;
  for (Weight lambda : candidates) best = std::max(best, l2_at(red, lambda));
  return best;
}

std::uint64_t l2_full_sweep(const ReducedInstance& red) {
  if (red.weights.empty()) return 0;
  U64 best = 0;
  for (std::int64_t lambda = 0; lambda <= red.capacity / 2; ++lambda) {
    best = std::max(best, l2_at(red, lambda));
  }
  return best;
}

std::uint64_t dff_lower_bound(DffKind kind, const ReducedInstance& red) {
  if (red.weights.empty()) return 0;
  LambdaRange range = lambda_range(kind, red);
  U64 best = 0;
  for (std::int64_t lambda = range.lo; lambda <= range.hi; ++lambda) {
    best = std::max(best, dff_bound(kind, red, lambda));
  }
  return best;
}

BoundResult lower_bound_seq(const ReducedInstance& red, std::uint64_t k,
                            std::span<const DffKind> kinds) {
  BoundResult result;
  for (DffKind kind : kinds) {
    U64 best = 0;
    if (!red.weights.empty()) {
      LambdaRange range = lambda_range(kind, red);
      for (std::int64_t lambda = range.lo; lambda <= range.hi; ++lambda) {
        best = std::max(best, dff_bound(kind, red, lambda));
        ++result.evaluations;
      }
    }
    result.per_dff[dff_index(kind)] = best;
    result.lb = std::max(result.lb, best);
    if (result.lb > k) {
      result.exceeded_k = true;
      return result;
    }
  }
  return result;
}

}  // namespace bpp
