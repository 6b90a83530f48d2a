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

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "bpp/instance.hpp"

namespace bpp::testing {

inline std::vector<Weight> random_weights(std::mt19937_64& rng, std::size_t n, Weight lo,
                                          Weight hi) {
  std::uniform_int_distribution<Weight> dist(lo, hi);
  std::vector<Weight> w(n);
  for (Weight& x : w) x = dist(rng);
  return w;
}

// n in [1, max_n], c in [min_c, max_c], weights in [1, c].
inline Instance random_instance(std::mt19937_64& rng, std::size_t max_n, Weight min_c,
                                Weight max_c) {
  const auto n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  const Weight c = std::uniform_int_distribution<Weight>(min_c, max_c)(rng);
  // Mix of small and large items so that both easy and tight instances appear.
  const Weight lo = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : std::max<Weight>(1, c / 5);
  return Instance(c, random_weights(rng, n, lo, c));
}

inline ReducedInstance random_reduced(std::mt19937_64& rng, std::size_t max_n, Weight max_c) {
  const Instance inst = random_instance(rng, max_n, 1, max_c);
  return {inst.capacity(), inst.weights()};
}

}  // namespace bpp::testing
