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

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "bpp/instance.hpp"

namespace bpp {

void WeibullSpec::validate() const {
  if (n == 0) throw std::invalid_argument("weibull: n must be positive");
  if (!(shape > 0.0)) throw std::invalid_argument("weibull: shape must be positive");
  if (!(scale > 0.0)) throw std::invalid_argument("weibull: scale must be positive");
  if (!(sigma >= 1.0)) throw std::invalid_argument("weibull: sigma must be >= 1");
}

Instance generate_weibull(const WeibullSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  std::vector<Weight> weights;
  weights.reserve(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    // 53 high bits -> uniform in [0, 1); the library distributions are not
    // specified bit-for-bit, so the transform is done here.
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    double sample = spec.scale * std::pow(-std::log1p(-u), 1.0 / spec.shape);
    weights.push_back(std::max<Weight>(1, static_cast<Weight>(std::floor(sample + 0.5))));
  }
  Weight heaviest = *std::max_element(weights.begin(), weights.end());
  // Relative slack absorbs representation error, e.g. 1.4 * 1000.
  double scaled = spec.sigma * static_cast<double>(heaviest);
  Weight capacity = static_cast<Weight>(std::ceil(scaled - 1e-9 * scaled));
  capacity = std::max(capacity, heaviest);
  std::ostringstream name;
  name << "weibull_n" << spec.n << "_k" << spec.shape << "_s" << spec.sigma << "_" << spec.seed;
  return Instance(capacity, std::move(weights), name.str());
}

std::string describe_weibull(const WeibullSpec& spec) {
  std::ostringstream out;
  out << "weibull n=" << spec.n << " shape=" << spec.shape << " scale=" << spec.scale
      << " sigma=" << spec.sigma << " seed=" << spec.seed << " rng=" << kWeibullRngName;
  return out.str();
}

}  // namespace bpp
