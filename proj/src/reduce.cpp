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

#include <stdexcept>

#include "bpp/domain_store.hpp"
#include "bpp/instance.hpp"

namespace bpp {

ReducedInstance reduce(const Instance& instance, const DomainStore& store) {
  if (store.item_count() != instance.size()) {
    throw std::logic_error("reduce: store and instance disagree on item count");
  }
  ReducedInstance red;
  red.capacity = instance.capacity();
  std::vector<Weight> committed(store.bin_count(), 0);
  for (std::size_t i = 0; i < instance.size(); ++i) {
    if (store.assigned(i)) {
      committed[store.first_bin(i)] += instance.weight(i);
    } else {
      red.weights.push_back(instance.weight(i));
    }
  }
  for (std::size_t j = 0; j < committed.size(); ++j) {
    if (committed[j] > instance.capacity()) {
      throw std::logic_error("reduce: bin " + std::to_string(j) + " committed load " +
                             std::to_string(committed[j]) + " exceeds capacity");
    }
    if (committed[j] > 0) red.weights.push_back(committed[j]);
  }
  return red;
}

}  // namespace bpp
