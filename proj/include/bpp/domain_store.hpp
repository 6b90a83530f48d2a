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
#include <vector>

#include "bpp/instance.hpp"

namespace bpp {

// Candidate bins per item and a load interval per bin, with a trail so a
// search can restore any earlier state. Bins are 0-based. A mutation that
// would empty a domain or a load interval is rejected (returns false) and
// leaves the store unchanged; the caller treats that as failure.
class DomainStore {
 public:
  DomainStore(std::size_t items, std::size_t bins, Weight capacity);

  std::size_t item_count() const { return sizes_.size(); }
  std::size_t bin_count() const { return bins_; }
  Weight capacity() const { return capacity_; }

  bool contains(std::size_t item, std::size_t bin) const {
    return (bits_[item * words_ + bin / 64] >> (bin % 64)) & 1U;
  }
  std::size_t domain_size(std::size_t item) const { return sizes_[item]; }
  bool assigned(std::size_t item) const { return sizes_[item] == 1; }
  // Lowest bin in the domain.
  std::size_t first_bin(std::size_t item) const;
  std::vector<std::size_t> bins_of(std::size_t item) const;

  Weight load_low(std::size_t bin) const { return low_[bin]; }
  Weight load_high(std::size_t bin) const { return high_[bin]; }

  bool remove(std::size_t item, std::size_t bin);
  bool assign(std::size_t item, std::size_t bin);
  bool raise_load_low(std::size_t bin, Weight value);
  bool lower_load_high(std::size_t bin, Weight value);

  // Incremented by every effective mutation.
  std::uint64_t version() const { return version_; }

  std::size_t mark() const { return trail_.size(); }
  void undo(std::size_t mark);

  // Domains and loads only; the trail is ignored.
  bool same_domains(const DomainStore& other) const;

 private:
  enum class Op : std::uint8_t { kRemove, kLow, kHigh };
  struct Entry {
    Op op;
    std::uint32_t index;
    std::uint32_t bin;
    Weight old_value;
  };

  void erase_bit(std::size_t item, std::size_t bin);

  std::size_t bins_;
  std::size_t words_;
  Weight capacity_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> sizes_;
  std::vector<Weight> low_;
  std::vector<Weight> high_;
  std::vector<Entry> trail_;
  std::uint64_t version_ = 0;
};

}  // namespace bpp
