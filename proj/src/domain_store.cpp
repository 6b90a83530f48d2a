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

#include "bpp/domain_store.hpp"

#include <bit>
#include <stdexcept>

namespace bpp {

DomainStore::DomainStore(std::size_t items, std::size_t bins, Weight capacity)
    : bins_(bins),
      words_((bins + 63) / 64),
      capacity_(capacity),
      bits_(items * words_, ~std::uint64_t{0}),
      sizes_(items, static_cast<std::uint32_t>(bins)),
      low_(bins, 0),
      high_(bins, capacity) {
  if (bins == 0) throw std::invalid_argument("domain store needs at least one bin");
  if (bins % 64 != 0) {
    std::uint64_t tail = (std::uint64_t{1} << (bins % 64)) - 1;
    for (std::size_t i = 0; i < items; ++i) bits_[i * words_ + words_ - 1] = tail;
  }
}

std::size_t DomainStore::first_bin(std::size_t item) const {
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t word = bits_[item * words_ + w];
    if (word != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
  }
  return bins_;
}

std::vector<std::size_t> DomainStore::bins_of(std::size_t item) const {
  std::vector<std::size_t> out;
  out.reserve(sizes_[item]);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t word = bits_[item * words_ + w];
    while (word != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

void DomainStore::erase_bit(std::size_t item, std::size_t bin) {
  bits_[item * words_ + bin / 64] &= ~(std::uint64_t{1} << (bin % 64));
  --sizes_[item];
  trail_.push_back({Op::kRemove, static_cast<std::uint32_t>(item),
                    static_cast<std::uint32_t>(bin), 0});
  ++version_;
}

bool DomainStore::remove(std::size_t item, std::size_t bin) {
  if (!contains(item, bin)) return true;
  if (sizes_[item] == 1) return false;
  erase_bit(item, bin);
  return true;
}

bool DomainStore::assign(std::size_t item, std::size_t bin) {
  if (!contains(item, bin)) return false;
  if (sizes_[item] == 1) return true;
  for (std::size_t other : bins_of(item)) {
    if (other != bin) erase_bit(item, other);
  }
  return true;
}

bool DomainStore::raise_load_low(std::size_t bin, Weight value) {
  if (value <= low_[bin]) return true;
  if (value > high_[bin]) return false;
  trail_.push_back({Op::kLow, static_cast<std::uint32_t>(bin), 0, low_[bin]});
  low_[bin] = value;
  ++version_;
  return true;
}

bool DomainStore::lower_load_high(std::size_t bin, Weight value) {
  if (value >= high_[bin]) return true;
  if (value < low_[bin]) return false;
  trail_.push_back({Op::kHigh, static_cast<std::uint32_t>(bin), 0, high_[bin]});
  high_[bin] = value;
  ++version_;
  return true;
}

void DomainStore::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    const Entry& e = trail_.back();
    switch (e.op) {
      case Op::kRemove:
        bits_[e.index * words_ + e.bin / 64] |= std::uint64_t{1} << (e.bin % 64);
        ++sizes_[e.index];
        break;
      case Op::kLow:
        low_[e.index] = e.old_value;
        break;
      case Op::kHigh:
        high_[e.index] = e.old_value;
        break;
    }
    trail_.pop_back();
    ++version_;
  }
}

bool DomainStore::same_domains(const DomainStore& other) const {
  return bins_ == other.bins_ && bits_ == other.bits_ && low_ == other.low_ &&
         high_ == other.high_;
}

}  // namespace bpp
