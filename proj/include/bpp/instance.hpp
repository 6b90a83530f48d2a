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
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bpp {

using Weight = std::int64_t;

// A bin packing instance: capacity and the multiset of item weights.
// Immutable once constructed; the constructor enforces 1 <= w <= c.
class Instance {
 public:
  Instance(Weight capacity, std::vector<Weight> weights, std::string name = {});

  Weight capacity() const { return capacity_; }
  const std::vector<Weight>& weights() const { return weights_; }
  Weight weight(std::size_t item) const { return weights_[item]; }
  std::size_t size() const { return weights_.size(); }
  const std::string& name() const { return name_; }
  Weight total_weight() const { return total_; }

  bool operator==(const Instance& other) const {
    return capacity_ == other.capacity_ && weights_ == other.weights_;
  }

 private:
  Weight capacity_;
  std::vector<Weight> weights_;
  std::string name_;
  Weight total_ = 0;
};

// Input of every lower bound: unpacked items plus one virtual item per
// non-empty bin. May be empty.
struct ReducedInstance {
  Weight capacity = 1;
  std::vector<Weight> weights;

  Weight total_weight() const;
  Weight max_weight() const;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    kMalformedToken,
    kCountMismatch,
    kNonPositiveWeight,
    kWeightExceedsCapacity,
    kNonPositiveCapacity,
    kNonPositiveCount,
  };

  ParseError(Kind kind, int line, const std::string& detail,
             const std::string& source = {});

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  int line_;
  std::string detail_;
};

// BPPLIB layout: n, c, then n weights, whitespace separated. Lines starting
// with '#' are comments. LF and CRLF both accepted.
Instance parse_instance(std::string_view text, std::string name = {});
Instance read_instance_file(const std::string& path);

// Writes n, c and the weights one per line, preceded by optional comment
// lines (each written as "# <line>").
void write_instance(std::ostream& out, const Instance& instance,
                    const std::vector<std::string>& comments = {});
std::string serialize_instance(const Instance& instance);

struct FalkenauerEntry {
  Instance instance;
  std::optional<int> best_known;
};

// OR-Library container used by the Falkenauer sets: a problem count, then
// per problem an identifier line, "c n best", and n weights.
std::vector<FalkenauerEntry> parse_falkenauer(std::string_view text);

struct WeibullSpec {
  std::size_t n = 100;
  double shape = 2.0;
  double scale = 1000.0;
  double sigma = 1.0;
  std::uint64_t seed = 0;

  void validate() const;
};

inline constexpr const char* kWeibullRngName = "mt19937_64";

// Draws n weights from Weibull(shape, scale) by inverse transform over a
// seeded mt19937_64, rounds half up, clamps to >= 1, and sets
// c = ceil(sigma * max weight).
Instance generate_weibull(const WeibullSpec& spec);

// Metadata line recorded next to generated instances.
std::string describe_weibull(const WeibullSpec& spec);

class DomainStore;

// Fails with std::logic_error when a committed load exceeds the capacity.
ReducedInstance reduce(const Instance& instance, const DomainStore& store);

}  // namespace bpp
