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

#include "bpp/instance.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <utility>

namespace bpp {

namespace {

struct Token {
  std::string_view text;
  int line;
};

// Splits into whitespace separated tokens, dropping '#' comment lines.
std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(pos, end - pos);
    std::size_t first = row.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && row[first] != '#') {
      std::size_t i = first;
      while (i < row.size()) {
        while (i < row.size() && (row[i] == ' ' || row[i] == '\t' || row[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < row.size() && row[j] != ' ' && row[j] != '\t' && row[j] != '\r') ++j;
        if (j > i) tokens.push_back({row.substr(i, j - i), line});
        i = j;
      }
    }
    pos = end + 1;
    ++line;
  }
  return tokens;
}

std::int64_t to_integer(const Token& token) {
  std::int64_t value = 0;
  const char* begin = token.text.data();
  const char* end = begin + token.text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(ParseError::Kind::kMalformedToken, token.line,
                     "not an integer: '" + std::string(token.text) + "'");
  }
  return value;
}

int last_line(const std::vector<Token>& tokens) {
  return tokens.empty() ? 1 : tokens.back().line;
}

// Reads c, n weights starting at tokens[pos]; shared by both layouts.
std::vector<Weight> read_weights(const std::vector<Token>& tokens, std::size_t pos,
                                 std::int64_t count, Weight capacity) {
  std::vector<Weight> weights;
  weights.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    if (pos >= tokens.size()) {
      throw ParseError(ParseError::Kind::kCountMismatch, last_line(tokens),
                       "expected " + std::to_string(count) + " weights, found " +
                           std::to_string(i));
    }
    const Token& token = tokens[pos++];
    Weight w = to_integer(token);
    if (w <= 0) {
      throw ParseError(ParseError::Kind::kNonPositiveWeight, token.line,
                       "weight " + std::to_string(w) + " is not positive");
    }
    if (w > capacity) {
      throw ParseError(ParseError::Kind::kWeightExceedsCapacity, token.line,
                       "weight " + std::to_string(w) + " exceeds capacity " +
                           std::to_string(capacity));
    }
    weights.push_back(w);
  }
  return weights;
}

std::string kind_label(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::kMalformedToken: return "malformed token";
    case ParseError::Kind::kCountMismatch: return "item count mismatch";
    case ParseError::Kind::kNonPositiveWeight: return "non-positive weight";
    case ParseError::Kind::kWeightExceedsCapacity: return "weight exceeds capacity";
    case ParseError::Kind::kNonPositiveCapacity: return "non-positive capacity";
    case ParseError::Kind::kNonPositiveCount: return "non-positive item count";
  }
  return "parse error";
}

}  // namespace

Instance::Instance(Weight capacity, std::vector<Weight> weights, std::string name)
    : capacity_(capacity), weights_(std::move(weights)), name_(std::move(name)) {
  if (capacity_ < 1) throw std::invalid_argument("capacity must be positive");
  if (weights_.empty()) throw std::invalid_argument("instance needs at least one item");
  for (Weight w : weights_) {
    if (w < 1 || w > capacity_) {
      throw std::invalid_argument("weight " + std::to_string(w) + " outside [1, " +
                                  std::to_string(capacity_) + "]");
    }
  }
  total_ = std::accumulate(weights_.begin(), weights_.end(), Weight{0});
}

Weight ReducedInstance::total_weight() const {
  return std::accumulate(weights.begin(), weights.end(), Weight{0});
}

Weight ReducedInstance::max_weight() const {
  Weight best = 0;
  for (Weight w : weights) best = std::max(best, w);
  return best;
}

ParseError::ParseError(Kind kind, int line, const std::string& detail,
                       const std::string& source)
    : std::runtime_error((source.empty() ? std::string() : source + ": ") + "line " +
                         std::to_string(line) + ": " + kind_label(kind) + ": " + detail),
      kind_(kind),
      line_(line),
      detail_(detail) {}

Instance parse_instance(std::string_view text, std::string name) {
  std::vector<Token> tokens = tokenize(text);
  if (tokens.size() < 2) {
    throw ParseError(ParseError::Kind::kCountMismatch, last_line(tokens),
                     "missing item count or capacity");
  }
  std::int64_t count = to_integer(tokens[0]);
  if (count <= 0) {
    throw ParseError(ParseError::Kind::kNonPositiveCount, tokens[0].line,
                     "item count " + std::to_string(count));
  }
  Weight capacity = to_integer(tokens[1]);
  if (capacity <= 0) {
    throw ParseError(ParseError::Kind::kNonPositiveCapacity, tokens[1].line,
                     "capacity " + std::to_string(capacity));
  }
  std::vector<Weight> weights = read_weights(tokens, 2, count, capacity);
  std::size_t used = 2 + static_cast<std::size_t>(count);
  if (tokens.size() > used) {
    throw ParseError(ParseError::Kind::kCountMismatch, tokens[used].line,
                     "more than " + std::to_string(count) + " weights");
  }
  return Instance(capacity, std::move(weights), std::move(name));
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) {
    name = name.substr(slash + 1);
  }
  if (auto dot = name.find_last_of('.'); dot != std::string::npos && dot > 0) {
    name = name.substr(0, dot);
  }
  try {
    return parse_instance(buffer.str(), name);
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.line(), e.detail(), path);
  }
}

void write_instance(std::ostream& out, const Instance& instance,
                    const std::vector<std::string>& comments) {
  for (const std::string& comment : comments) out << "# " << comment << '\n';
  out << instance.size() << '\n' << instance.capacity() << '\n';
  for (Weight w : instance.weights()) out << w << '\n';
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  write_instance(out, instance);
  return out.str();
}

std::vector<FalkenauerEntry> parse_falkenauer(std::string_view text) {
  std::vector<Token> tokens = tokenize(text);
  if (tokens.empty()) {
    throw ParseError(ParseError::Kind::kCountMismatch, 1, "missing problem count");
  }
  std::int64_t problems = to_integer(tokens[0]);
  if (problems < 0) {
    throw ParseError(ParseError::Kind::kNonPositiveCount, tokens[0].line,
                     "problem count " + std::to_string(problems));
  }
  std::vector<FalkenauerEntry> entries;
  std::size_t pos = 1;
  for (std::int64_t p = 0; p < problems; ++p) {
    if (pos + 4 > tokens.size()) {
      throw ParseError(ParseError::Kind::kCountMismatch, last_line(tokens),
                       "truncated problem " + std::to_string(p + 1));
    }
    std::string name(tokens[pos].text);
    Weight capacity = to_integer(tokens[pos + 1]);
    std::int64_t count = to_integer(tokens[pos + 2]);
    std::int64_t best = to_integer(tokens[pos + 3]);
    if (capacity <= 0) {
      throw ParseError(ParseError::Kind::kNonPositiveCapacity, tokens[pos + 1].line,
                       "capacity " + std::to_string(capacity));
    }
    if (count <= 0) {
      throw ParseError(ParseError::Kind::kNonPositiveCount, tokens[pos + 2].line,
                       "item count " + std::to_string(count));
    }
    std::vector<Weight> weights = read_weights(tokens, pos + 4, count, capacity);
    pos += 4 + static_cast<std::size_t>(count);
    std::optional<int> best_known;
    if (best > 0) best_known = static_cast<int>(best);
    entries.push_back({Instance(capacity, std::move(weights), std::move(name)), best_known});
  }
  if (pos < tokens.size()) {
    throw ParseError(ParseError::Kind::kCountMismatch, tokens[pos].line,
                     "trailing tokens after " + std::to_string(problems) + " problems");
  }
  return entries;
}

}  // namespace bpp
