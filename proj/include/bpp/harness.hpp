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
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bpp/bounds.hpp"
#include "bpp/instance.hpp"
#include "bpp/search.hpp"

namespace bpp::harness {

// One instance to run, with its optimum when one is known.
struct BenchmarkEntry {
  Instance instance;
  std::optional<std::size_t> optimum;
};

struct SkippedFile {
  std::string name;
  std::string reason;
};

struct BenchmarkSet {
  std::string name;
  std::vector<BenchmarkEntry> entries;
  std::vector<SkippedFile> skipped;
};

inline constexpr const char* kOptimaSidecar = "optima.txt";

// Every regular file of `dir` (sorted by name, hidden files and the optima
// sidecar excluded) parsed as a BPPLIB instance or a Falkenauer container.
// Files that parse as neither are listed in `skipped`. Optima come from the
// "name value" lines of optima.txt, or from a container's best-known column.
BenchmarkSet load_benchmark_dir(const std::string& dir);

// Parses "name value" lines; '#' starts a comment.
std::map<std::string, std::size_t> parse_optima(const std::string& text);

struct RunRow {
  std::string name;
  std::size_t n = 0;
  Weight c = 0;
  BoundMode bound = BoundMode::kDffsSeq;
  bool solved = false;
  std::optional<std::size_t> bins;
  std::uint64_t nodes = 0;
  std::int64_t solve_time_ms = 0;
  std::uint64_t bound_calls = 0;
  std::string note;
};

// Totals over the solved rows.
struct AggregateRow {
  std::string benchmark;
  std::size_t instances = 0;
  BoundMode bound = BoundMode::kDffsSeq;
  std::size_t solved = 0;
  std::int64_t total_time_ms = 0;
  std::int64_t avg_time_ms = 0;
  std::uint64_t total_nodes = 0;
  std::uint64_t total_bound_calls = 0;

  bool operator==(const AggregateRow&) const = default;
};

struct RunReport {
  std::vector<RunRow> rows;
  std::vector<SkippedFile> skipped;
  AggregateRow aggregate;
};

AggregateRow aggregate_rows(const std::string& benchmark, BoundMode bound,
                            const std::vector<RunRow>& rows);

// Column order of every report CSV.
inline constexpr const char* kReportHeader =
    "record,name,n,c,bound,solved,bins,nodes,solve_time_ms,avg_time_ms,bound_calls,note";

// Throws std::logic_error when the aggregate does not match its rows.
void write_report_csv(std::ostream& out, const RunReport& report);

struct RunOptions {
  SearchConfig search;
  std::optional<std::size_t> bins;  // decision mode when set
  std::size_t jobs = 1;
};

RunRow run_instance(const Instance& instance, const RunOptions& options);

RunReport run_benchmark(const BenchmarkSet& set, const RunOptions& options,
                        std::ostream* warnings = nullptr);

// Exit code 0 on a decided answer, 2 on timeout, 1 on error.
int cmd_solve(const std::string& path, const RunOptions& options, std::ostream& out,
              std::ostream& err);

int cmd_bench(const BenchmarkSet& set, const RunOptions& options, std::ostream& out,
              std::ostream& err);

struct DffStatsRow {
  DffKind kind;
  std::size_t only_opt = 0;
  std::size_t total_opt = 0;
  std::size_t only_best = 0;
  std::size_t total_best = 0;
  std::uint64_t sum = 0;
};

inline constexpr const char* kDffStatsHeader = "dff,only_opt,total_opt,only_best,total_best,sum";

// Root bound of every DFF per instance. Instances with a known optimum count
// towards the Opt columns, the others towards the Best columns; Sum covers
// all. Empty when the set is empty.
std::vector<DffStatsRow> dff_stats(const std::vector<BenchmarkEntry>& entries);
void write_dff_stats_csv(std::ostream& out, const std::vector<DffStatsRow>& rows);

// n, shape, scale, sigma per instance; seeds seed, seed+1, ...
BenchmarkSet weibull_set(const WeibullSpec& base, std::size_t count);

}  // namespace bpp::harness
