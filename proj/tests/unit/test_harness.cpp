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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bpp/harness.hpp"

namespace bpp::harness {
namespace {

namespace fs = std::filesystem;

// Fresh directory under the build tree, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& name) : path_(fs::current_path() / ("harness_" + name)) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  void write(const std::string& file, const std::string& text) const {
    std::ofstream(path_ / file) << text;
  }
  std::string str() const { return path_.string(); }

 private:
  fs::path path_;
};

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

RunOptions quick_options() {
  RunOptions options;
  options.search.time_limit = std::chrono::seconds(30);
  return options;
}

TEST_CASE("benchmark directories load both layouts and skip junk") {
  TempDir dir("load");
  dir.write("a.bpp", "3\n10\n5\n5\n5\n");
  dir.write("b.txt", "6\n9\n4\n4\n3\n3\n2\n2\n");
  dir.write("c.txt", "1\n u1\n 10 2 2\n 6\n 6\n");
  dir.write("junk.txt", "not an instance\n");
  dir.write("optima.txt", "# name bins\na 2\nb 2\n");
  const BenchmarkSet set = load_benchmark_dir(dir.str());
  REQUIRE(set.entries.size() == 3);
  CHECK(set.entries[0].instance.name() == "a");
  CHECK(set.entries[0].optimum == 2u);
  CHECK(set.entries[1].optimum == 2u);
  CHECK(set.entries[2].instance.name() == "u1");
  CHECK(set.entries[2].optimum == 2u);
  REQUIRE(set.skipped.size() == 1);
  CHECK(set.skipped[0].name == "junk.txt");
  CHECK_THROWS(load_benchmark_dir(dir.str() + "/missing"));
  CHECK_THROWS(parse_optima("a x\n"));
}

TEST_CASE("a benchmark report has one row per instance and a consistent aggregate") {
  TempDir dir("bench");
  dir.write("example.bpp", "6\n9\n4\n4\n3\n3\n2\n2\n");
  dir.write("six.bpp", "3\n10\n6\n6\n6\n");
  dir.write("full.bpp", "3\n5\n5\n5\n5\n");
  const BenchmarkSet set = load_benchmark_dir(dir.str());
  std::ostringstream out, err;
  REQUIRE(cmd_bench(set, quick_options(), out, err) == 0);
  const auto rows = lines(out.str());
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == kReportHeader);
  CHECK(rows[1].rfind("instance,example,6,9,dffs-seq,1,2,", 0) == 0);
  CHECK(rows[2].rfind("instance,full,3,5,dffs-seq,1,3,", 0) == 0);
  CHECK(rows[3].rfind("instance,six,3,10,dffs-seq,1,3,", 0) == 0);
  CHECK(rows[4].rfind("aggregate,harness_bench,3,,dffs-seq,3,", 0) == 0);

  const RunReport report = run_benchmark(set, quick_options());
  CHECK(report.aggregate == aggregate_rows("harness_bench", BoundMode::kDffsSeq, report.rows));

  RunReport tampered = report;
  tampered.aggregate.total_nodes += 1;
  std::ostringstream sink;
  CHECK_THROWS_AS(write_report_csv(sink, tampered), std::logic_error);

  RunOptions parallel = quick_options();
  parallel.jobs = 3;
  std::ostringstream warnings;
  const RunReport concurrent = run_benchmark(set, parallel, &warnings);
  CHECK_FALSE(warnings.str().empty());
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    CHECK(concurrent.rows[i].bins == report.rows[i].bins);
    CHECK(concurrent.rows[i].nodes == report.rows[i].nodes);
  }
}

TEST_CASE("the L2 bound never beats the DFF bounds on three sixes") {
  const Instance six(10, {6, 6, 6});
  RunOptions options = quick_options();
  options.search.bound_mode = BoundMode::kL2;
  const RunRow l2_row = run_instance(six, options);
  options.search.bound_mode = BoundMode::kDffsSeq;
  const RunRow dff_row = run_instance(six, options);
  CHECK(l2_row.solved);
  CHECK(dff_row.solved);
  CHECK(dff_row.nodes <= l2_row.nodes);
}

TEST_CASE("aggregates count only solved rows") {
  std::vector<RunRow> rows(3);
  rows[0].solved = true;
  rows[0].solve_time_ms = 10;
  rows[0].nodes = 5;
  rows[1].solved = true;
  rows[1].solve_time_ms = 21;
  rows[1].nodes = 7;
  rows[2].solve_time_ms = 600000;
  rows[2].nodes = 1000;
  const AggregateRow agg = aggregate_rows("x", BoundMode::kL2, rows);
  CHECK(agg.instances == 3);
  CHECK(agg.solved == 2);
  CHECK(agg.total_time_ms == 31);
  CHECK(agg.avg_time_ms == 16);
  CHECK(agg.total_nodes == 12);
}

TEST_CASE("cmd_solve exit codes") {
  TempDir dir("solve");
  dir.write("six_items.bpp", "6\n9\n4\n4\n3\n3\n2\n2\n");
  dir.write("bad.bpp", "2\n10\n11\n1\n");
  std::ostringstream out, err;
  CHECK(cmd_solve(dir.str() + "/six_items.bpp", quick_options(), out, err) == 0);
  CHECK(lines(out.str()).at(1).rfind("instance,six_items,6,9,dffs-seq,1,2,", 0) == 0);

  RunOptions decide = quick_options();
  decide.bins = 1;
  out.str("");
  CHECK(cmd_solve(dir.str() + "/six_items.bpp", decide, out, err) == 0);
  CHECK(lines(out.str()).at(1).find("infeasible") != std::string::npos);

  CHECK(cmd_solve(dir.str() + "/missing.bpp", quick_options(), out, err) == 1);
  err.str("");
  CHECK(cmd_solve(dir.str() + "/bad.bpp", quick_options(), out, err) == 1);
  CHECK(err.str().find("line 3") != std::string::npos);
}

TEST_CASE("dffstats") {
  // All DFFs give 1 on a single full item.
  BenchmarkSet tie;
  tie.entries.push_back({Instance(10, {10}), std::nullopt});
  for (const DffStatsRow& row : dff_stats(tie.entries)) {
    CHECK(row.only_best == 0);
    CHECK(row.total_best == 1);
    CHECK(row.sum == 1);
  }

  std::vector<BenchmarkEntry> six = {{Instance(10, {6, 6, 6}), 3}};
  const auto rows = dff_stats(six);
  REQUIRE(rows.size() == kDffCount);
  CHECK(rows[dff_index(DffKind::kMT)].total_opt == 1);
  CHECK(rows[dff_index(DffKind::kMT)].sum == 3);

  std::ostringstream empty;
  write_dff_stats_csv(empty, dff_stats({}));
  CHECK(empty.str() == std::string(kDffStatsHeader) + "\n");
}

TEST_CASE("weibull sets use consecutive seeds") {
  const BenchmarkSet set = weibull_set({20, 2.0, 100.0, 1.4, 9}, 3);
  REQUIRE(set.entries.size() == 3);
  CHECK(set.entries[2].instance == generate_weibull({20, 2.0, 100.0, 1.4, 11}));
}

}  // namespace
}  // namespace bpp::harness
