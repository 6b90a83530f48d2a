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

#include "bpp/harness.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bpp::harness {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// CSV cells never contain separators; replace them instead of quoting.
std::string cell(std::string text) {
  std::replace(text.begin(), text.end(), ',', ';');
  std::replace(text.begin(), text.end(), '\n', ' ');
  std::replace(text.begin(), text.end(), '\r', ' ');
  return text;
}

}  // namespace

std::map<std::string, std::size_t> parse_optima(const std::string& text) {
  std::map<std::string, std::size_t> optima;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string name;
    long long value = 0;
    if (!(fields >> name)) continue;
    if (!(fields >> value) || value <= 0) {
      throw std::runtime_error("optima line " + std::to_string(line_no) + ": expected 'name bins'");
    }
    optima[name] = static_cast<std::size_t>(value);
  }
  return optima;
}

BenchmarkSet load_benchmark_dir(const std::string& dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error(dir + " is not a directory");
  BenchmarkSet set;
  set.name = fs::path(dir).lexically_normal().filename().string();
  if (set.name.empty()) set.name = fs::path(dir).lexically_normal().parent_path().filename().string();

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.empty() || name[0] == '.' || name == kOptimaSidecar) continue;
    if (!entry.is_regular_file()) continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::map<std::string, std::size_t> optima;
  if (fs::path sidecar = fs::path(dir) / kOptimaSidecar; fs::exists(sidecar)) {
    optima = parse_optima(read_file(sidecar));
  }

  for (const fs::path& file : files) {
    std::string text;
    try {
      text = read_file(file);
    } catch (const std::exception& e) {
      set.skipped.push_back({file.filename().string(), e.what()});
      continue;
    }
    try {
      Instance instance = parse_instance(text, file.stem().string());
      std::optional<std::size_t> optimum;
      if (auto it = optima.find(instance.name()); it != optima.end()) optimum = it->second;
      set.entries.push_back({std::move(instance), optimum});
      continue;
    } catch (const ParseError& single) {
      try {
        for (FalkenauerEntry& entry : parse_falkenauer(text)) {
          std::optional<std::size_t> optimum;
          if (auto it = optima.find(entry.instance.name()); it != optima.end()) {
            optimum = it->second;
          } else if (entry.best_known) {
            optimum = static_cast<std::size_t>(*entry.best_known);
          }
          set.entries.push_back({std::move(entry.instance), optimum});
        }
      } catch (const std::exception&) {
        set.skipped.push_back({file.filename().string(), single.what()});
      }
    } catch (const std::exception& e) {
      set.skipped.push_back({file.filename().string(), e.what()});
    }
  }
  return set;
}

AggregateRow aggregate_rows(const std::string& benchmark, BoundMode bound,
                            const std::vector<RunRow>& rows) {
  AggregateRow agg;
  agg.benchmark = benchmark;
  agg.bound = bound;
  agg.instances = rows.size();
  for (const RunRow& row : rows) {
    if (!row.solved) continue;
    ++agg.solved;
    agg.total_time_ms += row.solve_time_ms;
    agg.total_nodes += row.nodes;
    agg.total_bound_calls += row.bound_calls;
  }
  if (agg.solved > 0) {
    const auto solved = static_cast<std::int64_t>(agg.solved);
    agg.avg_time_ms = (agg.total_time_ms + solved / 2) / solved;
  }
  return agg;
}

void write_report_csv(std::ostream& out, const RunReport& report) {
  if (!(aggregate_rows(report.aggregate.benchmark, report.aggregate.bound, report.rows) ==
        report.aggregate)) {
    throw std::logic_error("report aggregate does not match its rows");
  }
  out << kReportHeader << '\n';
  for (const RunRow& r : report.rows) {
    out << "instance," << cell(r.name) << ',' << r.n << ',' << r.c << ','
        << bound_mode_name(r.bound) << ',' << (r.solved ? 1 : 0) << ',';
    if (r.bins) out << *r.bins;
    out << ',' << r.nodes << ',' << r.solve_time_ms << ",," << r.bound_calls << ','
        << cell(r.note) << '\n';
  }
  for (const SkippedFile& s : report.skipped) {
    out << "skipped," << cell(s.name) << ",,,,,,,,,," << cell(s.reason) << '\n';
  }
  const AggregateRow& a = report.aggregate;
  out << "aggregate," << cell(a.benchmark) << ',' << a.instances << ",,"
      << bound_mode_name(a.bound) << ',' << a.solved << ",," << a.total_nodes << ','
      << a.total_time_ms << ',' << a.avg_time_ms << ',' << a.total_bound_calls << ",\n";
}

RunRow run_instance(const Instance& instance, const RunOptions& options) {
  RunRow row;
  row.name = instance.name();
  row.n = instance.size();
  row.c = instance.capacity();
  row.bound = options.search.bound_mode;
  if (options.bins) {
    DecisionResult result = solve_decision(instance, *options.bins, options.search);
    row.solved = result.status != DecisionStatus::kTimedOut;
    row.nodes = result.stats.nodes;
    row.solve_time_ms = result.stats.solve_time.count();
    row.bound_calls = result.stats.bound_calls;
    switch (result.status) {
      case DecisionStatus::kSolution:
        row.bins = *options.bins;
        row.note = "feasible";
        break;
      case DecisionStatus::kInfeasible:
        row.note = "infeasible";
        break;
      case DecisionStatus::kTimedOut:
        row.note = "timeout";
        break;
    }
    return row;
  }
  MinimizeResult result = minimize(instance, options.search);
  row.solved = result.bins.has_value();
  row.bins = result.bins;
  row.nodes = result.total.nodes;
  row.solve_time_ms = result.total.solve_time.count();
  row.bound_calls = result.total.bound_calls;
  row.note = row.solved ? "optimal" : "timeout";
  return row;
}

RunReport run_benchmark(const BenchmarkSet& set, const RunOptions& options,
                        std::ostream* warnings) {
  RunReport report;
  report.skipped = set.skipped;
  report.rows.resize(set.entries.size());
  if (options.jobs <= 1) {
    for (std::size_t i = 0; i < set.entries.size(); ++i) {
      report.rows[i] = run_instance(set.entries[i].instance, options);
    }
  } else {
    if (warnings != nullptr) {
      *warnings << "warning: " << options.jobs
                << " concurrent solves; reported times are indicative only\n";
    }
    for (std::size_t begin = 0; begin < set.entries.size(); begin += options.jobs) {
      const std::size_t end = std::min(set.entries.size(), begin + options.jobs);
      std::vector<std::future<RunRow>> batch;
      for (std::size_t i = begin; i < end; ++i) {
        batch.push_back(std::async(std::launch::async, [&, i] {
          return run_instance(set.entries[i].instance, options);
        }));
      }
      for (std::size_t i = begin; i < end; ++i) report.rows[i] = batch[i - begin].get();
    }
  }
  report.aggregate = aggregate_rows(set.name, options.search.bound_mode, report.rows);
  return report;
}

int cmd_solve(const std::string& path, const RunOptions& options, std::ostream& out,
              std::ostream& err) {
  try {
    Instance instance = read_instance_file(path);
    RunRow row = run_instance(instance, options);
    RunReport report;
    report.rows.push_back(row);
    report.aggregate = aggregate_rows(instance.name(), options.search.bound_mode, report.rows);
    write_report_csv(out, report);
    return row.solved ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int cmd_bench(const BenchmarkSet& set, const RunOptions& options, std::ostream& out,
              std::ostream& err) {
  try {
    for (const SkippedFile& s : set.skipped) err << "warning: skipped " << s.name << ": " << s.reason << '\n';
    RunReport report = run_benchmark(set, options, &err);
    write_report_csv(out, report);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

std::vector<DffStatsRow> dff_stats(const std::vector<BenchmarkEntry>& entries) {
  std::vector<DffStatsRow> rows;
  if (entries.empty()) return rows;
  for (DffKind kind : kAllDffs) rows.push_back({kind});
  for (const BenchmarkEntry& entry : entries) {
    ReducedInstance red{entry.instance.capacity(), entry.instance.weights()};
    std::array<std::uint64_t, kDffCount> bound{};
    for (std::size_t d = 0; d < kDffCount; ++d) {
      bound[d] = dff_lower_bound(kAllDffs[d], red);
      rows[d].sum += bound[d];
    }
    const std::uint64_t target =
        entry.optimum ? *entry.optimum : *std::max_element(bound.begin(), bound.end());
    const auto hits = static_cast<std::size_t>(std::count(bound.begin(), bound.end(), target));
    for (std::size_t d = 0; d < kDffCount; ++d) {
      if (bound[d] != target) continue;
      if (entry.optimum) {
        ++rows[d].total_opt;
        if (hits == 1) ++rows[d].only_opt;
      } else {
        ++rows[d].total_best;
        if (hits == 1) ++rows[d].only_best;
      }
    }
  }
  return rows;
}

void write_dff_stats_csv(std::ostream& out, const std::vector<DffStatsRow>& rows) {
  out << kDffStatsHeader << '\n';
  for (const DffStatsRow& r : rows) {
    out << dff_name(r.kind) << ',' << r.only_opt << ',' << r.total_opt << ',' << r.only_best
        << ',' << r.total_best << ',' << r.sum << '\n';
  }
}

BenchmarkSet weibull_set(const WeibullSpec& base, std::size_t count) {
  BenchmarkSet set;
  set.name = "weibull";
  for (std::size_t i = 0; i < count; ++i) {
    WeibullSpec spec = base;
    spec.seed = base.seed + i;
    set.entries.push_back({generate_weibull(spec), std::nullopt});
  }
  return set;
}

}  // namespace bpp::harness
