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

// bppsolve: solve bin packing instances and benchmark directories.
//
//   bppsolve solve FILE [--bins K]
//   bppsolve bench DIR [--out FILE] [--jobs N]
//   bppsolve bench --weibull n,shape,scale,sigma,count --seed S
//   bppsolve dffstats DIR [--optima FILE] [--out FILE]
//   bppsolve generate --out-dir DIR --count N --n N --shape K --scale S --sigma F --seed S
//
// Search options apply to every subcommand and may also be given in a
// key=value file passed with --config; flags override the file.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "bpp/harness.hpp"
#include "bpp/parallel.hpp"

namespace {

using bpp::harness::BenchmarkSet;
using bpp::harness::RunOptions;

struct SharedFlags {
  std::string bound = "dffs-seq";
  bool no_dominance = false;
  bool no_sym_break = false;
  std::size_t workers = bpp::default_worker_count();
  std::string dff_order;
  double time_limit_s = 600.0;
  std::string knapsack = "exact";
};

bpp::SearchConfig make_search_config(const SharedFlags& flags) {
  bpp::SearchConfig cfg;
  cfg.bound_mode = bpp::parse_bound_mode(flags.bound);
  cfg.dominance = cfg.single_fit_dominance = !flags.no_dominance;
  cfg.sym_break_same_size = cfg.sym_break_equivalent_bins = !flags.no_sym_break;
  cfg.workers = flags.workers;
  if (!flags.dff_order.empty()) cfg.dff_order = bpp::parse_dff_order(flags.dff_order);
  if (!(flags.time_limit_s > 0)) throw std::invalid_argument("--time-limit must be positive");
  cfg.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(flags.time_limit_s * 1000.0));
  if (flags.knapsack == "exact") {
    cfg.knapsack = bpp::KnapsackMode::kExact;
  } else if (flags.knapsack == "nosum") {
    cfg.knapsack = bpp::KnapsackMode::kNoSum;
  } else {
    throw std::invalid_argument("unknown knapsack mode '" + flags.knapsack + "'");
  }
  cfg.validate();
  return cfg;
}

bpp::WeibullSpec parse_weibull_flag(const std::vector<double>& values, std::uint64_t seed,
                                    std::size_t* count) {
  if (values.size() != 5) throw std::invalid_argument("--weibull expects n,shape,scale,sigma,count");
  bpp::WeibullSpec spec;
  spec.n = static_cast<std::size_t>(values[0]);
  spec.shape = values[1];
  spec.scale = values[2];
  spec.sigma = values[3];
  spec.seed = seed;
  spec.validate();
  if (values[4] < 1) throw std::invalid_argument("--weibull count must be at least 1");
  *count = static_cast<std::size_t>(values[4]);
  return spec;
}

// Writes to `path`, or standard output when it is empty.
template <typename Fn>
int with_output(const std::string& path, Fn&& body) {
  if (path.empty()) return body(std::cout);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << '\n';
    return 1;
  }
  return body(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bin packing solver with dual feasible function lower bounds", "bppsolve"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file with default option values");

  SharedFlags flags;
  app.add_option("--bound", flags.bound, "Lower bound used by the propagator")
      ->check(CLI::IsMember({"l2", "dffs-seq", "dffs-par"}))
      ->capture_default_str();
  app.add_flag("--no-dominance", flags.no_dominance, "Disable the dominance rules");
  app.add_flag("--no-sym-break", flags.no_sym_break, "Disable the symmetry breaking rules");
  app.add_option("--workers", flags.workers, "Threads of the parallel bound engine")
      ->envname("BPP_WORKERS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--dff-order", flags.dff_order, "Comma separated DFFs, e.g. MT,RAD2,VB2");
  app.add_option("--time-limit", flags.time_limit_s, "Time limit per instance in seconds")
      ->capture_default_str();
  app.add_option("--knapsack", flags.knapsack, "Knapsack reasoning")
      ->check(CLI::IsMember({"exact", "nosum"}))
      ->capture_default_str();

  std::string solve_path;
  std::size_t bins = 0;
  auto* solve = app.add_subcommand("solve", "Minimize the bins of one instance, or decide --bins K")
                    ->fallthrough();
  solve->add_option("file", solve_path, "Instance file")->required();
  auto* bins_opt = solve->add_option("--bins", bins, "Decide whether K bins suffice")
                       ->check(CLI::PositiveNumber);

  std::string bench_dir, bench_out;
  std::vector<double> weibull;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  auto* bench = app.add_subcommand("bench", "Solve every instance of a directory")->fallthrough();
  auto* bench_dir_opt = bench->add_option("dir", bench_dir, "Benchmark directory");
  auto* weibull_opt = bench->add_option("--weibull", weibull, "Generate n,shape,scale,sigma,count")
                          ->delimiter(',')
                          ->expected(5);
  bench_dir_opt->excludes(weibull_opt);
  bench->add_option("--seed", seed, "Seed of the first generated instance")->needs(weibull_opt);
  bench->add_option("--out", bench_out, "CSV report path (default stdout)");
  bench->add_option("--jobs", jobs, "Concurrent solves")->check(CLI::PositiveNumber);

  std::string stats_dir, stats_optima, stats_out;
  auto* dffstats = app.add_subcommand("dffstats", "Root bound statistics of every DFF")
                       ->fallthrough();
  dffstats->add_option("dir", stats_dir, "Benchmark directory")->required();
  dffstats->add_option("--optima", stats_optima, "Optima file (default DIR/optima.txt)");
  dffstats->add_option("--out", stats_out, "CSV path (default stdout)");

  std::string gen_dir;
  std::size_t gen_count = 1;
  bpp::WeibullSpec gen_spec;
  auto* generate = app.add_subcommand("generate", "Write Weibull instances")->fallthrough();
  generate->add_option("--out-dir", gen_dir, "Output directory")->required();
  generate->add_option("--count", gen_count, "Instances")->check(CLI::PositiveNumber);
  generate->add_option("--n", gen_spec.n, "Items per instance")->capture_default_str();
  generate->add_option("--shape", gen_spec.shape, "Weibull shape")->capture_default_str();
  generate->add_option("--scale", gen_spec.scale, "Weibull scale")->capture_default_str();
  generate->add_option("--sigma", gen_spec.sigma, "Capacity factor")->capture_default_str();
  generate->add_option("--seed", gen_spec.seed, "Seed of the first instance")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    RunOptions options;
    options.search = make_search_config(flags);

    if (*solve) {
      if (*bins_opt) options.bins = bins;
      return bpp::harness::cmd_solve(solve_path, options, std::cout, std::cerr);
    }

    if (*bench) {
      options.jobs = jobs;
      BenchmarkSet set;
      if (*weibull_opt) {
        std::size_t count = 0;
        bpp::WeibullSpec spec = parse_weibull_flag(weibull, seed, &count);
        set = bpp::harness::weibull_set(spec, count);
      } else if (*bench_dir_opt) {
        set = bpp::harness::load_benchmark_dir(bench_dir);
      } else {
        std::cerr << "error: bench needs DIR or --weibull\n";
        return 1;
      }
      return with_output(bench_out, [&](std::ostream& out) {
        return bpp::harness::cmd_bench(set, options, out, std::cerr);
      });
    }

    if (*dffstats) {
      BenchmarkSet set = bpp::harness::load_benchmark_dir(stats_dir);
      if (!stats_optima.empty()) {
        std::ifstream in(stats_optima);
        if (!in) throw std::runtime_error("cannot open " + stats_optima);
        std::stringstream text;
        text << in.rdbuf();
        const auto optima = bpp::harness::parse_optima(text.str());
        for (auto& entry : set.entries) {
          if (auto it = optima.find(entry.instance.name()); it != optima.end()) {
            entry.optimum = it->second;
          }
        }
      }
      for (const auto& s : set.skipped) {
        std::cerr << "warning: skipped " << s.name << ": " << s.reason << '\n';
      }
      return with_output(stats_out, [&](std::ostream& out) {
        bpp::harness::write_dff_stats_csv(out, bpp::harness::dff_stats(set.entries));
        return 0;
      });
    }

    if (*generate) {
      gen_spec.validate();
      std::filesystem::create_directories(gen_dir);
      for (std::size_t i = 0; i < gen_count; ++i) {
        bpp::WeibullSpec spec = gen_spec;
        spec.seed = gen_spec.seed + i;
        const bpp::Instance inst = bpp::generate_weibull(spec);
        const auto path = std::filesystem::path(gen_dir) / (inst.name() + ".bpp");
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        bpp::write_instance(out, inst, {bpp::describe_weibull(spec)});
        std::cout << path.string() << '\n';
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
