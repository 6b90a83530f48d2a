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

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

#include "bpp/bounds.hpp"

namespace bpp {

// Fixed set of threads running blocking parallel-for calls. The calling
// thread takes part, so a pool of size 1 spawns no threads.
class WorkerPool {
 public:
  explicit WorkerPool(std::size_t workers);
  ~WorkerPool();

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  std::size_t size() const { return threads_.size() + 1; }

  // Calls body(i) for every i in [0, units), each exactly once, and returns
  // when all calls have finished. Not reentrant.
  void run(std::size_t units, const std::function<void(std::size_t)>& body);

 private:
  void worker_loop();
  void drain();

  std::vector<std::jthread> threads_;
  std::mutex mutex_;
  std::condition_variable wake_;
  std::condition_variable done_;
  std::uint64_t generation_ = 0;
  bool stopping_ = false;
  std::size_t busy_ = 0;
  const std::function<void(std::size_t)>* body_ = nullptr;
  std::size_t units_ = 0;
  std::atomic<std::size_t> next_{0};
};

// Monotone maximum shared by all workers of one bound computation.
class SharedMax {
 public:
  SharedMax() = default;
  explicit SharedMax(std::uint64_t initial) : value_(initial) {}

  void fold(std::uint64_t candidate) {
    std::uint64_t current = value_.load(std::memory_order_relaxed);
    while (candidate > current &&
           !value_.compare_exchange_weak(current, candidate, std::memory_order_acq_rel,
                                         std::memory_order_relaxed)) {
    }
  }
  std::uint64_t value() const { return value_.load(std::memory_order_acquire); }

 private:
  std::atomic<std::uint64_t> value_{0};
};

// One (kind, lambda-range) unit of work, the analogue of a kernel launch.
struct BoundTask {
  DffKind kind;
  LambdaRange range;
};

// Lambda values evaluated between two cancellation checks.
inline constexpr std::int64_t kLambdaChunk = 64;

// Evaluates the DFF lower bound over all (kind, lambda) pairs on a worker
// pool and folds them into one maximum. Work starting after the maximum
// has exceeded k is skipped, so the decision lb > k always matches
// lower_bound_seq, and so does lb itself whenever lb <= k.
class ParallelBoundEngine {
 public:
  explicit ParallelBoundEngine(std::size_t workers);

  std::size_t workers() const { return pool_.size(); }

  BoundResult lower_bound(const ReducedInstance& red, std::uint64_t k,
                          std::span<const DffKind> kinds = kAllDffs,
                          bool cancellation = true);

 private:
  WorkerPool pool_;
  std::mutex call_mutex_;
};

// Convenience wrapper building a temporary engine.
BoundResult lower_bound_par(const ReducedInstance& red, std::uint64_t k,
                            std::span<const DffKind> kinds, std::size_t workers);

std::size_t default_worker_count();

}  // namespace bpp
