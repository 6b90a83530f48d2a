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

#include "bpp/parallel.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace bpp {

WorkerPool::WorkerPool(std::size_t workers) {
  if (workers == 0) throw std::invalid_argument("worker pool needs at least one worker");
  threads_.reserve(workers - 1);
  for (std::size_t i = 1; i < workers; ++i) {
    threads_.emplace_back([this] { worker_loop(); });
  }
}

WorkerPool::~WorkerPool() {
  {
    std::lock_guard lock(mutex_);
    stopping_ = true;
  }
  wake_.notify_all();
  // jthread joins on destruction.
}

void WorkerPool::drain() {
  for (std::size_t i = next_.fetch_add(1); i < units_; i = next_.fetch_add(1)) {
    (*body_)(i);
  }
}

void WorkerPool::worker_loop() {
  std::uint64_t seen = 0;
  for (;;) {
    {
      std::unique_lock lock(mutex_);
      wake_.wait(lock, [&] { return stopping_ || generation_ != seen; });
      if (stopping_) return;
      seen = generation_;
    }
    drain();
    {
      std::lock_guard lock(mutex_);
      if (--busy_ == 0) done_.notify_one();
    }
  }
}

void WorkerPool::run(std::size_t units, const std::function<void(std::size_t)>& body) {
  if (threads_.empty()) {
    for (std::size_t i = 0; i < units; ++i) body(i);
    return;
  }
  {
    std::lock_guard lock(mutex_);
    body_ = &body;
    units_ = units;
    next_.store(0);
    busy_ = threads_.size();
    ++generation_;
  }
  wake_.notify_all();
  drain();
  std::unique_lock lock(mutex_);
  done_.wait(lock, [&] { return busy_ == 0; });
  body_ = nullptr;
}

ParallelBoundEngine::ParallelBoundEngine(std::size_t workers) : pool_(workers) {}

BoundResult ParallelBoundEngine::lower_bound(const ReducedInstance& red, std::uint64_t k,
                                             std::span<const DffKind> kinds,
                                             bool cancellation) {
  std::lock_guard call_lock(call_mutex_);
  BoundResult result;
  if (red.weights.empty()) {
    for (DffKind kind : kinds) result.per_dff[dff_index(kind)] = 0;
    return result;
  }

  struct Chunk {
    DffKind kind;
    std::int64_t lo;
    std::int64_t hi;
  };
  std::vector<Chunk> chunks;
  std::vector<BoundTask> tasks;
  for (DffKind kind : kinds) {
    LambdaRange range = lambda_range(kind, red);
    if (range.empty()) {
      result.per_dff[dff_index(kind)] = 0;
      continue;
    }
    tasks.push_back({kind, range});
    for (std::int64_t lo = range.lo; lo <= range.hi; lo += kLambdaChunk) {
      chunks.push_back({kind, lo, std::min(range.hi, lo + kLambdaChunk - 1)});
    }
  }

  SharedMax shared;
  std::array<SharedMax, kDffCount> per_kind{};
  std::array<std::atomic<bool>, kDffCount> touched{};
  std::atomic<std::uint64_t> evaluations{0};

  pool_.run(chunks.size(), [&](std::size_t index) {
    if (cancellation && shared.value() > k) return;
    const Chunk& chunk = chunks[index];
    std::uint64_t best = 0;
    for (std::int64_t lambda = chunk.lo; lambda <= chunk.hi; ++lambda) {
      best = std::max(best, dff_bound(chunk.kind, red, lambda));
    }
    evaluations.fetch_add(static_cast<std::uint64_t>(chunk.hi - chunk.lo + 1),
                          std::memory_order_relaxed);
    per_kind[dff_index(chunk.kind)].fold(best);
    touched[dff_index(chunk.kind)].store(true, std::memory_order_relaxed);
    shared.fold(best);
  });

  for (const BoundTask& task : tasks) {
    std::size_t i = dff_index(task.kind);
    if (touched[i].load()) result.per_dff[i] = per_kind[i].value();
  }
  result.lb = shared.value();
  result.exceeded_k = result.lb > k;
  result.evaluations = evaluations.load();
  return result;
}

BoundResult lower_bound_par(const ReducedInstance& red, std::uint64_t k,
                            std::span<const DffKind> kinds, std::size_t workers) {
  ParallelBoundEngine engine(workers);
  return engine.lower_bound(red, k, kinds);
}

std::size_t default_worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace bpp
