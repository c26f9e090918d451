// Copyright 2026 The qcut authors
//
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

#include "qcut/shotpool.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "qcut/config.hpp"

namespace qcut {

void run_shot_blocks(std::uint64_t shots, int workers,
                     const std::function<BlockFn()>& make_worker) {
  if (shots == 0) return;
  if (workers < 1) throw ValidationError("worker count must be >= 1");
  const std::uint64_t num_blocks = (shots + kShotBlockSize - 1) / kShotBlockSize;

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&]() {
    try {
      BlockFn fn = make_worker();
      for (;;) {
        const std::uint64_t b = next.fetch_add(1);
        if (b >= num_blocks) break;
        BlockRange range;
        range.index = b;
        range.begin = b * kShotBlockSize;
        range.end = std::min(shots, range.begin + kShotBlockSize);
        fn(range);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

void parallel_indexed(std::uint64_t count, int workers,
                      const std::function<void(std::uint64_t)>& body) {
  if (count == 0) return;
  if (workers < 1) throw ValidationError("worker count must be >= 1");
  if (workers == 1 || count == 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&]() {
    try {
      for (;;) {
        const std::uint64_t i = next.fetch_add(1);
        if (i >= count) break;
        body(i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace qcut
