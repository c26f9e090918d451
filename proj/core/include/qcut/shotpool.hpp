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

#ifndef QCUT_SHOTPOOL_HPP
#define QCUT_SHOTPOOL_HPP

#include <cstdint>
#include <functional>

namespace qcut {

/// Shots are processed in fixed blocks so that the floating-point reduction
/// order is identical for every worker count: workers claim whole blocks,
/// block results land in index-addressed slots, and the caller combines
/// blocks in order.
inline constexpr std::uint64_t kShotBlockSize = 4096;

struct BlockRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::uint64_t index = 0;
};

using BlockFn = std::function<void(const BlockRange&)>;

/// Runs all shot blocks covering [0, shots). Each worker thread calls
/// `make_worker` once to build its own block function (which owns any
/// simulator workspace), then processes blocks handed out by an atomic
/// counter. Exceptions from workers are rethrown on the calling thread.
void run_shot_blocks(std::uint64_t shots, int workers,
                     const std::function<BlockFn()>& make_worker);

/// Deterministic parallel map over [0, count), one task per index.
void parallel_indexed(std::uint64_t count, int workers,
                      const std::function<void(std::uint64_t)>& body);

}  // namespace qcut

#endif  // QCUT_SHOTPOOL_HPP
