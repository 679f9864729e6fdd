// SPDX-License-Identifier: Apache-2.0
//
// chanprobe: toolkit for probing generative wireless channel models

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace chanprobe {

/// Worker cap for all internal parallelism. Changing it never changes
/// numerical results, only wall-clock time.
int thread_budget();
void set_thread_budget(int n_threads);

/// Partition [0, n) into fixed blocks of `block_size` and run
/// fn(block_index, begin, end) for each, possibly concurrently. Block
/// boundaries depend only on (n, block_size), so per-block results are
/// identical for any worker count.
void parallel_blocks(std::int64_t n, std::int64_t block_size,
                     const std::function<void(std::size_t, std::int64_t, std::int64_t)>& fn);

std::size_t block_count(std::int64_t n, std::int64_t block_size);

/// Fixed-order pairwise tree reduction over per-block partials: combines
/// adjacent pairs until one value remains. The combine order depends only on
/// the number of partials, giving bit-stable sums for any worker count.
template <class T, class Combine>
T tree_reduce(std::vector<T> parts, Combine combine) {
    while (parts.size() > 1) {
        std::vector<T> next;
        next.reserve((parts.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
            next.push_back(combine(std::move(parts[i]), std::move(parts[i + 1])));
        if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
        parts = std::move(next);
    }
    return std::move(parts.front());
}

}  // namespace chanprobe
