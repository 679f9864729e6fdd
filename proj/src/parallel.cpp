// SPDX-License-Identifier: Apache-2.0
//
// chanprobe: toolkit for probing generative wireless channel models

#include "chanprobe/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "chanprobe/errors.hpp"

namespace chanprobe {

namespace {
int g_thread_budget = 0;  // 0 = hardware concurrency
}

int thread_budget() {
    if (g_thread_budget > 0) return g_thread_budget;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void set_thread_budget(int n_threads) {
    if (n_threads < 0) throw InvalidArgument("thread budget must be >= 0");
    g_thread_budget = n_threads;
}

std::size_t block_count(std::int64_t n, std::int64_t block_size) {
    if (n <= 0) return 0;
    return static_cast<std::size_t>((n + block_size - 1) / block_size);
}

void parallel_blocks(std::int64_t n, std::int64_t block_size,
                     const std::function<void(std::size_t, std::int64_t, std::int64_t)>& fn) {
    if (block_size <= 0) throw InvalidArgument("block_size must be positive");
    const std::size_t n_blocks = block_count(n, block_size);
    if (n_blocks == 0) return;

    auto run_block = [&](std::size_t b) {
        const std::int64_t begin = static_cast<std::int64_t>(b) * block_size;
        const std::int64_t end = std::min<std::int64_t>(begin + block_size, n);
        fn(b, begin, end);
    };

    const int workers = std::min<int>(thread_budget(), static_cast<int>(n_blocks));
    if (workers <= 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) run_block(b);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= n_blocks) return;
            try {
                run_block(b);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace chanprobe
