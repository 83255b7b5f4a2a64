#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace isodeform {

/// Runs body(index, worker) for index in [0, count) on up to `workers`
/// threads. Indices are claimed from a shared counter; callers that write
/// results into slot `index` and reduce in index order get results that do
/// not depend on the worker count. `worker` < workers identifies the thread
/// for per-worker scratch storage. The first exception thrown by any body is
/// rethrown after all threads join.
inline void parallel_for_index(std::size_t count, int workers,
                               const std::function<void(std::size_t, int)>& body) {
    if (workers < 1) workers = 1;
    if (static_cast<std::size_t>(workers) > count)
        workers = count ? static_cast<int>(count) : 1;

    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i, 0);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto run = [&](int worker) {
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                body(i, worker);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(count, std::memory_order_relaxed); // drain remaining work
                return;
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace isodeform
