#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sunit {

// Runs fn(0..n-1), fanning out over `threads` workers. Results must be
// written into per-index slots by the caller; aggregation in index order
// keeps the outcome independent of the thread count. The first exception
// wins and cancels the remaining tasks.
template <typename Fn>
void parallel_tasks(size_t n, size_t threads, Fn&& fn) {
    if (n == 0) return;
    if (threads <= 1 || n == 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr first_error;
    std::mutex err_mutex;
    size_t k = std::min(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(k);
    for (size_t w = 0; w < k; ++w) {
        pool.emplace_back([&] {
            while (!stop.load(std::memory_order_relaxed)) {
                size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= n) break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    stop.store(true, std::memory_order_relaxed);
                    break;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace sunit
