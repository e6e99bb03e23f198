#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fibsum {

// Worker count: FIBSUM_THREADS when set (clamped to >= 1),
// otherwise the hardware concurrency.
inline int max_threads() {
    if (const char* env = std::getenv("FIBSUM_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(i) for i in [0, count) on up to max_threads() workers.
// Work is claimed dynamically; callers that need deterministic output
// should write results into a slot indexed by i.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn, int thread_cap = 0) {
    int workers = thread_cap >= 1 ? thread_cap : max_threads();
    if (workers > 1 && static_cast<std::size_t>(workers) > count)
        workers = count == 0 ? 1 : static_cast<int>(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (!failed.load(std::memory_order_relaxed)) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace fibsum
