#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace cameral {

/// Thread cap from CAMERAL_CUBIC_THREADS (0 or unset = hardware auto).
inline unsigned thread_cap() {
    if (const char* env = std::getenv("CAMERAL_CUBIC_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Indexed parallel map: fn(i) for i in [0, n). Work items are independent;
/// the caller writes results by index, so reductions stay deterministic.
/// The first exception (lowest index) is rethrown.
inline void parallel_for_indexed(size_t n, const std::function<void(size_t)>& fn) {
    const unsigned cap = thread_cap();
    if (cap <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<size_t>(cap, n));
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace cameral
