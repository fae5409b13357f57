#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tkk {

/// Worker count from TKK_THREADS (default: hardware concurrency, at least 1).
inline std::size_t thread_count() {
    if (const char* env = std::getenv("TKK_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

/// Sampling seed from TKK_SEED (default 0).
inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("TKK_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

/// Runs body(i, worker) for i in [0, n). Work items are dealt round-robin to workers,
/// so callers that merge per-item results by index get thread-count independent output.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
    const std::size_t workers = std::min<std::size_t>(thread_count(), n == 0 ? 1 : n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i, std::size_t{0});
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) body(i, w);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace tkk
