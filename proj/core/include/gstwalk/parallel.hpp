#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace gstwalk {

/// Worker count: GSTWALK_THREADS env var if set, else hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("GSTWALK_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs fn(begin..end) split into contiguous chunks, one per worker.
/// fn(chunk_begin, chunk_end) must be safe to run concurrently.
inline void parallel_chunks(std::size_t count,
                            const std::function<void(std::size_t, std::size_t)>& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || count < 2) {
        fn(0, count);
        return;
    }
    if (workers > count) workers = static_cast<unsigned>(count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([=, &fn] { fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

} // namespace gstwalk
