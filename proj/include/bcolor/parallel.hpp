#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace bcolor {

// Worker pool width: BCOLOR_THREADS env var if set, hardware otherwise.
inline int thread_count() {
    static const int cached = [] {
        if (const char* env = std::getenv("BCOLOR_THREADS")) {
            int v = std::atoi(env);
            if (v >= 1) return v > 64 ? 64 : v;
        }
        unsigned hw = std::thread::hardware_concurrency();
        if (hw == 0) hw = 1;
        return static_cast<int>(hw > 16 ? 16 : hw);
    }();
    return cached;
}

// Splits [0, total) into contiguous chunks, one worker thread per chunk.
// fn(chunk_index, begin, end) must be safe to run concurrently on disjoint
// ranges; chunk_index < thread_count().
inline void parallel_chunks(
    std::size_t total,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    std::size_t workers = static_cast<std::size_t>(thread_count());
    if (workers > total) workers = total;
    if (workers <= 1) {
        if (total > 0) fn(0, 0, total);
        return;
    }
    std::vector<std::thread> threads;
    std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = begin + chunk < total ? begin + chunk : total;
        if (begin >= end) break;
        threads.emplace_back(fn, w, begin, end);
    }
    for (auto& t : threads) t.join();
}

inline void parallel_ranges(std::size_t total,
                            const std::function<void(std::size_t, std::size_t)>& fn) {
    parallel_chunks(total,
                    [&fn](std::size_t, std::size_t begin, std::size_t end) { fn(begin, end); });
}

}  // namespace bcolor
