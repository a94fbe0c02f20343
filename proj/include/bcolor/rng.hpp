#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace bcolor {

// mt19937_64 core with hand-rolled bounded draws; std::uniform_int_distribution
// is implementation-defined, and generated corpora must be byte-stable.
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    std::uint64_t next() { return engine(); }

    // uniform in [lo, hi], rejection sampled
    int uniform(int lo, int hi) {
        if (lo >= hi) return lo;
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<int>(x % span);
    }

    bool coin() { return next() & 1; }

    void shuffle(std::vector<int>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<int>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }
};

}  // namespace bcolor
