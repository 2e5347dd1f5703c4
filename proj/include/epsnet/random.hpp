#pragma once

// Deterministic RNG (splitmix64) so that every seeded artifact is
// bit-reproducible across platforms and standard library versions.

#include <epsnet/rational.hpp>

#include <cstdint>
#include <vector>

namespace epsnet {

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), rejection sampled
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        std::uint64_t limit = ~0ULL - ~0ULL % bound;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % bound;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }
};

// n distinct integers in [0, hi), ascending
inline std::vector<long long> distinct_ints(SplitMix64& rng, int n, long long hi) {
    std::vector<long long> out;
    out.reserve(n);
    while ((int)out.size() < n) {
        long long v = (long long)rng.below((std::uint64_t)hi);
        bool dup = false;
        for (long long u : out)
            if (u == v) { dup = true; break; }
        if (!dup) out.push_back(v);
    }
    return out;
}

} // namespace epsnet
