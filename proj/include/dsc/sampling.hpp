#pragma once

// Deterministic, platform-independent subparameter sampling.  The suite
// must produce byte-identical reports for a given seed, so no std::
// distribution (whose output is implementation-defined) is used here.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string_view>
#include <vector>

namespace dsc {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// All values of [lo, hi] when the range is small enough, otherwise `cap`
// distinct values drawn from a stream derived from (seed, tag) — sorted, so
// the selection is independent of draw order.
inline std::vector<long long> sample_range(long long lo, long long hi, std::size_t cap,
                                           std::uint64_t seed, std::string_view tag) {
    std::vector<long long> out;
    if (lo > hi) return out;
    const unsigned long long size = static_cast<unsigned long long>(hi - lo + 1);
    if (size <= cap) {
        for (long long v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::uint64_t state = seed ^ fnv1a64(tag);
    std::set<long long> picked;
    while (picked.size() < cap) {
        picked.insert(lo + static_cast<long long>(splitmix64(state) % size));
    }
    out.assign(picked.begin(), picked.end());
    return out;
}

}  // namespace dsc
