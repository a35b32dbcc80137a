#pragma once

// Binomial coefficients and factorials with thread-safe memo tables.
// C(n, k) = 0 outside 0 <= k <= n, so out-of-range terms of the double
// sums vanish without special-casing at the call sites.

#include <cassert>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "dsc/integer.hpp"

namespace dsc {

namespace detail {

struct IntegerTable {
    std::unordered_map<std::uint64_t, Integer> map;
    std::shared_mutex mu;

    template <typename Compute>
    Integer get(std::uint64_t key, Compute compute) {
        {
            std::shared_lock lock(mu);
            auto it = map.find(key);
            if (it != map.end()) return it->second;
        }
        Integer value = compute();
        std::unique_lock lock(mu);
        return map.emplace(key, std::move(value)).first->second;
    }
};

}  // namespace detail

inline Integer binomial(long long n, long long k) {
    assert(n >= 0);
    if (k < 0 || k > n) return Integer(0);
    if (k == 0 || k == n) return Integer(1);
    static detail::IntegerTable table;
    const std::uint64_t key = (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint64_t>(k);
    return table.get(key, [&] {
        Integer r;
        mpz_bin_uiui(r.raw(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    });
}

inline Integer binomial(const Integer& n, const Integer& k) {
    if (!k.fits_longlong()) return Integer(0);  // |k| that large is outside any desk-scale n
    return binomial(n.to_longlong(), k.to_longlong());
}

inline Integer factorial(long long n) {
    assert(n >= 0);
    static detail::IntegerTable table;
    return table.get(static_cast<std::uint64_t>(n), [&] {
        Integer r;
        mpz_fac_ui(r.raw(), static_cast<unsigned long>(n));
        return r;
    });
}

}  // namespace dsc
