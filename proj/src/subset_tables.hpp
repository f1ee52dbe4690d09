#pragma once

// Internal: dense w* tables over all subsets of [n], numerators over the
// family's common denominator. Used by the exhaustive partition search and
// the oracles; not part of the public headers.

#include <cstdint>
#include <type_traits>
#include <vector>

#include "balcov/types.hpp"

namespace balcov::detail {

inline Int family_denominator(const InstanceFamily& fam) {
    Int d = 1;
    for (int i = 0; i < fam.k(); ++i) {
        for (const auto& [edge, weight] : fam.hyper(i).edges()) d = int_lcm(d, den(weight));
    }
    return d;
}

template <class I>
struct SubsetTables {
    int n = 0;
    int k = 0;
    Int denom;
    std::uint32_t full = 0;
    std::vector<std::vector<I>> wstar;  // k tables of size 2^n

    I unbalance_units(std::uint32_t mask) const {
        I lo = wstar[0][mask], hi = wstar[0][mask];
        for (int i = 1; i < k; ++i) {
            const I& v = wstar[i][mask];
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
        return hi - lo;
    }

    // w_i*(U) <= w_i*([n] \ U) for every i
    bool good(std::uint32_t mask) const {
        for (int i = 0; i < k; ++i) {
            if (wstar[i][mask] > wstar[i][full ^ mask]) return false;
        }
        return true;
    }
};

template <class I>
SubsetTables<I> build_subset_tables(const InstanceFamily& fam) {
    SubsetTables<I> t;
    t.n = fam.n();
    t.k = fam.k();
    t.denom = family_denominator(fam);
    t.full = t.n == 32 ? 0xffffffffu : ((1u << t.n) - 1);
    std::size_t size = std::size_t(1) << t.n;
    t.wstar.assign(t.k, std::vector<I>(size, I(0)));
    for (int i = 0; i < t.k; ++i) {
        auto& tab = t.wstar[i];
        for (const auto& [edge, weight] : fam.hyper(i).edges()) {
            std::uint32_t mask = 0;
            for (int v : edge) mask |= 1u << (v - 1);
            Int units = num(weight) * (t.denom / den(weight));
            if constexpr (std::is_same_v<I, long long>) {
                tab[mask] += units.convert_to<long long>();
            } else {
                tab[mask] += units;
            }
        }
        for (int b = 0; b < t.n; ++b) {
            std::uint32_t bit = 1u << b;
            for (std::uint32_t mask = 0; mask < size; ++mask) {
                if (mask & bit) tab[mask] += tab[mask ^ bit];
            }
        }
    }
    return t;
}

// int64 numerators are safe when the common denominator fits; every table
// entry is bounded by the denominator.
inline bool fits_int64(const Int& denom) {
    static const Int limit = (Int(1) << 62);
    return denom < limit;
}

}  // namespace balcov::detail
