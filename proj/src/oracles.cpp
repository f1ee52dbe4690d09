#include "balcov/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "balcov/chains.hpp"
#include "balcov/core.hpp"
#include "balcov/steinitz.hpp"
#include "subset_tables.hpp"

namespace balcov {

namespace {

// Builds one hypergraph's w* numerator table at a time (zeta transform) so
// only O(2^n) extra memory is live beside the caller's accumulators.
template <class I, class Fn>
void for_each_sos_table(const InstanceFamily& fam, const Int& denom, Fn&& fn) {
    const int n = fam.n();
    const std::size_t size = std::size_t(1) << n;
    std::vector<I> tab;
    for (int i = 0; i < fam.k(); ++i) {
        tab.assign(size, I(0));
        for (const auto& [edge, weight] : fam.hyper(i).edges()) {
            std::uint32_t mask = 0;
            for (int v : edge) mask |= 1u << (v - 1);
            Int units = num(weight) * (denom / den(weight));
            if constexpr (std::is_same_v<I, long long>) {
                tab[mask] += units.convert_to<long long>();
            } else {
                tab[mask] += units;
            }
        }
        for (int b = 0; b < n; ++b) {
            std::uint32_t bit = 1u << b;
            for (std::uint32_t mask = 0; mask < size; ++mask) {
                if (mask & bit) tab[mask] += tab[mask ^ bit];
            }
        }
        fn(i, tab);
    }
}

template <class I>
ChainOracleResult optimal_chain_impl(const InstanceFamily& fam, const Int& denom) {
    const int n = fam.n();
    const std::size_t size = std::size_t(1) << n;
    const std::uint32_t full = static_cast<std::uint32_t>(size - 1);

    // unbalance numerators per subset, folded one hypergraph at a time
    std::vector<I> lo(size), hi(size);
    bool first = true;
    for_each_sos_table<I>(fam, denom, [&](int, const std::vector<I>& tab) {
        if (first) {
            lo = tab;
            hi = tab;
            first = false;
        } else {
            for (std::size_t mask = 0; mask < size; ++mask) {
                if (tab[mask] < lo[mask]) lo[mask] = tab[mask];
                if (tab[mask] > hi[mask]) hi[mask] = tab[mask];
            }
        }
    });
    std::vector<I> unb(size);
    for (std::size_t mask = 0; mask < size; ++mask) unb[mask] = hi[mask] - lo[mask];
    lo.clear();
    lo.shrink_to_fit();
    hi.clear();
    hi.shrink_to_fit();

    std::vector<I> m(size);
    m[full] = unb[full];
    for (std::uint32_t mask = full; mask-- > 0;) {
        const std::uint32_t missing = full ^ mask;
        bool started = false;
        I best{};
        for (std::uint32_t rest = missing; rest;) {
            std::uint32_t bit = rest & (0u - rest);
            rest ^= bit;
            const I& next = m[mask | bit];
            if (!started || next < best) {
                best = next;
                started = true;
            }
        }
        m[mask] = std::max(unb[mask], best);
    }

    std::vector<int> order;
    std::uint32_t cur = 0;
    while (cur != full) {
        int pick = 0;
        bool started = false;
        I best{};
        for (int v = 1; v <= n; ++v) {
            std::uint32_t bit = 1u << (v - 1);
            if (cur & bit) continue;
            const I& next = m[cur | bit];
            if (!started || next < best) {
                best = next;
                pick = v;
                started = true;
            }
        }
        order.push_back(pick);
        cur |= 1u << (pick - 1);
    }

    ChainOracleResult res{chain_from_order(fam, order), Rational(Int(m[0]), denom)};
    if (res.chain.max_trace() != res.value) {
        throw Error(ErrorKind::internal,
                    "optimal_chain: reconstructed chain achieves " +
                        format_rational(res.chain.max_trace()) + ", table says " +
                        format_rational(res.value));
    }
    return res;
}

template <class I>
PartitionOracleResult optimal_partition_impl(const InstanceFamily& fam, const Int& denom) {
    const int n = fam.n();
    const std::size_t size = std::size_t(1) << n;
    const std::uint32_t full = static_cast<std::uint32_t>(size - 1);

    std::vector<I> gapmax(size, I(0));
    for_each_sos_table<I>(fam, denom, [&](int, const std::vector<I>& tab) {
        for (std::size_t mask = 0; mask < size; ++mask) {
            I d = tab[mask] - tab[full ^ mask];
            if (d < 0) d = -d;
            if (d > gapmax[mask]) gapmax[mask] = d;
        }
    });

    // orientation: vertex n stays in S, so T ranges over subsets of [n-1]
    std::uint32_t best_t = 0;
    for (std::uint32_t t = 0; t < (std::uint32_t(1) << (n - 1)); ++t) {
        if (gapmax[t] < gapmax[best_t]) best_t = t;
    }

    PartitionResult part;
    part.bound_kind = BoundKind::exhaustive;
    part.certified = true;
    for (int v = 1; v <= n; ++v) {
        if (best_t & (1u << (v - 1))) {
            part.T.push_back(v);
        } else {
            part.S.push_back(v);
        }
    }
    for (int i = 0; i < fam.k(); ++i) {
        part.gaps.push_back(
            rational_abs(w_star(fam.hyper(i), part.S) - w_star(fam.hyper(i), part.T)));
    }
    PartitionOracleResult res{std::move(part), Rational(Int(gapmax[best_t]), denom)};
    if (res.partition.max_gap() != res.value) {
        throw Error(ErrorKind::internal, "optimal_partition: gap recomputation mismatch");
    }
    return res;
}

struct OrderingSearch {
    int dim = 0;
    std::vector<std::vector<Rational>> distinct;
    std::vector<int> remaining;
    std::vector<Rational> prefix;
    Rational best;

    void dfs(int left, const Rational& cur_max) {
        if (left == 0) {
            best = cur_max;  // reached only through strict improvements
            return;
        }
        for (std::size_t g = 0; g < distinct.size(); ++g) {
            if (remaining[g] == 0) continue;
            Rational step_max = cur_max;
            for (int i = 0; i < dim; ++i) {
                prefix[i] += distinct[g][i];
                Rational a = rational_abs(prefix[i]);
                if (a > step_max) step_max = a;
            }
            if (step_max < best) {
                --remaining[g];
                dfs(left - 1, step_max);
                ++remaining[g];
            }
            for (int i = 0; i < dim; ++i) prefix[i] -= distinct[g][i];
        }
    }
};

}  // namespace

ChainOracleResult optimal_chain(const InstanceFamily& fam, int cap) {
    const int n = fam.n();
    if (n > cap || n > 26) {
        throw Error(ErrorKind::size, "optimal_chain: n = " + std::to_string(n) +
                                         " exceeds the exact-search cap " +
                                         std::to_string(std::min(cap, 26)));
    }
    const Int denom = detail::family_denominator(fam);
    if (detail::fits_int64(denom)) return optimal_chain_impl<long long>(fam, denom);
    return optimal_chain_impl<Int>(fam, denom);
}

Rational min_ordering_prefix_norm(const VectorFamily& v, int cap) {
    if (v.size() > cap) {
        throw Error(ErrorKind::size, "min_ordering_prefix_norm: " + std::to_string(v.size()) +
                                         " vectors exceed the cap " + std::to_string(cap));
    }
    for (const auto& component : v.component_sum()) {
        if (component != 0) {
            throw Error(ErrorKind::precondition,
                        "min_ordering_prefix_norm: vectors must sum to zero");
        }
    }
    if (v.size() == 0) return Rational(0);

    // initial upper bound: the constructive ordering's achieved value
    std::vector<int> ordering = steinitz_order(v);
    Rational upper = max_prefix_inf_norm(v, ordering);
    {
        std::vector<int> identity(v.size());
        for (int i = 0; i < v.size(); ++i) identity[i] = i + 1;
        Rational id_value = max_prefix_inf_norm(v, identity);
        if (id_value < upper) upper = id_value;
    }

    OrderingSearch search;
    search.dim = v.dimension();
    std::map<std::vector<Rational>, int> groups;
    for (int j = 0; j < v.size(); ++j) ++groups[v.vec(j)];
    for (auto& [vec, count] : groups) {
        search.distinct.push_back(vec);
        search.remaining.push_back(count);
    }
    search.prefix.assign(search.dim, Rational(0));
    search.best = upper;
    search.dfs(v.size(), Rational(0));
    return search.best;
}

PartitionOracleResult optimal_partition(const InstanceFamily& fam, int cap) {
    const int n = fam.n();
    if (n > cap || n > 26) {
        throw Error(ErrorKind::size, "optimal_partition: n = " + std::to_string(n) +
                                         " exceeds the exact-search cap " +
                                         std::to_string(std::min(cap, 26)));
    }
    const Int denom = detail::family_denominator(fam);
    if (detail::fits_int64(denom)) return optimal_partition_impl<long long>(fam, denom);
    return optimal_partition_impl<Int>(fam, denom);
}

DeletionAverageReport deletion_average_check(const InstanceFamily& fam, const std::vector<int>& S) {
    if (fam.k() < 2) {
        throw Error(ErrorKind::dimension, "deletion_average_check: needs at least two hypergraphs");
    }
    auto r_opt = fam.uniform_r();
    if (!r_opt) throw Error(ErrorKind::uniformity, "deletion_average_check: family must be uniform");
    std::vector<int> subset = normalize_subset(fam.n(), S);
    if (subset.empty()) throw Error(ErrorKind::precondition, "deletion_average_check: S must be nonempty");

    const int r = *r_opt;
    const int k = fam.k();
    const Rational c = cover_slack(fam);
    const Rational s = Rational(static_cast<int>(subset.size()));
    const Rational phi_sq = phi_norm_sq(fam, subset);
    const std::vector<Rational> phi_full = phi(fam, subset);

    DeletionAverageReport rep;
    rep.lhs = 0;
    rep.x_sq_sum = 0;
    for (int j : subset) {
        std::vector<int> without;
        for (int u : subset) {
            if (u != j) without.push_back(u);
        }
        rep.lhs += phi_norm_sq(fam, without);
        const std::vector<Rational> phi_without = phi(fam, without);
        for (int i = 0; i < k - 1; ++i) {
            Rational x = phi_full[i] - phi_without[i];
            rep.x_sq_sum += x * x;
        }
    }
    rep.lhs /= s;
    rep.rhs = phi_sq - (Rational(2 * r) / s) * (phi_sq - Rational(k - 1) * c);
    rep.holds = rep.lhs <= rep.rhs;
    rep.x_sq_bound = Rational(2 * r) * Rational(k - 1) * c;
    rep.x_holds = rep.x_sq_sum <= rep.x_sq_bound;
    return rep;
}

}  // namespace balcov
