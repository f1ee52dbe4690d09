#include "balcov/generators.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <iterator>
#include <map>
#include <string>
#include <utility>

#include "balcov/core.hpp"

namespace balcov {

namespace {

Int binomial_capped(int n, int r, long long cap) {
    if (r < 0 || r > n) return 0;
    Int result = 1;
    for (int i = 1; i <= r; ++i) {
        result = result * (n - r + i) / i;
        if (result > cap) return Int(cap) + 1;
    }
    return result;
}

long long floor_div(const Int& num, const Int& den) {
    return (num / den).convert_to<long long>();
}

// ceil of a positive rational
long long rational_ceil(const Rational& q) {
    Int n = num(q), d = den(q);
    return ((n + d - 1) / d).convert_to<long long>();
}

long long round_nearest(const Rational& q) {
    return floor_div(2 * num(q) + den(q), 2 * den(q));
}

Edge random_subset(SplitMix64& rng, int n, int r) {
    // partial Fisher-Yates over 1..n, then canonical sort
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
    Edge edge;
    for (int i = 0; i < r; ++i) {
        std::size_t j = i + rng.next_below(n - i);
        std::swap(pool[i], pool[j]);
        edge.push_back(pool[i]);
    }
    std::sort(edge.begin(), edge.end());
    return edge;
}

using MassMap = std::map<Edge, long long>;

WeightedHypergraph hypergraph_from_masses(int n, const MassMap& masses, long long units) {
    EdgeMap edges;
    for (const auto& [edge, mass] : masses) {
        if (mass > 0) edges[edge] = Rational(mass, units);
    }
    return WeightedHypergraph(n, std::move(edges));
}

// Common driver for the uniform and mixed-cardinality random generators.
// Starts from a perfectly regular base (cyclic windows of cardinality
// base_card, incidence exactly base_card/n <= c) and randomizes by mass
// moves that are accepted only when every gaining vertex stays within c, so
// feasibility is invariant and no retry loop is needed. card_of supplies the
// cardinality of each move's target edge.
template <class CardFn>
InstanceFamily gen_random_impl(int n, int k, const Rational& c, std::uint64_t seed, int base_card,
                               CardFn card_of) {
    SplitMix64 rng(seed);
    constexpr long long kUnitChoices[] = {60, 84, 120, 180};
    const long long unit = kUnitChoices[rng.next_below(std::size(kUnitChoices))];
    const long long units = unit * n;
    const long long cap_units = floor_div(num(c) * units, den(c));

    std::vector<WeightedHypergraph> hypers;
    for (int i = 0; i < k; ++i) {
        MassMap masses;
        std::vector<long long> load(n + 1, 0);
        int offset = static_cast<int>(rng.next_below(n));
        for (int j = 0; j < n; ++j) {
            Edge e;
            for (int t = 0; t < base_card; ++t) e.push_back(1 + (offset + j + t) % n);
            std::sort(e.begin(), e.end());
            masses[e] += unit;
            for (int v : e) load[v] += unit;
        }
        const long long moves = 8LL * n;
        for (long long step = 0; step < moves; ++step) {
            std::size_t pick = rng.next_below(masses.size());
            auto src = std::next(masses.begin(), pick);
            if (src->second == 0) continue;
            Edge dst = random_subset(rng, n, card_of(rng));
            if (dst == src->first) continue;
            long long room = src->second;
            for (int v : dst) {
                if (std::binary_search(src->first.begin(), src->first.end(), v)) continue;
                room = std::min(room, cap_units - load[v]);
            }
            if (room < 1) continue;
            long long q = 1 + static_cast<long long>(rng.next_below(room));
            src->second -= q;
            masses[dst] += q;
            // shared vertices net out to zero across the two loops
            for (int v : src->first) load[v] -= q;
            for (int v : dst) load[v] += q;
        }
        hypers.push_back(hypergraph_from_masses(n, masses, units));
    }
    InstanceFamily fam(std::move(hypers));
    if (cover_slack(fam) > c) {
        throw Error(ErrorKind::internal,
                    "gen_random: mass walk left cover slack above " + format_rational(c));
    }
    return fam;
}

// ---- almost-regular generator internals ----

struct Bitsets {
    int words;
    // per left vertex, the set of adjacent right vertices of one block
    std::vector<std::vector<std::uint64_t>> adj;

    Bitsets(int n, int m) : words((m + 63) / 64), adj(n + 1, std::vector<std::uint64_t>(words)) {}

    void set(int left, int right_idx) { adj[left][right_idx >> 6] |= 1ULL << (right_idx & 63); }
};

int union_count(const Bitsets& bs, const std::vector<int>& subset) {
    int count = 0;
    for (int w = 0; w < bs.words; ++w) {
        std::uint64_t acc = 0;
        for (int a : subset) acc |= bs.adj[a][w];
        count += std::popcount(acc);
    }
    return count;
}

// minimum over enumerated s-subsets of the block-coverage difference
long long min_pair_gap_exhaustive(const Bitsets& b1, const Bitsets& b2, int n, int s) {
    long long best = -1;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(subset.size()) == s) {
            long long gap = std::llabs(
                static_cast<long long>(union_count(b1, subset)) - union_count(b2, subset));
            if (best < 0 || gap < best) best = gap;
            return;
        }
        for (int v = start; v <= n - (s - 1 - static_cast<int>(subset.size())); ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    rec(rec, 1);
    return best;
}

long long min_pair_gap_sampled(const Bitsets& b1, const Bitsets& b2, int n, int s,
                               SplitMix64& rng, int samples) {
    long long best = -1;
    for (int it = 0; it < samples; ++it) {
        Edge subset = random_subset(rng, n, s);
        long long gap = std::llabs(static_cast<long long>(union_count(b1, subset)) -
                                   union_count(b2, subset));
        if (best < 0 || gap < best) best = gap;
    }
    return best;
}

std::vector<int> balanced_neighbor_sample(SplitMix64& rng, int n, int degree,
                                          std::vector<long long>& load) {
    std::vector<int> chosen;
    std::vector<char> used(n + 1, 0);
    for (int pick = 0; pick < degree; ++pick) {
        long long min_load = -1;
        for (int v = 1; v <= n; ++v) {
            if (!used[v] && (min_load < 0 || load[v] < min_load)) min_load = load[v];
        }
        std::vector<int> pool;
        for (int v = 1; v <= n; ++v) {
            if (!used[v] && load[v] == min_load) pool.push_back(v);
        }
        int v = pool[rng.next_below(pool.size())];
        used[v] = 1;
        ++load[v];
        chosen.push_back(v);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace

InstanceFamily gen_random_family(int n, int k, int r, const Rational& c, std::uint64_t seed) {
    if (n < 1 || k < 1 || r < 1 || r > n) {
        throw Error(ErrorKind::parameter, "gen_random_family: need n >= r >= 1 and k >= 1");
    }
    if (c <= 0) throw Error(ErrorKind::parameter, "gen_random_family: slack target must be positive");
    if (c < Rational(r, n)) {
        throw Error(ErrorKind::infeasible,
                    "gen_random_family: cover slack below r/n = " + format_rational(Rational(r, n)) +
                        " is impossible (every vertex set carries total incidence r)");
    }
    if (c == Rational(r, n)) {
        // only perfectly balanced incidences work; use rotated cyclic windows
        SplitMix64 rng(seed);
        std::vector<WeightedHypergraph> hypers;
        for (int i = 0; i < k; ++i) {
            int offset = static_cast<int>(rng.next_below(n));
            EdgeMap edges;
            for (int j = 0; j < n; ++j) {
                Edge e;
                for (int t = 0; t < r; ++t) e.push_back(1 + (offset + j + t) % n);
                std::sort(e.begin(), e.end());
                edges[e] += Rational(1, n);
            }
            hypers.emplace_back(n, std::move(edges));
        }
        InstanceFamily fam(std::move(hypers));
        if (cover_slack(fam) != c) {
            throw Error(ErrorKind::internal, "gen_random_family: cyclic construction drifted");
        }
        return fam;
    }
    return gen_random_impl(n, k, c, seed, r, [r](SplitMix64&) { return r; });
}

InstanceFamily gen_random_general(int n, int k, int max_card, const Rational& c,
                                  std::uint64_t seed) {
    if (n < 1 || k < 1 || max_card < 1) {
        throw Error(ErrorKind::parameter, "gen_random_general: need n, k, max_card >= 1");
    }
    if (c <= 0) {
        throw Error(ErrorKind::parameter, "gen_random_general: slack target must be positive");
    }
    if (c < Rational(1, n)) {
        throw Error(ErrorKind::infeasible,
                    "gen_random_general: cover slack below 1/n is impossible");
    }
    const int top = std::min(max_card, n);
    if (c == Rational(1, n)) {
        // forced all-singleton uniform family
        std::vector<WeightedHypergraph> hypers;
        for (int i = 0; i < k; ++i) {
            EdgeMap edges;
            for (int j = 1; j <= n; ++j) edges[{j}] = Rational(1, n);
            hypers.emplace_back(n, std::move(edges));
        }
        return InstanceFamily(std::move(hypers));
    }
    // singleton base keeps the starting incidence at 1/n <= c
    return gen_random_impl(n, k, c, seed, 1, [top](SplitMix64& rng) {
        return 1 + static_cast<int>(rng.next_below(top));
    });
}

AlmostRegularResult gen_almost_regular(const AlmostRegularParams& params) {
    const Rational& c = params.c;
    const Rational& eps = params.eps;
    if (c <= 0 || c >= Rational(1, 4)) {
        throw Error(ErrorKind::parameter, "gen_almost_regular: need 0 < c < 1/4");
    }
    if (eps <= 0 || eps >= 1) {
        throw Error(ErrorKind::parameter, "gen_almost_regular: need 0 < eps < 1");
    }
    if (params.r < 1 || params.m < 1) {
        throw Error(ErrorKind::parameter, "gen_almost_regular: need r >= 1 and m >= 1");
    }
    Rational inv4c = 1 / (4 * c);
    if (den(inv4c) != 1) {
        throw Error(ErrorKind::parameter, "gen_almost_regular: (4c)^-1 = " +
                                              format_rational(inv4c) + " is not an integer");
    }
    Rational left = Rational(params.r) / c;
    if (den(left) != 1) {
        throw Error(ErrorKind::parameter,
                    "gen_almost_regular: left size r/c = " + format_rational(left) +
                        " is not an integer");
    }
    const int n = static_cast<int>(num(left).convert_to<long long>());
    const int m = params.m;
    const int s = static_cast<int>(num(inv4c).convert_to<long long>());
    if (s > n) throw Error(ErrorKind::parameter, "gen_almost_regular: subset size exceeds |A|");

    // target right degrees per block: round(r * (1 - (2i-1)*eps/4)), clamped
    // into the bullet-(c) window
    const long long deg_lo = rational_ceil(Rational(params.r) * (1 - eps));
    auto target_degree = [&](int block) {
        Rational want = Rational(params.r) * (1 - Rational(2 * block - 1) * eps / 4);
        long long d = round_nearest(want);
        return static_cast<int>(std::clamp(d, deg_lo, static_cast<long long>(params.r)));
    };
    const int d1 = target_degree(1);
    const int d2 = target_degree(2);
    if (d1 > n) throw Error(ErrorKind::parameter, "gen_almost_regular: degree exceeds |A|");

    AlmostRegularResult res;
    res.n = n;
    res.m = m;
    res.s = s;
    res.gap_threshold = eps * m / 40;
    res.failure_counts.assign(4, 0);

    SplitMix64 rng(params.seed);
    std::vector<Int> iid_threshold(3);
    if (params.iid) {
        for (int block = 1; block <= 2; ++block) {
            Rational p = c * (1 - Rational(2 * block - 1) * eps / 4);
            iid_threshold[block] = num(p) * (Int(1) << 64) / den(p);
        }
    }

    const Int subset_count = binomial_capped(n, s, params.exhaustive_cap);
    const bool exhaustive = subset_count <= params.exhaustive_cap;

    for (int attempt = 1; attempt <= params.retry_budget; ++attempt) {
        std::vector<std::vector<int>> block1(m), block2(m);
        if (params.iid) {
            for (int block = 1; block <= 2; ++block) {
                auto& rows = block == 1 ? block1 : block2;
                for (int v = 0; v < m; ++v) {
                    for (int a = 1; a <= n; ++a) {
                        if (Int(rng.next()) < iid_threshold[block]) rows[v].push_back(a);
                    }
                }
            }
        } else {
            // degree-exact: block 1 balanced over left loads; block 2 nested
            // inside its block-1 partner so per-subset coverage differences
            // concentrate
            std::vector<long long> load(n + 1, 0);
            for (int v = 0; v < m; ++v) {
                block1[v] = balanced_neighbor_sample(rng, n, d1, load);
            }
            for (int v = 0; v < m; ++v) {
                std::vector<int> pool = block1[v];
                rng.shuffle(pool);
                pool.resize(d2);
                std::sort(pool.begin(), pool.end());
                block2[v] = std::move(pool);
            }
        }

        res.attempts = attempt;
        res.block1 = block1;
        res.block2 = block2;
        res.bullets.clear();

        // (a) shape
        {
            AlmostRegularBullet b;
            b.name = "a";
            b.holds = true;
            b.detail = "|A| = " + std::to_string(n) + ", blocks of " + std::to_string(m);
            res.bullets.push_back(b);
        }
        // (b) left degrees <= c*m per block
        Bitsets bs1(n, m), bs2(n, m);
        std::vector<long long> ldeg1(n + 1, 0), ldeg2(n + 1, 0);
        for (int v = 0; v < m; ++v) {
            for (int a : block1[v]) {
                ++ldeg1[a];
                bs1.set(a, v);
            }
            for (int a : block2[v]) {
                ++ldeg2[a];
                bs2.set(a, v);
            }
        }
        {
            long long worst = 0;
            for (int a = 1; a <= n; ++a) worst = std::max({worst, ldeg1[a], ldeg2[a]});
            AlmostRegularBullet b;
            b.name = "b";
            b.holds = Rational(worst) <= c * m;
            b.detail = "max left degree " + std::to_string(worst) + " vs cap " +
                       format_rational(c * m);
            res.bullets.push_back(b);
        }
        // (c) right degrees in [(1-eps)r, r]
        {
            long long lo = -1, hi = -1;
            for (int v = 0; v < m; ++v) {
                for (long long d : {static_cast<long long>(block1[v].size()),
                                    static_cast<long long>(block2[v].size())}) {
                    if (lo < 0 || d < lo) lo = d;
                    if (d > hi) hi = d;
                }
            }
            AlmostRegularBullet b;
            b.name = "c";
            b.holds = Rational(lo) >= Rational(params.r) * (1 - eps) && hi <= params.r;
            b.detail = "right degrees in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                       "], window [" + format_rational(Rational(params.r) * (1 - eps)) + ", " +
                       std::to_string(params.r) + "]";
            res.bullets.push_back(b);
        }
        // (d) coverage gap over s-subsets
        {
            long long min_gap;
            if (exhaustive) {
                min_gap = min_pair_gap_exhaustive(bs1, bs2, n, s);
            } else {
                min_gap = min_pair_gap_sampled(bs1, bs2, n, s, rng, 100000);
            }
            res.exhaustive_d = exhaustive;
            AlmostRegularBullet b;
            b.name = "d";
            b.holds = Rational(min_gap) >= res.gap_threshold;
            b.detail = std::string(exhaustive ? "exhaustive" : "sampled") + " min gap " +
                       std::to_string(min_gap) + " vs threshold " +
                       format_rational(res.gap_threshold);
            res.bullets.push_back(b);
        }

        bool all = true;
        for (std::size_t i = 0; i < res.bullets.size(); ++i) {
            if (!res.bullets[i].holds) {
                ++res.failure_counts[i];
                all = false;
            }
        }
        if (all) {
            res.success = true;
            res.certified = exhaustive;
            return res;
        }
    }
    res.success = false;
    res.certified = false;
    return res;
}

VectorFamily gen_hadamard_vectors(int k) {
    if (k < 1 || (k & (k - 1)) != 0) {
        throw Error(ErrorKind::parameter,
                    "gen_hadamard_vectors: order " + std::to_string(k) + " is not a power of two");
    }
    std::vector<std::vector<int>> h(1, std::vector<int>(1, 1));
    while (static_cast<int>(h.size()) < k) {
        int t = static_cast<int>(h.size());
        std::vector<std::vector<int>> next(2 * t, std::vector<int>(2 * t));
        for (int i = 0; i < t; ++i) {
            for (int j = 0; j < t; ++j) {
                next[i][j] = h[i][j];
                next[i][j + t] = h[i][j];
                next[i + t][j] = h[i][j];
                next[i + t][j + t] = -h[i][j];
            }
        }
        h = std::move(next);
    }
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            long long dot = 0;
            for (int t = 0; t < k; ++t) dot += h[i][t] * h[j][t];
            if (dot != (i == j ? k : 0)) {
                throw Error(ErrorKind::internal, "gen_hadamard_vectors: H*H^T != k*I");
            }
        }
    }
    std::vector<std::vector<Rational>> vectors;
    for (int i = 0; i < k; ++i) {
        std::vector<Rational> row(k);
        for (int j = 0; j < k; ++j) row[j] = h[i][j];
        vectors.push_back(std::move(row));
    }
    for (int copy = 0; copy < k; ++copy) {
        std::vector<Rational> row(k, Rational(0));
        row[0] = -1;
        vectors.push_back(std::move(row));
    }
    VectorFamily fam(k, std::move(vectors));
    for (const auto& component : fam.component_sum()) {
        if (component != 0) {
            throw Error(ErrorKind::internal, "gen_hadamard_vectors: nonzero component sum");
        }
    }
    return fam;
}

InstanceFamily vectors_to_family(const VectorFamily& v, const Rational& c,
                                 const Rational& theta) {
    if (c <= 0) throw Error(ErrorKind::parameter, "vectors_to_family: c must be positive");
    if (theta <= 0 || theta >= 1) {
        throw Error(ErrorKind::parameter, "vectors_to_family: theta must lie in (0,1)");
    }
    const int d = v.dimension();
    const Rational norm_cap = theta * c;
    for (int j = 0; j < v.size(); ++j) {
        for (const auto& comp : v.vec(j)) {
            if (rational_abs(comp) > norm_cap) {
                throw Error(ErrorKind::reduction,
                            "vectors_to_family: vector " + std::to_string(j + 1) +
                                " has norm above theta*c = " + format_rational(norm_cap));
            }
        }
    }
    for (const auto& component : v.component_sum()) {
        if (component != 0) {
            throw Error(ErrorKind::reduction, "vectors_to_family: vectors must sum to zero");
        }
    }
    const long long min_n = rational_ceil(1 / ((1 - theta) * c));
    const int n = static_cast<int>(std::max<long long>(v.size(), min_n));

    std::vector<WeightedHypergraph> hypers;
    for (int i = 0; i < d + 1; ++i) {
        EdgeMap edges;
        for (int j = 1; j <= n; ++j) {
            Rational w = Rational(1, n);
            if (i < d && j <= v.size()) w += v.vec(j - 1)[i];
            if (w < 0) {
                throw Error(ErrorKind::reduction,
                            "vectors_to_family: weight for vertex " + std::to_string(j) +
                                " in hypergraph " + std::to_string(i + 1) +
                                " is negative; supply fewer vectors or a larger norm budget");
            }
            if (w > 0) edges[{j}] = w;
        }
        hypers.emplace_back(n, std::move(edges));
    }
    InstanceFamily fam(std::move(hypers));
    if (cover_slack(fam) > c) {
        throw Error(ErrorKind::internal, "vectors_to_family: cover slack exceeds c");
    }
    return fam;
}

}  // namespace balcov
