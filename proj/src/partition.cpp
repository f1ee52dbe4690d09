#include "balcov/partition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "balcov/core.hpp"
#include "balcov/generators.hpp"
#include "subset_tables.hpp"

namespace balcov {

namespace {

Rational inf_norm(const std::vector<Rational>& v) {
    Rational m = 0;
    for (const auto& x : v) {
        Rational a = rational_abs(x);
        if (a > m) m = a;
    }
    return m;
}

std::vector<int> mask_vertices(std::uint32_t mask, int n) {
    std::vector<int> out;
    for (int v = 1; v <= n; ++v) {
        if (mask & (1u << (v - 1))) out.push_back(v);
    }
    return out;
}

PartitionResult finish_partition(const InstanceFamily& fam, std::vector<int> S,
                                 std::vector<int> T, BoundKind kind, bool certified) {
    PartitionResult res;
    res.S = std::move(S);
    res.T = std::move(T);
    res.bound_kind = kind;
    res.certified = certified;
    for (int i = 0; i < fam.k(); ++i) {
        res.gaps.push_back(
            rational_abs(w_star(fam.hyper(i), res.S) - w_star(fam.hyper(i), res.T)));
    }
    return res;
}

template <class I>
PartitionResult tucker_exact(const InstanceFamily& fam, const Rational& c) {
    const int n = fam.n();
    const int k = fam.k();
    auto tables = detail::build_subset_tables<I>(fam);
    const std::uint32_t full = tables.full;
    const std::size_t size = std::size_t(1) << n;

    std::vector<char> good(size);
    std::vector<signed char> best(size);
    for (std::uint32_t mask = 0; mask < size; ++mask) {
        good[mask] = tables.good(mask) ? 1 : 0;
        int b = good[mask] ? std::popcount(mask) : 0;
        for (std::uint32_t rest = mask; rest;) {
            std::uint32_t bit = rest & (0u - rest);
            rest ^= bit;
            if (best[mask ^ bit] > b) b = best[mask ^ bit];
        }
        best[mask] = static_cast<signed char>(b);
    }

    bool found = false;
    std::uint32_t t0 = 0;
    for (std::uint32_t s0 = 0; s0 < size && !found; ++s0) {
        if (!good[s0]) continue;
        std::uint32_t comp = full ^ s0;
        if (std::popcount(s0) + best[comp] < n - k) continue;
        // walk down to a good subset realizing best[comp]
        std::uint32_t cur = comp;
        while (best[cur] != std::popcount(cur)) {
            bool moved = false;
            for (std::uint32_t rest = cur; rest;) {
                std::uint32_t bit = rest & (0u - rest);
                rest ^= bit;
                if (best[cur ^ bit] == best[cur]) {
                    cur ^= bit;
                    moved = true;
                    break;
                }
            }
            if (!moved) throw Error(ErrorKind::internal, "tucker walk: no child keeps best");
        }
        t0 = cur;
        found = true;
    }

    std::vector<int> S, T;
    if (found) {
        S = mask_vertices(full ^ t0, n);  // S0 together with the uncovered rest
        T = mask_vertices(t0, n);
    } else {
        // no witness pair below the threshold: fall back to ([n], {});
        // here n < 2k, and c >= 1/n > 1/(2k) makes the 2kc bound >= 1
        S = mask_vertices(full, n);
    }
    PartitionResult res = finish_partition(fam, std::move(S), std::move(T),
                                           BoundKind::tucker_2kc, true);
    Rational bound = Rational(2 * k) * c;
    for (const auto& gap : res.gaps) {
        if (gap > bound) {
            throw Error(ErrorKind::internal,
                        "tucker partition: gap " + format_rational(gap) + " exceeds 2kc = " +
                            format_rational(bound));
        }
    }
    return res;
}

// Incremental objective state for the local-search fallback: per edge, how
// many of its vertices currently sit on the S side.
struct FlipState {
    struct EdgeRec {
        int hyper;
        int size;
        int in_s;
        Int units;
    };
    Int denom;
    std::vector<EdgeRec> edges;
    std::vector<std::vector<int>> incident;  // vertex (1-based) -> edge ids
    std::vector<Int> ws, wt;                 // per hypergraph, units
    std::vector<signed char> side;           // +1 = S, -1 = T

    FlipState(const InstanceFamily& fam, const std::vector<signed char>& assignment)
        : denom(detail::family_denominator(fam)),
          incident(fam.n() + 1),
          ws(fam.k(), Int(0)),
          wt(fam.k(), Int(0)),
          side(assignment) {
        for (int i = 0; i < fam.k(); ++i) {
            for (const auto& [edge, weight] : fam.hyper(i).edges()) {
                EdgeRec rec;
                rec.hyper = i;
                rec.size = static_cast<int>(edge.size());
                rec.in_s = 0;
                for (int v : edge) {
                    if (side[v] > 0) ++rec.in_s;
                    incident[v].push_back(static_cast<int>(edges.size()));
                }
                rec.units = num(weight) * (denom / den(weight));
                if (rec.in_s == rec.size) ws[i] += rec.units;
                if (rec.in_s == 0) wt[i] += rec.units;
                edges.push_back(std::move(rec));
            }
        }
    }

    void flip(int v) {
        int dir = side[v] > 0 ? -1 : 1;
        side[v] = static_cast<signed char>(-side[v]);
        for (int e : incident[v]) {
            auto& rec = edges[e];
            if (rec.in_s == rec.size) ws[rec.hyper] -= rec.units;
            if (rec.in_s == 0) wt[rec.hyper] -= rec.units;
            rec.in_s += dir;
            if (rec.in_s == rec.size) ws[rec.hyper] += rec.units;
            if (rec.in_s == 0) wt[rec.hyper] += rec.units;
        }
    }

    Int objective_units() const {
        Int worst = 0;
        for (std::size_t i = 0; i < ws.size(); ++i) {
            Int d = ws[i] - wt[i];
            if (d < 0) d = -d;
            if (d > worst) worst = d;
        }
        return worst;
    }
};

PartitionResult tucker_local_search(const InstanceFamily& fam, std::uint64_t seed) {
    const int n = fam.n();
    SplitMix64 rng(seed);
    std::vector<signed char> best_side;
    Int best_obj;
    bool have_best = false;
    const int restarts = 4;
    const long long steps = 16LL * n * n;
    for (int restart = 0; restart < restarts; ++restart) {
        std::vector<signed char> side(n + 1);
        for (int v = 1; v <= n; ++v) side[v] = (rng.next() & 1) ? 1 : -1;
        FlipState state(fam, side);
        Int obj = state.objective_units();
        for (long long step = 0; step < steps; ++step) {
            int v = static_cast<int>(rng.next_below(n)) + 1;
            state.flip(v);
            Int cand = state.objective_units();
            if (cand <= obj) {
                obj = std::move(cand);
            } else {
                state.flip(v);
            }
        }
        if (!have_best || obj < best_obj) {
            best_obj = obj;
            best_side = state.side;
            have_best = true;
        }
    }
    std::vector<int> S, T;
    for (int v = 1; v <= n; ++v) (best_side[v] > 0 ? S : T).push_back(v);
    return finish_partition(fam, std::move(S), std::move(T), BoundKind::heuristic, false);
}

}  // namespace

ExtremePoint extreme_point(const RationalMatrix& x) {
    if (x.empty()) throw Error(ErrorKind::dimension, "extreme_point: matrix has no rows");
    const std::size_t n = x[0].size();
    for (const auto& row : x) {
        if (row.size() != n) throw Error(ErrorKind::dimension, "extreme_point: ragged matrix");
    }
    ExtremePoint ep;
    ep.a.assign(n, Rational(0));
    if (n > 0) descend_to_extreme_point(x, ep.a, Rational(-1), Rational(1));
    ep.p_is_zero = true;
    for (std::size_t j = 0; j < n; ++j) {
        if (ep.a[j] != 0) ep.p_is_zero = false;
        if (ep.a[j] > -1 && ep.a[j] < 1) ep.fractional.push_back(static_cast<int>(j) + 1);
    }
    // the non-tight columns must be independent, hence at most rank(X) of them
    if (!ep.fractional.empty()) {
        std::vector<int> cols;
        for (int j : ep.fractional) cols.push_back(j - 1);
        if (kernel_vector(x, cols)) {
            throw Error(ErrorKind::internal, "extreme_point: fractional columns are dependent");
        }
    }
    return ep;
}

SpencerResult spencer_color(const std::vector<std::vector<Rational>>& vectors,
                            const std::vector<Rational>& target, int cap) {
    const int p = static_cast<int>(vectors.size());
    if (cap < 0 || p > cap) {
        throw Error(ErrorKind::size, "spencer_color: " + std::to_string(p) +
                                         " vectors exceed cap " + std::to_string(cap));
    }
    const std::size_t dim = target.size();
    for (const auto& v : vectors) {
        if (v.size() != dim) {
            throw Error(ErrorKind::dimension, "spencer_color: vector dimension mismatch");
        }
    }
    SpencerResult best;
    if (p == 0) {
        best.norm = inf_norm(target);
        return best;
    }
    std::vector<Rational> sum(dim);
    bool have = false;
    // mask bit (p-1-idx) chooses the sign of vector idx, 0 -> +1, so scanning
    // masks upward is lexicographic order on signings with +1 before -1
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << p); ++mask) {
        std::vector<int> signs(p);
        for (int idx = 0; idx < p; ++idx) {
            signs[idx] = (mask >> (p - 1 - idx)) & 1 ? -1 : 1;
        }
        for (std::size_t i = 0; i < dim; ++i) {
            sum[i] = -target[i];
            for (int idx = 0; idx < p; ++idx) {
                if (signs[idx] > 0) {
                    sum[i] += vectors[idx][i];
                } else {
                    sum[i] -= vectors[idx][i];
                }
            }
        }
        Rational norm = inf_norm(sum);
        if (!have || norm < best.norm) {
            best.norm = std::move(norm);
            best.signs = std::move(signs);
            have = true;
        }
    }
    return best;
}

PartitionResult partition_pairwise(const InstanceFamily& fam) {
    const int n = fam.n();
    const int k = fam.k();
    for (int i = 0; i < k; ++i) {
        for (const auto& [edge, weight] : fam.hyper(i).edges()) {
            (void)weight;
            if (edge.size() > 2) {
                throw Error(ErrorKind::arity,
                            "partition_pairwise: hypergraph " + std::to_string(i + 1) +
                                " has an edge of cardinality " + std::to_string(edge.size()) +
                                ", at most 2 supported");
            }
        }
    }
    const Rational c = cover_slack(fam);

    // x_{ij} = w_i({j}) + (1/2) sum_{j'} w_i({j,j'})
    RationalMatrix x(k, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < k; ++i) {
        for (const auto& [edge, weight] : fam.hyper(i).edges()) {
            if (edge.size() == 1) {
                x[i][edge[0] - 1] += weight;
            } else {
                x[i][edge[0] - 1] += weight / 2;
                x[i][edge[1] - 1] += weight / 2;
            }
        }
    }
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < n; ++j) {
            if (rational_abs(x[i][j]) > c) {
                throw Error(ErrorKind::internal,
                            "partition_pairwise: column norm exceeds cover slack");
            }
        }
    }

    ExtremePoint ep = extreme_point(x);
    if (static_cast<int>(ep.fractional.size()) > k) {
        throw Error(ErrorKind::internal, "partition_pairwise: more than k fractional columns");
    }

    // the signing has to replace the fractional mass sum_{j in J} a_j x_j
    std::vector<std::vector<Rational>> cols;
    std::vector<Rational> target(k, Rational(0));
    for (int j : ep.fractional) {
        std::vector<Rational> col(k);
        for (int i = 0; i < k; ++i) {
            col[i] = x[i][j - 1];
            target[i] += ep.a[j - 1] * x[i][j - 1];
        }
        cols.push_back(std::move(col));
    }
    SpencerResult colored = spencer_color(cols, target);

    std::vector<int> xi(n, 0);
    for (int j = 1; j <= n; ++j) {
        if (ep.a[j - 1] == 1) {
            xi[j - 1] = 1;
        } else if (ep.a[j - 1] == -1) {
            xi[j - 1] = -1;
        }
    }
    for (std::size_t idx = 0; idx < ep.fractional.size(); ++idx) {
        xi[ep.fractional[idx] - 1] = colored.signs[idx];
    }

    std::vector<int> S, T;
    for (int j = 1; j <= n; ++j) (xi[j - 1] > 0 ? S : T).push_back(j);
    PartitionResult res =
        finish_partition(fam, std::move(S), std::move(T), BoundKind::pairwise_6sqrtk, true);

    // telescoping check: |sum_j xi_j x_{ij}| must equal |w_i*(S) - w_i*(T)|
    for (int i = 0; i < k; ++i) {
        Rational signed_sum = 0;
        for (int j = 0; j < n; ++j) {
            if (xi[j] > 0) {
                signed_sum += x[i][j];
            } else {
                signed_sum -= x[i][j];
            }
        }
        if (rational_abs(signed_sum) != res.gaps[i]) {
            throw Error(ErrorKind::internal,
                        "partition_pairwise: signed column sum " +
                            format_rational(rational_abs(signed_sum)) +
                            " disagrees with recomputed gap " + format_rational(res.gaps[i]));
        }
    }
    const Rational bound_sq = Rational(36 * k) * c * c;
    for (const auto& gap : res.gaps) {
        if (gap * gap > bound_sq) {
            throw Error(ErrorKind::internal, "partition_pairwise: gap " + format_rational(gap) +
                                                 " exceeds 6*sqrt(k)*c");
        }
    }
    return res;
}

PartitionResult partition_tucker(const InstanceFamily& fam, int cap, std::uint64_t seed) {
    const int n = fam.n();
    if (n > cap) return tucker_local_search(fam, seed);
    if (n > 26) {
        throw Error(ErrorKind::size,
                    "partition_tucker: exact search over 2^" + std::to_string(n) +
                        " subsets is out of range; lower the cap to use local search");
    }
    const Rational c = cover_slack(fam);
    if (detail::fits_int64(detail::family_denominator(fam))) {
        return tucker_exact<long long>(fam, c);
    }
    return tucker_exact<Int>(fam, c);
}

}  // namespace balcov
