#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "balcov/chains.hpp"
#include "balcov/core.hpp"
#include "balcov/generators.hpp"
#include "balcov/oracles.hpp"
#include "balcov/partition.hpp"
#include "balcov/steinitz.hpp"
#include "fixtures.hpp"

using namespace balcov;

namespace {

// reference minimum over all orderings, for tiny vector families
Rational brute_min_prefix_norm(const VectorFamily& v) {
    std::vector<int> order(v.size());
    std::iota(order.begin(), order.end(), 1);
    Rational best(-1);
    do {
        Rational m = max_prefix_inf_norm(v, order);
        if (best < 0 || m < best) best = m;
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

}  // namespace

TEST_CASE("exhaustive chain search on the worked instance") {
    ChainOracleResult res = optimal_chain(fixtures::e1());
    CHECK(res.value == Rational(3, 10));
    CHECK(res.chain.max_trace() == res.value);
}

TEST_CASE("identical hypergraphs admit a perfectly balanced chain") {
    ChainOracleResult res = optimal_chain(fixtures::identical_uniform(6, 3));
    CHECK(res.value == 0);
}

TEST_CASE("greedy chains are sandwiched between the optimum and the bound") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        int k = 2 + static_cast<int>(seed % 3);
        int n = 6 + static_cast<int>(seed % 5);
        Rational c(2, 5);
        InstanceFamily fam = gen_random_family(n, k, 2, c, seed);
        ChainOracleResult best = optimal_chain(fam);
        Chain greedy = build_chain_greedy(fam);
        CHECK(best.value <= greedy.max_trace());
        Rational bound_sq = Rational(2 * (k - 1)) * c;
        CHECK(best.value * best.value <= bound_sq);
    }
}

TEST_CASE("chain search refuses instances beyond its cap") {
    InstanceFamily fam = gen_random_family(6, 2, 1, Rational(1, 2), 5);
    CHECK_THROWS_AS(optimal_chain(fam, 4), Error);
    try {
        optimal_chain(fam, 4);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::size);
    }
}

TEST_CASE("exhaustive partition search on the worked instance") {
    PartitionOracleResult res = optimal_partition(fixtures::e1());
    CHECK(res.value == 0);
    CHECK(res.partition.max_gap() == 0);
    CHECK(res.partition.bound_kind == BoundKind::exhaustive);
    CHECK(res.partition.certified);
    // orientation: the side containing the last vertex is called S
    CHECK(res.partition.S == std::vector<int>{3, 4});
    CHECK(res.partition.T == std::vector<int>{1, 2});
}

TEST_CASE("one-vertex partition search is forced") {
    EdgeMap w{{{1}, Rational(1)}};
    std::vector<WeightedHypergraph> hypers;
    hypers.emplace_back(1, std::move(w));
    InstanceFamily fam(std::move(hypers));
    PartitionOracleResult res = optimal_partition(fam);
    CHECK(res.partition.S == std::vector<int>{1});
    CHECK(res.partition.T.empty());
    CHECK(res.value == 1);
}

TEST_CASE("identical hypergraphs on an even vertex count split evenly") {
    PartitionOracleResult res = optimal_partition(fixtures::identical_uniform(6, 2));
    CHECK(res.value == 0);
}

TEST_CASE("partition search dominates both constructive routes") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        InstanceFamily fam = gen_random_general(8, 2, 2, Rational(2, 5), seed);
        PartitionOracleResult best = optimal_partition(fam);
        CHECK(best.value <= partition_tucker(fam).max_gap());
        CHECK(best.value <= partition_pairwise(fam).max_gap());
    }
}

TEST_CASE("partition search refuses instances beyond its cap") {
    InstanceFamily fam = gen_random_family(6, 2, 1, Rational(1, 2), 5);
    CHECK_THROWS_AS(optimal_partition(fam, 4), Error);
}

TEST_CASE("ordering search fixtures") {
    std::vector<std::vector<Rational>> pm = {{Rational(1)}, {Rational(-1)}};
    CHECK(min_ordering_prefix_norm(VectorFamily(1, pm)) == 1);

    std::vector<std::vector<Rational>> axes = {{Rational(1), Rational(0)},
                                               {Rational(0), Rational(1)},
                                               {Rational(-1), Rational(0)},
                                               {Rational(0), Rational(-1)}};
    CHECK(min_ordering_prefix_norm(VectorFamily(2, axes)) == 1);

    CHECK(min_ordering_prefix_norm(gen_hadamard_vectors(2)) == 1);
}

TEST_CASE("ordering search agrees with brute force and lower-bounds the heuristic") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        int d = 1 + static_cast<int>(seed % 3);
        int n = 3 + static_cast<int>(seed % 4);
        SplitMix64 rng(seed * 71 + 5);
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> total(d, Rational(0));
        for (int j = 0; j + 1 < n; ++j) {
            std::vector<Rational> row(d);
            for (int i = 0; i < d; ++i) {
                row[i] = Rational(static_cast<long long>(rng.next_below(21)) - 10, 10);
                total[i] += row[i];
            }
            rows.push_back(std::move(row));
        }
        std::vector<Rational> last(d);
        for (int i = 0; i < d; ++i) last[i] = -total[i];
        rows.push_back(std::move(last));
        VectorFamily v(d, rows);

        Rational best = min_ordering_prefix_norm(v);
        CHECK(best == brute_min_prefix_norm(v));
        CHECK(best <= max_prefix_inf_norm(v, steinitz_order(v)));
    }
}

TEST_CASE("ordering search refuses oversized inputs") {
    std::vector<std::vector<Rational>> rows(6, std::vector<Rational>{Rational(0)});
    CHECK_THROWS_AS(min_ordering_prefix_norm(VectorFamily(1, rows), 4), Error);
    try {
        min_ordering_prefix_norm(VectorFamily(1, rows), 4);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::size);
    }
}

TEST_CASE("deletion inequality audit on the worked instance") {
    DeletionAverageReport full = deletion_average_check(fixtures::e1(), {1, 2, 3, 4});
    CHECK(full.lhs == Rational(9, 100));
    CHECK(full.rhs == Rational(1, 5));
    CHECK(full.holds);
    CHECK(full.x_sq_sum == Rational(9, 25));
    CHECK(full.x_sq_bound == Rational(4, 5));
    CHECK(full.x_holds);

    DeletionAverageReport half = deletion_average_check(fixtures::e1(), {1, 2});
    CHECK(half.lhs == Rational(9, 100));
    CHECK(half.rhs == Rational(2, 5));
    CHECK(half.holds);
}

TEST_CASE("deletion inequality audit degenerates for identical hypergraphs") {
    DeletionAverageReport rep = deletion_average_check(fixtures::identical_uniform(5, 2), {1, 3, 5});
    CHECK(rep.lhs == 0);
    CHECK(rep.holds);
}

TEST_CASE("deletion inequality audit input validation") {
    CHECK_THROWS_AS(deletion_average_check(fixtures::e2_single(), {1, 2}), Error);
    try {
        deletion_average_check(fixtures::e2_single(), {1, 2});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::dimension);
    }

    EdgeMap mixed{{{1}, Rational(1, 2)}, {{1, 2}, Rational(1, 2)}};
    EdgeMap singles{{{1}, Rational(1, 2)}, {{2}, Rational(1, 2)}};
    std::vector<WeightedHypergraph> hypers;
    hypers.emplace_back(2, std::move(mixed));
    hypers.emplace_back(2, std::move(singles));
    InstanceFamily nonuniform(std::move(hypers));
    try {
        deletion_average_check(nonuniform, {1});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::uniformity);
    }

    try {
        deletion_average_check(fixtures::e1(), {});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::precondition);
    }
}

TEST_CASE("deletion inequality holds across random uniform families") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        int k = 2 + static_cast<int>(seed % 3);
        int r = 1 + static_cast<int>(seed % 2);
        int n = 6 + static_cast<int>(seed % 6);
        InstanceFamily fam = gen_random_family(n, k, r, Rational(2, 5), seed);
        SplitMix64 rng(seed + 1000);
        std::vector<int> S;
        for (int v = 1; v <= n; ++v) {
            if (rng.next_below(2) == 0) S.push_back(v);
        }
        if (S.empty()) S.push_back(1);
        DeletionAverageReport rep = deletion_average_check(fam, S);
        CHECK(rep.holds);
        CHECK(rep.x_holds);
    }
}
