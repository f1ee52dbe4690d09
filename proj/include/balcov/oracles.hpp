#pragma once

#include <vector>

#include "balcov/types.hpp"

namespace balcov {

struct ChainOracleResult {
    Chain chain;
    Rational value;  // min over all chains of the max prefix unbalance
};

// Exact optimum by subset dynamic programming over all 2^n prefixes:
// M(S) = max(unbalance(S), min_{j not in S} M(S + j)), M([n]) = 0. Returns
// the lexicographically smallest optimal chain. n above cap is an error,
// never an approximation.
ChainOracleResult optimal_chain(const InstanceFamily& fam, int cap = 22);

// Exact minimum over all orderings of the maximum prefix infinity-norm.
// Branch-and-bound with duplicate-vector grouping, seeded by the
// constructive ordering as the initial upper bound.
Rational min_ordering_prefix_norm(const VectorFamily& v, int cap = 10);

struct PartitionOracleResult {
    PartitionResult partition;
    Rational value;  // min over all bipartitions of the max gap
};

PartitionOracleResult optimal_partition(const InstanceFamily& fam, int cap = 22);

// Exact evaluation of the deletion-average inequality on (F, S):
//   (1/|S|) sum_{j in S} ||phi(S\{j})||^2
//     <= ||phi(S)||^2 - (2r/|S|)(||phi(S)||^2 - (k-1)c)
// together with sum_j ||phi(S) - phi(S\{j})||^2 <= 2r(k-1)c. Both must hold
// for every valid input; a false flag indicates a library bug upstream.
struct DeletionAverageReport {
    Rational lhs;
    Rational rhs;
    bool holds = false;
    Rational x_sq_sum;
    Rational x_sq_bound;
    bool x_holds = false;
};

DeletionAverageReport deletion_average_check(const InstanceFamily& fam, const std::vector<int>& S);

}  // namespace balcov
