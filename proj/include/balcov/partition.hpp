#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "balcov/linalg.hpp"
#include "balcov/types.hpp"

namespace balcov {

// Extreme point of P = { a in [-1,1]^n : X a = 0 }, reached by repeatedly
// moving along a kernel direction of the non-tight columns until another
// coordinate hits +-1. `fractional` lists the 1-based coordinates left
// strictly inside (-1,1); there are at most rank(X) of them.
struct ExtremePoint {
    std::vector<Rational> a;
    std::vector<int> fractional;
    bool p_is_zero = false;  // P = {0}, i.e. the only extreme point is the origin
};

ExtremePoint extreme_point(const RationalMatrix& x_columns_by_rows);

// Exhaustive signing of at most `cap` vectors: minimizes the sup norm of
// sum_j b_j v_j - target over b in {+1,-1}^p. Ties resolve to the
// lexicographically smallest signing with +1 ordered before -1.
struct SpencerResult {
    std::vector<int> signs;
    Rational norm;
};

SpencerResult spencer_color(const std::vector<std::vector<Rational>>& vectors,
                            const std::vector<Rational>& target, int cap = 24);

// Partition for families whose edges have at most two vertices. Rounds an
// extreme point of the induced column polytope and signs the fractional
// remainder exhaustively; the result is certified against 36*k*c^2 where c
// is the cover slack.
PartitionResult partition_pairwise(const InstanceFamily& fam);

// Partition via an exhaustive search for a pair of disjoint sets S0, T0 with
// |S0| + |T0| >= n - k where both halves of each split carry at most half of
// every weight mass. Exact up to `cap` vertices (certified gap <= 2*k*c);
// beyond the cap a seeded local search runs instead and the result is
// reported uncertified.
PartitionResult partition_tucker(const InstanceFamily& fam, int cap = 20,
                                 std::uint64_t seed = 0);

}  // namespace balcov
