#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "balcov/types.hpp"

namespace balcov {

// Fixed, documented PRNG (splitmix64) so seeded outputs are bit-identical
// across platforms and standard libraries: state advances by
// 0x9E3779B97F4A7C15; output mix multiplies by 0xBF58476D1CE4E5B9 and
// 0x94D049BB133111EB with xor-shifts 30, 27, 31. See README for the contract.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform over {0, ..., bound-1}; plain modulo, bias is negligible at the
    // bounds used here and keeps the stream consumption predictable
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    template <class T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::swap(values[i - 1], values[next_below(i)]);
        }
    }

private:
    std::uint64_t state_;
};

// Random r-uniform family on [n] with cover_slack <= c, deterministic in
// seed. Starts from rotated cyclic windows (incidence exactly r/n) and
// shuffles integer edge masses with moves that keep every vertex within c,
// so any feasible target (c >= r/n) succeeds.
InstanceFamily gen_random_family(int n, int k, int r, const Rational& c, std::uint64_t seed);

// Same contract with mixed edge cardinalities in [1, max_card].
InstanceFamily gen_random_general(int n, int k, int max_card, const Rational& c,
                                  std::uint64_t seed);

struct AlmostRegularParams {
    Rational c;                 // 0 < c < 1/4, (4c)^{-1} and r/c integers
    Rational eps;               // 0 < eps < 1
    int r = 0;
    int m = 0;
    std::uint64_t seed = 0;
    int retry_budget = 200;
    bool iid = false;           // sample edges independently instead of the default sampler
    long long exhaustive_cap = 10'000'000;  // enumerate (d) when C(n, s) fits, else sample
};

struct AlmostRegularBullet {
    std::string name;       // "a".."d"
    bool holds = false;
    std::string detail;     // worst datum observed, human-readable
};

// Two near-regular bipartite blocks on a shared left set, plus the exact
// verification outcome for the four target properties:
//   (a) |A| = r/c and two blocks of m right vertices,
//   (b) every left vertex has at most c*m neighbors in each block,
//   (c) every right degree lies in [(1-eps)*r, r],
//   (d) every s-subset of A with s = (4c)^{-1} has block-coverage counts
//       differing by at least eps*m/40.
struct AlmostRegularResult {
    int n = 0;
    int m = 0;
    int s = 0;
    Rational gap_threshold;                  // eps*m/40
    std::vector<std::vector<int>> block1;    // sorted neighbor lists, 1-based
    std::vector<std::vector<int>> block2;
    int attempts = 0;
    bool success = false;
    bool exhaustive_d = false;               // (d) enumerated vs sampled
    bool certified = false;                  // success with exhaustive (d)
    std::vector<AlmostRegularBullet> bullets;   // last attempt, a..d
    std::vector<int> failure_counts;            // per bullet, across all attempts
};

// Retries up to retry_budget samples; a budget-exhausted result is returned
// with success=false rather than thrown, so the caller can report which
// bullet failed most often.
AlmostRegularResult gen_almost_regular(const AlmostRegularParams& params);

// Rows of the Sylvester Hadamard matrix of order k plus k copies of -e_1;
// sum-zero, all infinity-norms 1. k must be a power of two.
VectorFamily gen_hadamard_vectors(int k);

// Lifts a sum-zero vector family with norms <= theta*c into d+1 singleton
// hypergraphs: w_{d+1}(j) = 1/n and w_i(j) = 1/n + v_j[i], padding with zero
// vectors until n >= 1/((1-theta)*c). Zero weights are omitted edges.
InstanceFamily vectors_to_family(const VectorFamily& v, const Rational& c, const Rational& theta);

}  // namespace balcov
