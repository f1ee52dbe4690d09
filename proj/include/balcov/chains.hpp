#pragma once

#include <vector>

#include "balcov/types.hpp"

namespace balcov {

enum class ChainAlgo { greedy, two, steinitz };

std::string chain_algo_name(ChainAlgo algo);
ChainAlgo chain_algo_from_name(const std::string& name);

// Backward-deletion workspace. Keeps per-vertex marginals delta_i(j, S), the
// totals w_i*(S), and ||phi(S)||^2 up to date in integer numerators over the
// family's common denominator, so one deletion costs O(k * incident edges)
// and a candidate evaluation costs O(k).
class DeletionState {
public:
    explicit DeletionState(const InstanceFamily& fam, bool audit = false);

    int active_count() const { return active_count_; }
    bool contains(int j) const { return in_set_.at(j) != 0; }
    std::vector<int> active() const;  // sorted

    Rational w_star_total(int i) const;
    Rational delta_value(int i, int j) const;
    std::vector<Rational> phi() const;
    Rational phi_norm_sq() const;
    // phi(S) - phi(S \ {j}), components i < k-1
    std::vector<Rational> x_vector(int j) const;
    Rational phi_norm_sq_after_delete(int j) const;
    Rational unbalance() const;

    void remove(int j);
    // From-scratch recomputation of every table; throws ErrorKind::internal on drift.
    void audit_check() const;

private:
    struct EdgeRec {
        int hyper;
        std::vector<int> verts;
        Int units;
        int missing;
    };

    void x_units(int j, std::vector<Int>& out) const;

    int n_, k_;
    bool audit_;
    Int denom_;     // shared denominator D
    Int denom_sq_;  // D^2
    std::vector<EdgeRec> edges_;
    std::vector<std::vector<int>> vertex_edges_;
    std::vector<char> in_set_;
    int active_count_;
    std::vector<std::vector<Int>> delta_units_;  // k x (n+1)
    std::vector<Int> wstar_units_;               // k
    Int phi_sq_units_;                           // over D^2
};

// Potential-descent order: repeatedly delete the j minimizing ||phi(S\{j})||^2
// (ties: smallest vertex) while |S| > 2r, then the rest in increasing order.
// Guarantees ||phi(S_j)||^2 <= (k-1)c above 2r and, whenever 2c <= k-1,
// unbalance(S_j)^2 <= 2(k-1)c at every prefix.
Chain build_chain_greedy(const InstanceFamily& fam);

// k = 2 rule: delete a j whose marginal difference delta_1 - delta_2 matches
// the sign of w_1*(S) - w_2*(S); every prefix then satisfies unbalance <= c.
Chain build_chain_two(const InstanceFamily& fam);

// 1-uniform route through an ordering with all prefix sums of the difference
// vectors bounded by (k-1)c; prefixes satisfy unbalance <= 2(k-1)c.
Chain build_chain_steinitz(const InstanceFamily& fam);

Chain build_chain(const InstanceFamily& fam, ChainAlgo algo);

// Recompute the trace for an arbitrary order.
Chain chain_from_order(const InstanceFamily& fam, std::vector<int> order);

struct HalfCoverMargin {
    Rational residual;  // m/2 - c*m - coverage(S, block)
    bool holds = false; // residual < 0 or residual^2 < 2(k-1)c * m^2
};

struct HalfCoverResult {
    std::vector<int> S;            // last prefix with all block coverages <= m/2
    int j = 0;                     // first prefix index exceeding m/2 somewhere
    std::vector<long long> coverage;  // |N(S, B_i)| per block
    Rational slack;                // max left degree / m
    Rational margin_bound_sq;      // 2(k-1) * slack
    std::vector<HalfCoverMargin> margins;
    bool margins_hold = false;
};

// Walks the chain on the graph's left set and stops just before any block
// becomes more than half covered.
HalfCoverResult half_cover(const BlockedBipartiteGraph& g, const Chain& chain);

// Square of the per-algorithm step bound: 2(k-1)c, c^2, or (2(k-1)c)^2.
Rational chain_bound_sq(const InstanceFamily& fam, ChainAlgo algo);

// Largest violated prefix, if any: returns names of violated inequalities.
std::vector<std::string> chain_violations(const InstanceFamily& fam, const Chain& chain,
                                          ChainAlgo algo);

}  // namespace balcov
