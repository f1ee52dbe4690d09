#include "balcov/types.hpp"

#include <algorithm>

namespace balcov {

WeightedHypergraph::WeightedHypergraph(int n, EdgeMap edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw Error(ErrorKind::validation, "ground set must be nonempty");
    if (edges_.empty()) throw Error(ErrorKind::validation, "hypergraph has no edges");
    Rational total = 0;
    std::optional<int> r;
    bool uniform = true;
    for (const auto& [edge, weight] : edges_) {
        if (edge.empty()) throw Error(ErrorKind::validation, "empty edge");
        int prev = 0;
        for (int v : edge) {
            if (v < 1 || v > n_)
                throw Error(ErrorKind::validation,
                            "edge vertex " + std::to_string(v) + " outside [1, " +
                                std::to_string(n_) + "]");
            if (v <= prev) throw Error(ErrorKind::validation, "edge vertices must be strictly increasing");
            prev = v;
        }
        if (weight <= 0) throw Error(ErrorKind::validation, "edge weights must be positive");
        total += weight;
        if (!r) {
            r = static_cast<int>(edge.size());
        } else if (*r != static_cast<int>(edge.size())) {
            uniform = false;
        }
    }
    if (total != 1)
        throw Error(ErrorKind::validation,
                    "edge weights sum to " + format_rational(total) + ", expected 1");
    if (uniform) uniform_r_ = r;
}

InstanceFamily::InstanceFamily(std::vector<WeightedHypergraph> hypergraphs)
    : hypergraphs_(std::move(hypergraphs)) {
    if (hypergraphs_.empty()) throw Error(ErrorKind::validation, "family must contain at least one hypergraph");
    n_ = hypergraphs_.front().ground_size();
    for (const auto& h : hypergraphs_) {
        if (h.ground_size() != n_)
            throw Error(ErrorKind::validation, "hypergraphs disagree on ground set size");
    }
    std::optional<int> r = hypergraphs_.front().uniform_cardinality();
    for (const auto& h : hypergraphs_) {
        if (!h.uniform_cardinality() || (r && *h.uniform_cardinality() != *r)) {
            r.reset();
            break;
        }
    }
    uniform_r_ = r;
}

BlockedBipartiteGraph::BlockedBipartiteGraph(int n, int k, int m, int r,
                                             std::vector<RightVertex> right_vertices)
    : n_(n), k_(k), m_(m), r_(r), right_vertices_(std::move(right_vertices)) {
    if (n_ < 1 || k_ < 1 || m_ < 1 || r_ < 1)
        throw Error(ErrorKind::validation, "graph parameters must be positive");
    std::vector<int> block_counts(k_ + 1, 0);
    for (auto& rv : right_vertices_) {
        if (rv.block < 1 || rv.block > k_)
            throw Error(ErrorKind::validation, "right vertex block outside [1, k]");
        if (static_cast<int>(rv.neighbors.size()) != r_)
            throw Error(ErrorKind::validation, "right vertex degree differs from r");
        int prev = 0;
        for (int v : rv.neighbors) {
            if (v < 1 || v > n_) throw Error(ErrorKind::validation, "neighbor outside [1, n]");
            if (v <= prev)
                throw Error(ErrorKind::validation, "neighbor lists must be strictly increasing");
            prev = v;
        }
        block_counts[rv.block]++;
    }
    for (int i = 1; i <= k_; ++i) {
        if (block_counts[i] != m_)
            throw Error(ErrorKind::validation, "block " + std::to_string(i) + " has " +
                                                   std::to_string(block_counts[i]) +
                                                   " right vertices, expected m = " +
                                                   std::to_string(m_));
    }
    std::sort(right_vertices_.begin(), right_vertices_.end());
}

long long BlockedBipartiteGraph::left_degree(int a, int block) const {
    long long deg = 0;
    for (const auto& rv : right_vertices_) {
        if (rv.block != block) continue;
        if (std::binary_search(rv.neighbors.begin(), rv.neighbors.end(), a)) deg++;
    }
    return deg;
}

Chain::Chain(std::vector<int> order, std::vector<Rational> trace)
    : order_(std::move(order)), trace_(std::move(trace)) {
    int n = static_cast<int>(order_.size());
    if (n < 1) throw Error(ErrorKind::validation, "chain must be nonempty");
    std::vector<char> seen(n + 1, 0);
    for (int v : order_) {
        if (v < 1 || v > n) throw Error(ErrorKind::validation, "chain entry outside [1, n]");
        if (seen[v]) throw Error(ErrorKind::validation, "chain repeats vertex " + std::to_string(v));
        seen[v] = 1;
    }
    if (!trace_.empty() && static_cast<int>(trace_.size()) != n)
        throw Error(ErrorKind::validation, "trace length differs from chain length");
}

std::vector<int> Chain::prefix(int j) const {
    if (j < 1 || j > n()) throw Error(ErrorKind::invalid_subset, "prefix index outside [1, n]");
    std::vector<int> s(order_.begin(), order_.begin() + j);
    std::sort(s.begin(), s.end());
    return s;
}

Rational Chain::max_trace() const {
    Rational best = 0;
    for (const auto& t : trace_) best = std::max(best, t);
    return best;
}

VectorFamily::VectorFamily(int dimension, std::vector<std::vector<Rational>> vectors)
    : d_(dimension), vectors_(std::move(vectors)) {
    if (d_ < 1) throw Error(ErrorKind::dimension, "dimension must be at least 1");
    for (const auto& v : vectors_) {
        if (static_cast<int>(v.size()) != d_)
            throw Error(ErrorKind::dimension, "vector dimension mismatch");
    }
}

Rational VectorFamily::max_inf_norm() const {
    Rational best = 0;
    for (const auto& v : vectors_) {
        for (const auto& c : v) best = std::max(best, rational_abs(c));
    }
    return best;
}

std::vector<Rational> VectorFamily::component_sum() const {
    std::vector<Rational> sum(d_, Rational(0));
    for (const auto& v : vectors_) {
        for (int i = 0; i < d_; ++i) sum[i] += v[i];
    }
    return sum;
}

std::string bound_kind_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::tucker_2kc: return "tucker-2kc";
        case BoundKind::pairwise_6sqrtk: return "pairwise-6sqrtk";
        case BoundKind::heuristic: return "heuristic";
        case BoundKind::exhaustive: return "exhaustive";
    }
    throw Error(ErrorKind::internal, "unknown bound kind");
}

BoundKind bound_kind_from_name(const std::string& name) {
    if (name == "tucker-2kc") return BoundKind::tucker_2kc;
    if (name == "pairwise-6sqrtk") return BoundKind::pairwise_6sqrtk;
    if (name == "heuristic") return BoundKind::heuristic;
    if (name == "exhaustive") return BoundKind::exhaustive;
    throw Error(ErrorKind::parse, "unknown bound kind '" + name + "'");
}

Rational PartitionResult::max_gap() const {
    Rational best = 0;
    for (const auto& g : gaps) best = std::max(best, g);
    return best;
}

std::vector<int> normalize_subset(int n, const std::vector<int>& subset) {
    std::vector<int> s = subset;
    std::sort(s.begin(), s.end());
    int prev = 0;
    for (int v : s) {
        if (v < 1 || v > n)
            throw Error(ErrorKind::invalid_subset,
                        "vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
        if (v == prev)
            throw Error(ErrorKind::invalid_subset, "duplicate vertex " + std::to_string(v));
        prev = v;
    }
    return s;
}

std::vector<char> subset_mask(int n, const std::vector<int>& sorted_subset) {
    std::vector<char> mask(n + 1, 0);
    for (int v : sorted_subset) mask[v] = 1;
    return mask;
}

}  // namespace balcov
