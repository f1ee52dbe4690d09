#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "balcov/rational.hpp"

namespace balcov {

enum class ErrorKind {
    invalid_subset,
    precondition,
    uniformity,
    arity,
    dimension,
    size,        // configured cap exceeded
    parameter,
    infeasible,
    generation,  // retry budget exhausted
    reduction,
    parse,
    validation,
    bound,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Vertices are 1-based throughout. Edges are kept sorted ascending.
using Edge = std::vector<int>;
using EdgeMap = std::map<Edge, Rational>;

/// Normalized weight function on nonempty subsets of [n]: weights positive, total 1.
class WeightedHypergraph {
public:
    WeightedHypergraph(int n, EdgeMap edges);

    int ground_size() const { return n_; }
    const EdgeMap& edges() const { return edges_; }
    // r if every edge has the same cardinality, nullopt otherwise
    std::optional<int> uniform_cardinality() const { return uniform_r_; }

    bool operator==(const WeightedHypergraph& other) const = default;

private:
    int n_;
    EdgeMap edges_;
    std::optional<int> uniform_r_;
};

// k weight functions on a shared ground set.
class InstanceFamily {
public:
    explicit InstanceFamily(std::vector<WeightedHypergraph> hypergraphs);

    int n() const { return n_; }
    int k() const { return static_cast<int>(hypergraphs_.size()); }
    // present iff all k hypergraphs are uniform with a common cardinality
    std::optional<int> uniform_r() const { return uniform_r_; }
    const WeightedHypergraph& hyper(int i) const { return hypergraphs_.at(i); }  // 0-based
    const std::vector<WeightedHypergraph>& hypergraphs() const { return hypergraphs_; }

    bool operator==(const InstanceFamily& other) const = default;

private:
    int n_;
    std::optional<int> uniform_r_;
    std::vector<WeightedHypergraph> hypergraphs_;
};

struct RightVertex {
    int block = 0;  // 1-based
    std::vector<int> neighbors;

    bool operator==(const RightVertex&) const = default;
    bool operator<(const RightVertex& o) const {
        return std::tie(block, neighbors) < std::tie(o.block, o.neighbors);
    }
};

// Left set [n]; k blocks of exactly m right vertices, each right vertex r-regular.
class BlockedBipartiteGraph {
public:
    BlockedBipartiteGraph(int n, int k, int m, int r, std::vector<RightVertex> right_vertices);

    int n() const { return n_; }
    int k() const { return k_; }
    int m() const { return m_; }
    int r() const { return r_; }
    // canonical order: (block, neighbor list) ascending
    const std::vector<RightVertex>& right_vertices() const { return right_vertices_; }
    long long left_degree(int a, int block) const;

    bool operator==(const BlockedBipartiteGraph&) const = default;

private:
    int n_, k_, m_, r_;
    std::vector<RightVertex> right_vertices_;
};

// Nested prefix sets S_1 ⊊ ... ⊊ S_n encoded by the insertion order; trace[j-1]
// holds the step value (unbalance or coverage gap / m) at prefix size j.
class Chain {
public:
    Chain(std::vector<int> order, std::vector<Rational> trace);

    int n() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& order() const { return order_; }
    const std::vector<Rational>& trace() const { return trace_; }
    std::vector<int> prefix(int j) const;  // sorted contents of S_j
    Rational max_trace() const;

    bool operator==(const Chain&) const = default;

private:
    std::vector<int> order_;
    std::vector<Rational> trace_;
};

class VectorFamily {
public:
    VectorFamily(int dimension, std::vector<std::vector<Rational>> vectors);

    int dimension() const { return d_; }
    int size() const { return static_cast<int>(vectors_.size()); }
    const std::vector<Rational>& vec(int j) const { return vectors_.at(j); }  // 0-based
    const std::vector<std::vector<Rational>>& vectors() const { return vectors_; }

    Rational max_inf_norm() const;
    std::vector<Rational> component_sum() const;

    bool operator==(const VectorFamily&) const = default;

private:
    int d_;
    std::vector<std::vector<Rational>> vectors_;
};

enum class BoundKind { tucker_2kc, pairwise_6sqrtk, heuristic, exhaustive };

std::string bound_kind_name(BoundKind kind);
BoundKind bound_kind_from_name(const std::string& name);

struct PartitionResult {
    std::vector<int> S;
    std::vector<int> T;
    std::vector<Rational> gaps;  // per hypergraph: |w_i*(S) - w_i*(T)|
    BoundKind bound_kind = BoundKind::heuristic;
    bool certified = false;

    Rational max_gap() const;
};

// Validates entries lie in [1, n] and are distinct; returns a sorted copy.
std::vector<int> normalize_subset(int n, const std::vector<int>& subset);

// Membership mask (index 0 unused) for repeated lookups.
std::vector<char> subset_mask(int n, const std::vector<int>& sorted_subset);

}  // namespace balcov
