#pragma once

#include <string>
#include <vector>

#include "balcov/types.hpp"

namespace fixtures {

using balcov::Edge;
using balcov::EdgeMap;
using balcov::InstanceFamily;
using balcov::Rational;
using balcov::WeightedHypergraph;

// n=4, 1-uniform, k=2, cover slack 2/5; optimal max chain unbalance 3/10.
inline InstanceFamily e1() {
    EdgeMap w1{{{1}, Rational(2, 5)},
               {{2}, Rational(1, 10)},
               {{3}, Rational(1, 10)},
               {{4}, Rational(2, 5)}};
    EdgeMap w2{{{1}, Rational(1, 10)},
               {{2}, Rational(2, 5)},
               {{3}, Rational(2, 5)},
               {{4}, Rational(1, 10)}};
    std::vector<WeightedHypergraph> hypers;
    hypers.emplace_back(4, std::move(w1));
    hypers.emplace_back(4, std::move(w2));
    return InstanceFamily(std::move(hypers));
}

inline const std::string e1_json = R"({
  "schema": 1,
  "kind": "family",
  "n": 4,
  "k": 2,
  "r": 1,
  "hypergraphs": [
    {"edges": [{"vertices": [1], "weight": "2/5"},
               {"vertices": [2], "weight": "1/10"},
               {"vertices": [3], "weight": "1/10"},
               {"vertices": [4], "weight": "2/5"}]},
    {"edges": [{"vertices": [1], "weight": "1/10"},
               {"vertices": [2], "weight": "2/5"},
               {"vertices": [3], "weight": "2/5"},
               {"vertices": [4], "weight": "1/10"}]}
  ]
})";

inline EdgeMap e2_first() {
    return EdgeMap{{{1, 2}, Rational(3, 10)},
                   {{3, 4}, Rational(3, 10)},
                   {{1, 3}, Rational(1, 5)},
                   {{2, 4}, Rational(1, 5)}};
}

// n=4, 2-uniform, every vertex incidence exactly 1/2 in both hypergraphs.
inline InstanceFamily e2() {
    EdgeMap w2{{{1, 4}, Rational(3, 10)},
               {{2, 3}, Rational(3, 10)},
               {{1, 2}, Rational(1, 5)},
               {{3, 4}, Rational(1, 5)}};
    std::vector<WeightedHypergraph> hypers;
    hypers.emplace_back(4, e2_first());
    hypers.emplace_back(4, std::move(w2));
    return InstanceFamily(std::move(hypers));
}

inline InstanceFamily e2_single() {
    std::vector<WeightedHypergraph> hypers;
    hypers.emplace_back(4, e2_first());
    return InstanceFamily(std::move(hypers));
}

// k identical copies of an r=1 uniform hypergraph: unbalance is 0 everywhere.
inline InstanceFamily identical_uniform(int n, int k) {
    std::vector<WeightedHypergraph> hypers;
    for (int i = 0; i < k; ++i) {
        EdgeMap edges;
        for (int j = 1; j <= n; ++j) edges[{j}] = Rational(1, n);
        hypers.emplace_back(n, std::move(edges));
    }
    return InstanceFamily(std::move(hypers));
}

inline balcov::BlockedBipartiteGraph g1() {
    std::vector<balcov::RightVertex> rights{{1, {1}}, {1, {2}}};
    return balcov::BlockedBipartiteGraph(2, 1, 2, 1, std::move(rights));
}

}  // namespace fixtures
