#include "balcov/convert.hpp"

#include <algorithm>
#include <limits>

namespace balcov {

InstanceFamily graph_to_family(const BlockedBipartiteGraph& g) {
    std::vector<EdgeMap> weights(g.k());
    for (const auto& rv : g.right_vertices()) {
        weights[rv.block - 1][rv.neighbors] += Rational(1, g.m());
    }
    std::vector<WeightedHypergraph> hypergraphs;
    hypergraphs.reserve(g.k());
    for (int i = 0; i < g.k(); ++i) {
        hypergraphs.emplace_back(g.n(), std::move(weights[i]));
    }
    return InstanceFamily(std::move(hypergraphs));
}

BlockedBipartiteGraph family_to_graph(const InstanceFamily& fam, std::uint64_t scale) {
    auto r = fam.uniform_r();
    if (!r) throw Error(ErrorKind::uniformity, "graph form requires a uniform family");
    if (scale < 1) throw Error(ErrorKind::parameter, "scale must be a positive integer");

    Int lcm_den = 1;
    for (int i = 0; i < fam.k(); ++i) {
        for (const auto& [edge, weight] : fam.hyper(i).edges()) {
            lcm_den = int_lcm(lcm_den, den(weight));
        }
    }
    Int m_int = lcm_den * Int(scale);
    if (m_int > std::numeric_limits<int>::max())
        throw Error(ErrorKind::size, "block size m = " + m_int.str() + " is too large");
    int m = m_int.convert_to<int>();

    std::vector<RightVertex> right;
    for (int i = 0; i < fam.k(); ++i) {
        for (const auto& [edge, weight] : fam.hyper(i).edges()) {
            Int count = num(weight) * (m_int / den(weight));
            for (Int c = 0; c < count; ++c) right.push_back({i + 1, edge});
        }
    }
    return BlockedBipartiteGraph(fam.n(), fam.k(), m, *r, std::move(right));
}

Chain map_chain(const Chain& chain, MapDirection) {
    int n = chain.n();
    std::vector<int> order(chain.order().rbegin(), chain.order().rend());
    std::vector<Rational> trace;
    if (!chain.trace().empty()) {
        trace.assign(n, Rational(0));
        for (int j = 1; j < n; ++j) trace[j - 1] = chain.trace()[n - j - 1];
    }
    return Chain(std::move(order), std::move(trace));
}

}  // namespace balcov
