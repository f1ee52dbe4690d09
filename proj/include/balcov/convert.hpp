#pragma once

#include <cstdint>

#include "balcov/types.hpp"

namespace balcov {

// w_i(R) = (right vertices in block i with neighborhood exactly R) / m.
InstanceFamily graph_to_family(const BlockedBipartiteGraph& g);

// Exact inverse direction: m = scale * lcm of weight denominators, each edge
// R contributes m * w_i(R) right vertices with neighborhood R. Emission order
// is (block, neighbor list, multiplicity), so round trips are literal.
BlockedBipartiteGraph family_to_graph(const InstanceFamily& fam, std::uint64_t scale = 1);

enum class MapDirection { to_graph, to_hypergraph };

// Complementation A_j = [n] \ S_{n-j} turns deletion chains into growth
// chains and back; on orders it is reversal, an involution. Trace entries
// move with their prefix (graph-side entry j is the hypergraph-side entry
// n - j; position n gets 0).
Chain map_chain(const Chain& chain, MapDirection direction);

}  // namespace balcov
