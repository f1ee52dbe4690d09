#pragma once

#include <string>
#include <variant>

#include "balcov/chains.hpp"
#include "balcov/generators.hpp"
#include "balcov/types.hpp"

namespace balcov {

// The three instance kinds a JSON file can hold. All weights travel as exact
// strings ("p/q", integers, or finite decimals), never floats.
using Instance = std::variant<InstanceFamily, BlockedBipartiteGraph, VectorFamily>;

Instance parse_instance(const std::string& text);

std::string serialize_instance(const Instance& inst);
std::string serialize_family(const InstanceFamily& fam);
std::string serialize_graph(const BlockedBipartiteGraph& g);
std::string serialize_vectors(const VectorFamily& v);

// {"kind", "n", "k", "r"?, "cover_slack", "question_valid", ...} per kind
std::string instance_info_json(const Instance& inst);

// Artifact documents. Every numeric payload is an exact rational string; the
// verifier recomputes all of them from the instance.
std::string chain_to_json(const InstanceFamily& fam, const Chain& chain, ChainAlgo algo);

// Chain built on the hypergraph side of a graph instance: adds the mapped
// left-side growth chain, per-step block coverage, and the half-cover section.
std::string graph_chain_to_json(const BlockedBipartiteGraph& g, const InstanceFamily& fam,
                                const Chain& chain, ChainAlgo algo);

std::string partition_to_json(const InstanceFamily& fam, const PartitionResult& res,
                              const std::string& algo);

std::string ordering_to_json(const VectorFamily& v, const std::vector<int>& order);

std::string almost_regular_to_json(const AlmostRegularResult& res);

}  // namespace balcov
