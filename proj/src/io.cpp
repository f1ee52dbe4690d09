#include "balcov/io.hpp"

#include <algorithm>
#include <string>

#include <json.hpp>

#include "balcov/convert.hpp"
#include "balcov/core.hpp"
#include "balcov/steinitz.hpp"

namespace balcov {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw Error(ErrorKind::parse, "input is not valid JSON");
    if (!doc.is_object()) throw Error(ErrorKind::parse, "top-level JSON value must be an object");
    return doc;
}

const json& require(const json& obj, const char* field, const std::string& where) {
    auto it = obj.find(field);
    if (it == obj.end()) {
        throw Error(ErrorKind::parse, where + ": missing field \"" + field + "\"");
    }
    return *it;
}

int require_int(const json& obj, const char* field, const std::string& where) {
    const json& value = require(obj, field, where);
    if (!value.is_number_integer()) {
        throw Error(ErrorKind::parse, where + ": field \"" + field + "\" must be an integer");
    }
    return value.get<int>();
}

Rational parse_exact(const json& value, const std::string& where) {
    if (value.is_string()) {
        try {
            return parse_rational(value.get<std::string>());
        } catch (const Error& e) {
            throw Error(ErrorKind::parse, where + ": " + e.what());
        }
    }
    if (value.is_number_integer()) return Rational(value.get<long long>());
    throw Error(ErrorKind::parse,
                where + ": expected an exact value like \"2/5\" or \"0.4\", got " + value.dump());
}

std::vector<int> parse_int_list(const json& value, const std::string& where) {
    if (!value.is_array()) throw Error(ErrorKind::parse, where + ": expected an array");
    std::vector<int> out;
    for (const auto& item : value) {
        if (!item.is_number_integer()) {
            throw Error(ErrorKind::parse, where + ": expected integers");
        }
        out.push_back(item.get<int>());
    }
    return out;
}

InstanceFamily parse_family(const json& doc) {
    const int n = require_int(doc, "n", "family");
    const json& list = require(doc, "hypergraphs", "family");
    if (!list.is_array() || list.empty()) {
        throw Error(ErrorKind::parse, "family: \"hypergraphs\" must be a nonempty array");
    }
    std::vector<WeightedHypergraph> hypers;
    int index = 0;
    for (const auto& h : list) {
        ++index;
        const std::string where = "hypergraph " + std::to_string(index);
        const json& edge_list = require(h, "edges", where);
        if (!edge_list.is_array()) {
            throw Error(ErrorKind::parse, where + ": \"edges\" must be an array");
        }
        EdgeMap edges;
        for (const auto& e : edge_list) {
            Edge verts = parse_int_list(require(e, "vertices", where), where + " edge");
            if (verts.empty()) throw Error(ErrorKind::parse, where + ": empty edge");
            std::sort(verts.begin(), verts.end());
            if (edges.count(verts)) {
                throw Error(ErrorKind::parse, where + ": duplicate edge");
            }
            edges[verts] = parse_exact(require(e, "weight", where), where + " weight");
        }
        try {
            hypers.emplace_back(n, std::move(edges));
        } catch (const Error& err) {
            throw Error(err.kind(), where + ": " + err.what());
        }
    }
    if (doc.contains("k") && require_int(doc, "k", "family") != static_cast<int>(hypers.size())) {
        throw Error(ErrorKind::parse, "family: \"k\" disagrees with the hypergraph count");
    }
    InstanceFamily fam(std::move(hypers));
    if (doc.contains("r")) {
        int r = require_int(doc, "r", "family");
        if (!fam.uniform_r() || *fam.uniform_r() != r) {
            throw Error(ErrorKind::validation,
                        "family: declared r = " + std::to_string(r) +
                            " but the edges are not uniformly of that cardinality");
        }
    }
    return fam;
}

BlockedBipartiteGraph parse_graph(const json& doc) {
    const int n = require_int(doc, "n", "graph");
    const int k = require_int(doc, "k", "graph");
    const int m = require_int(doc, "m", "graph");
    const int r = require_int(doc, "r", "graph");
    const json& list = require(doc, "right_vertices", "graph");
    if (!list.is_array()) throw Error(ErrorKind::parse, "graph: \"right_vertices\" must be an array");
    std::vector<RightVertex> rights;
    for (const auto& rv : list) {
        RightVertex vertex;
        vertex.block = require_int(rv, "block", "graph right vertex");
        vertex.neighbors = parse_int_list(require(rv, "neighbors", "graph right vertex"),
                                          "graph right vertex neighbors");
        std::sort(vertex.neighbors.begin(), vertex.neighbors.end());
        rights.push_back(std::move(vertex));
    }
    try {
        return BlockedBipartiteGraph(n, k, m, r, std::move(rights));
    } catch (const Error& err) {
        throw Error(err.kind(), std::string("graph: ") + err.what());
    }
}

VectorFamily parse_vectors(const json& doc) {
    const int d = require_int(doc, "d", "vectors");
    const json& list = require(doc, "vectors", "vectors");
    if (!list.is_array()) throw Error(ErrorKind::parse, "vectors: \"vectors\" must be an array");
    std::vector<std::vector<Rational>> rows;
    int index = 0;
    for (const auto& row : list) {
        ++index;
        if (!row.is_array()) {
            throw Error(ErrorKind::parse, "vectors: entry " + std::to_string(index) +
                                              " must be an array");
        }
        std::vector<Rational> vec;
        for (const auto& comp : row) {
            vec.push_back(parse_exact(comp, "vector " + std::to_string(index)));
        }
        rows.push_back(std::move(vec));
    }
    try {
        return VectorFamily(d, std::move(rows));
    } catch (const Error& err) {
        throw Error(err.kind(), std::string("vectors: ") + err.what());
    }
}

json family_json(const InstanceFamily& fam) {
    json doc;
    doc["schema"] = 1;
    doc["kind"] = "family";
    doc["n"] = fam.n();
    doc["k"] = fam.k();
    if (fam.uniform_r()) doc["r"] = *fam.uniform_r();
    json hypers = json::array();
    for (int i = 0; i < fam.k(); ++i) {
        json edges = json::array();
        for (const auto& [edge, weight] : fam.hyper(i).edges()) {
            json e;
            e["vertices"] = edge;
            e["weight"] = format_rational(weight);
            edges.push_back(std::move(e));
        }
        json h;
        h["edges"] = std::move(edges);
        hypers.push_back(std::move(h));
    }
    doc["hypergraphs"] = std::move(hypers);
    return doc;
}

json graph_json(const BlockedBipartiteGraph& g) {
    json doc;
    doc["schema"] = 1;
    doc["kind"] = "graph";
    doc["n"] = g.n();
    doc["k"] = g.k();
    doc["m"] = g.m();
    doc["r"] = g.r();
    json rights = json::array();
    for (const auto& rv : g.right_vertices()) {
        json item;
        item["block"] = rv.block;
        item["neighbors"] = rv.neighbors;
        rights.push_back(std::move(item));
    }
    doc["right_vertices"] = std::move(rights);
    return doc;
}

json vectors_json(const VectorFamily& v) {
    json doc;
    doc["schema"] = 1;
    doc["kind"] = "vectors";
    doc["d"] = v.dimension();
    json rows = json::array();
    for (int j = 0; j < v.size(); ++j) {
        json row = json::array();
        for (const auto& comp : v.vec(j)) row.push_back(format_rational(comp));
        rows.push_back(std::move(row));
    }
    doc["vectors"] = std::move(rows);
    return doc;
}

std::vector<std::string> rational_strings(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    for (const auto& v : values) out.push_back(format_rational(v));
    return out;
}

json chain_body(const InstanceFamily& fam, const Chain& chain, ChainAlgo algo) {
    json doc;
    doc["schema"] = 1;
    doc["type"] = "chain";
    doc["algo"] = chain_algo_name(algo);
    doc["order"] = chain.order();
    doc["step_unbalance"] = rational_strings(chain.trace());
    doc["max_unbalance"] = format_rational(chain.max_trace());
    doc["cover_slack"] = format_rational(cover_slack(fam));
    doc["bound_sq"] = format_rational(chain_bound_sq(fam, algo));
    Rational max_sq = chain.max_trace() * chain.max_trace();
    doc["bound_holds"] = max_sq <= chain_bound_sq(fam, algo);
    return doc;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    json doc = parse_text(text);
    if (doc.contains("schema") && doc["schema"] != 1) {
        throw Error(ErrorKind::parse, "unsupported schema version " + doc["schema"].dump());
    }
    const std::string kind = require(doc, "kind", "instance").is_string()
                                 ? doc["kind"].get<std::string>()
                                 : throw Error(ErrorKind::parse, "instance: \"kind\" must be a string");
    if (kind == "family") return parse_family(doc);
    if (kind == "graph") return parse_graph(doc);
    if (kind == "vectors") return parse_vectors(doc);
    throw Error(ErrorKind::parse, "unknown instance kind '" + kind + "'");
}

std::string serialize_family(const InstanceFamily& fam) { return family_json(fam).dump(2); }
std::string serialize_graph(const BlockedBipartiteGraph& g) { return graph_json(g).dump(2); }
std::string serialize_vectors(const VectorFamily& v) { return vectors_json(v).dump(2); }

std::string serialize_instance(const Instance& inst) {
    return std::visit(
        [](const auto& value) {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, InstanceFamily>) {
                return serialize_family(value);
            } else if constexpr (std::is_same_v<T, BlockedBipartiteGraph>) {
                return serialize_graph(value);
            } else {
                return serialize_vectors(value);
            }
        },
        inst);
}

std::string instance_info_json(const Instance& inst) {
    json doc;
    if (const auto* fam = std::get_if<InstanceFamily>(&inst)) {
        doc["kind"] = "family";
        doc["n"] = fam->n();
        doc["k"] = fam->k();
        if (fam->uniform_r()) doc["r"] = *fam->uniform_r();
        CoverSlackReport rep = cover_slack_report(*fam);
        doc["cover_slack"] = format_rational(rep.value);
        doc["question_valid"] = rep.question_valid;
    } else if (const auto* g = std::get_if<BlockedBipartiteGraph>(&inst)) {
        doc["kind"] = "graph";
        doc["n"] = g->n();
        doc["k"] = g->k();
        doc["m"] = g->m();
        doc["r"] = g->r();
        CoverSlackReport rep = cover_slack_report(graph_to_family(*g));
        doc["cover_slack"] = format_rational(rep.value);
        doc["question_valid"] = rep.question_valid;
    } else {
        const auto& v = std::get<VectorFamily>(inst);
        doc["kind"] = "vectors";
        doc["d"] = v.dimension();
        doc["count"] = v.size();
        doc["max_inf_norm"] = format_rational(v.max_inf_norm());
        bool zero = true;
        for (const auto& comp : v.component_sum()) zero = zero && comp == 0;
        doc["sum_zero"] = zero;
    }
    return doc.dump(2);
}

std::string chain_to_json(const InstanceFamily& fam, const Chain& chain, ChainAlgo algo) {
    return chain_body(fam, chain, algo).dump(2);
}

std::string graph_chain_to_json(const BlockedBipartiteGraph& g, const InstanceFamily& fam,
                                const Chain& chain, ChainAlgo algo) {
    json doc = chain_body(fam, chain, algo);
    Chain left = map_chain(chain, MapDirection::to_graph);
    json side;
    side["left_order"] = left.order();
    // per growth step, |N(A_j, B_i)| for every block
    json coverage = json::array();
    std::vector<std::vector<char>> adjacent(g.k() + 1,
                                            std::vector<char>(g.right_vertices().size(), 0));
    std::vector<long long> counts(g.k() + 1, 0);
    std::vector<char> in_prefix(g.n() + 1, 0);
    for (int v : left.order()) {
        in_prefix[v] = 1;
        const auto& rights = g.right_vertices();
        for (std::size_t idx = 0; idx < rights.size(); ++idx) {
            if (adjacent[rights[idx].block][idx]) continue;
            if (std::binary_search(rights[idx].neighbors.begin(), rights[idx].neighbors.end(),
                                   v)) {
                adjacent[rights[idx].block][idx] = 1;
                ++counts[rights[idx].block];
            }
        }
        json row = json::array();
        for (int i = 1; i <= g.k(); ++i) row.push_back(counts[i]);
        coverage.push_back(std::move(row));
    }
    side["coverage"] = std::move(coverage);

    HalfCoverResult hc = half_cover(g, left);
    json half;
    half["j"] = hc.j;
    half["S"] = hc.S;
    half["coverage"] = hc.coverage;
    half["slack"] = format_rational(hc.slack);
    half["margin_bound_sq"] = format_rational(hc.margin_bound_sq);
    json margins = json::array();
    for (const auto& mg : hc.margins) {
        json item;
        item["residual"] = format_rational(mg.residual);
        item["holds"] = mg.holds;
        margins.push_back(std::move(item));
    }
    half["margins"] = std::move(margins);
    half["margins_hold"] = hc.margins_hold;
    side["half_cover"] = std::move(half);
    doc["graph"] = std::move(side);
    return doc.dump(2);
}

std::string partition_to_json(const InstanceFamily& fam, const PartitionResult& res,
                              const std::string& algo) {
    json doc;
    doc["schema"] = 1;
    doc["type"] = "partition";
    doc["algo"] = algo;
    doc["S"] = res.S;
    doc["T"] = res.T;
    doc["gaps"] = rational_strings(res.gaps);
    doc["max_gap"] = format_rational(res.max_gap());
    doc["bound_kind"] = bound_kind_name(res.bound_kind);
    doc["certified"] = res.certified;
    doc["cover_slack"] = format_rational(cover_slack(fam));
    return doc.dump(2);
}

std::string ordering_to_json(const VectorFamily& v, const std::vector<int>& order) {
    json doc;
    doc["schema"] = 1;
    doc["type"] = "ordering";
    doc["order"] = order;
    std::vector<Rational> norms = prefix_inf_norms(v, order);
    doc["prefix_norms"] = rational_strings(norms);
    doc["max_prefix_norm"] = format_rational(max_prefix_inf_norm(v, order));
    doc["dimension"] = v.dimension();
    doc["max_input_norm"] = format_rational(v.max_inf_norm());
    doc["bound"] = format_rational(Rational(v.dimension()) * v.max_inf_norm());
    return doc.dump(2);
}

std::string almost_regular_to_json(const AlmostRegularResult& res) {
    json doc;
    doc["schema"] = 1;
    doc["type"] = "almost_regular";
    doc["n"] = res.n;
    doc["m"] = res.m;
    doc["s"] = res.s;
    doc["gap_threshold"] = format_rational(res.gap_threshold);
    doc["attempts"] = res.attempts;
    doc["success"] = res.success;
    doc["exhaustive_d"] = res.exhaustive_d;
    doc["certified"] = res.certified;
    json bullets = json::array();
    for (const auto& b : res.bullets) {
        json item;
        item["name"] = b.name;
        item["holds"] = b.holds;
        item["detail"] = b.detail;
        bullets.push_back(std::move(item));
    }
    doc["bullets"] = std::move(bullets);
    doc["failure_counts"] = res.failure_counts;
    doc["blocks"] = json::array({res.block1, res.block2});
    return doc.dump(2);
}

}  // namespace balcov
