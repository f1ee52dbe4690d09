#include "balcov/verify.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "balcov/convert.hpp"
#include "balcov/core.hpp"
#include "balcov/oracles.hpp"
#include "balcov/steinitz.hpp"

namespace balcov {

namespace {

using nlohmann::json;

json parse_doc(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw Error(ErrorKind::parse, "artifact is not valid JSON");
    if (!doc.is_object()) throw Error(ErrorKind::parse, "artifact must be a JSON object");
    return doc;
}

const json& require(const json& obj, const char* field) {
    auto it = obj.find(field);
    if (it == obj.end()) {
        throw Error(ErrorKind::parse, std::string("artifact: missing field \"") + field + "\"");
    }
    return *it;
}

std::vector<int> int_list(const json& value, const char* field) {
    if (!value.is_array()) {
        throw Error(ErrorKind::parse, std::string("artifact: \"") + field + "\" must be an array");
    }
    std::vector<int> out;
    for (const auto& item : value) {
        if (!item.is_number_integer()) {
            throw Error(ErrorKind::parse,
                        std::string("artifact: \"") + field + "\" must hold integers");
        }
        out.push_back(item.get<int>());
    }
    return out;
}

Rational rational_field(const json& value, const char* field) {
    if (value.is_number_integer()) return Rational(value.get<long long>());
    if (!value.is_string()) {
        throw Error(ErrorKind::parse,
                    std::string("artifact: \"") + field + "\" must be an exact value string");
    }
    return parse_rational(value.get<std::string>());
}

// Recorded values are optional, but when present they must match exactly.
void check_recorded(VerifyReport& report, const json& doc, const char* field,
                    const Rational& recomputed) {
    auto it = doc.find(field);
    if (it == doc.end()) return;
    Rational recorded = rational_field(*it, field);
    if (recorded != recomputed) {
        report.fail(std::string("recorded ") + field + " mismatch: recorded " +
                    format_rational(recorded) + ", recomputed " + format_rational(recomputed));
    }
}

void verify_graph_section(VerifyReport& report, const BlockedBipartiteGraph& g,
                          const Chain& hyper_chain, const json& side) {
    Chain left = map_chain(hyper_chain, MapDirection::to_graph);
    if (side.contains("left_order")) {
        if (int_list(side["left_order"], "left_order") != left.order()) {
            report.fail("recorded left_order is not the reversed hypergraph order");
        }
    }

    const auto& rvs = g.right_vertices();
    std::vector<char> covered(rvs.size(), 0);
    std::vector<long long> counts(g.k() + 1, 0);
    std::vector<std::vector<long long>> coverage_rows;
    for (int v : left.order()) {
        for (std::size_t idx = 0; idx < rvs.size(); ++idx) {
            if (covered[idx]) continue;
            if (std::binary_search(rvs[idx].neighbors.begin(), rvs[idx].neighbors.end(), v)) {
                covered[idx] = 1;
                ++counts[rvs[idx].block];
            }
        }
        coverage_rows.emplace_back(counts.begin() + 1, counts.end());
    }
    if (side.contains("coverage")) {
        const json& rows = side["coverage"];
        bool match = rows.is_array() && rows.size() == coverage_rows.size();
        for (std::size_t j = 0; match && j < coverage_rows.size(); ++j) {
            match = rows[j].is_array() && rows[j].size() == coverage_rows[j].size();
            for (std::size_t b = 0; match && b < coverage_rows[j].size(); ++b) {
                match = rows[j][b].is_number_integer() &&
                        rows[j][b].get<long long>() == coverage_rows[j][b];
            }
        }
        if (!match) report.fail("recorded block coverage disagrees with the graph");
    }

    HalfCoverResult hc = half_cover(g, left);
    if (!hc.margins_hold) {
        report.fail("half-cover margin bound violated at the stopping prefix");
    }
    if (side.contains("half_cover")) {
        const json& half = side["half_cover"];
        if (half.contains("j") && half["j"].get<int>() != hc.j) {
            report.fail("recorded half-cover stopping index mismatch: recorded " +
                        half["j"].dump() + ", recomputed " + std::to_string(hc.j));
        }
        if (half.contains("S") && int_list(half["S"], "S") != hc.S) {
            report.fail("recorded half-cover prefix mismatch");
        }
        if (half.contains("coverage")) {
            std::vector<int> rec = int_list(half["coverage"], "coverage");
            std::vector<long long> wide(rec.begin(), rec.end());
            if (wide != hc.coverage) report.fail("recorded half-cover coverage mismatch");
        }
        if (half.contains("margins_hold") && half["margins_hold"].get<bool>() != hc.margins_hold) {
            report.fail("recorded margins_hold disagrees with recomputation");
        }
    }
}

void verify_chain_doc(VerifyReport& report, const InstanceFamily& fam,
                      const BlockedBipartiteGraph* g, const json& doc) {
    std::vector<int> order = int_list(require(doc, "order"), "order");
    ChainAlgo algo = chain_algo_from_name(require(doc, "algo").get<std::string>());

    std::optional<Chain> fresh;
    try {
        fresh.emplace(chain_from_order(fam, order));
    } catch (const Error& e) {
        report.fail(std::string("order rejected: ") + e.what());
        return;
    }

    std::vector<Rational> recorded_trace;
    if (doc.contains("step_unbalance")) {
        const json& steps = doc["step_unbalance"];
        if (!steps.is_array() || static_cast<int>(steps.size()) != fam.n()) {
            report.fail("recorded step_unbalance has the wrong length");
        } else {
            for (const auto& item : steps) {
                recorded_trace.push_back(rational_field(item, "step_unbalance"));
            }
        }
    }

    Chain claimed(order, std::move(recorded_trace));
    for (auto& violation : chain_violations(fam, claimed, algo)) {
        report.fail(std::move(violation));
    }

    check_recorded(report, doc, "max_unbalance", fresh->max_trace());
    check_recorded(report, doc, "cover_slack", cover_slack(fam));
    check_recorded(report, doc, "bound_sq", chain_bound_sq(fam, algo));

    if (doc.contains("graph")) {
        if (g == nullptr) {
            report.fail("artifact has a graph section but the instance is not a graph");
        } else {
            verify_graph_section(report, *g, *fresh, doc["graph"]);
        }
    }
}

void verify_partition_doc(VerifyReport& report, const InstanceFamily& fam, const json& doc) {
    std::vector<int> S, T;
    try {
        S = normalize_subset(fam.n(), int_list(require(doc, "S"), "S"));
        T = normalize_subset(fam.n(), int_list(require(doc, "T"), "T"));
    } catch (const Error& e) {
        report.fail(std::string("sides rejected: ") + e.what());
        return;
    }
    std::vector<char> seen(fam.n() + 1, 0);
    for (int v : S) seen[v] = 1;
    bool disjoint = true;
    for (int v : T) {
        if (seen[v]) disjoint = false;
        seen[v] = 1;
    }
    bool complete = true;
    for (int v = 1; v <= fam.n(); ++v) complete = complete && seen[v];
    if (!disjoint || !complete) {
        report.fail("S and T do not partition the ground set");
        return;
    }

    std::vector<Rational> gaps;
    Rational max_gap(0);
    for (int i = 0; i < fam.k(); ++i) {
        Rational gap = rational_abs(w_star(fam.hyper(i), S) - w_star(fam.hyper(i), T));
        max_gap = std::max(max_gap, gap);
        gaps.push_back(std::move(gap));
    }
    if (doc.contains("gaps")) {
        const json& recorded = doc["gaps"];
        bool match = recorded.is_array() && static_cast<int>(recorded.size()) == fam.k();
        for (int i = 0; match && i < fam.k(); ++i) {
            match = rational_field(recorded[i], "gaps") == gaps[i];
        }
        if (!match) report.fail("recorded gaps disagree with recomputation");
    }
    check_recorded(report, doc, "max_gap", max_gap);
    check_recorded(report, doc, "cover_slack", cover_slack(fam));

    BoundKind bound = bound_kind_from_name(require(doc, "bound_kind").get<std::string>());
    bool certified = doc.contains("certified") && doc["certified"].get<bool>();
    Rational c = cover_slack(fam);
    switch (bound) {
        case BoundKind::tucker_2kc: {
            Rational limit = Rational(2 * fam.k()) * c;
            if (max_gap > limit) {
                report.fail("max gap <= 2kc violated: " + format_rational(max_gap) + " > " +
                            format_rational(limit));
            }
            break;
        }
        case BoundKind::pairwise_6sqrtk: {
            Rational limit_sq = Rational(36 * fam.k()) * c * c;
            if (max_gap * max_gap > limit_sq) {
                report.fail("(max gap)^2 <= 36kc^2 violated: " +
                            format_rational(max_gap * max_gap) + " > " +
                            format_rational(limit_sq));
            }
            break;
        }
        case BoundKind::exhaustive: {
            if (fam.n() > 22) {
                report.fail("exhaustive optimality claimed beyond the searchable size");
            } else {
                PartitionOracleResult best = optimal_partition(fam);
                if (max_gap != best.value) {
                    report.fail("claimed optimum mismatch: achieved " + format_rational(max_gap) +
                                ", optimum " + format_rational(best.value));
                }
            }
            break;
        }
        case BoundKind::heuristic:
            if (certified) report.fail("heuristic partitions cannot be certified");
            break;
    }
}

void verify_ordering_doc(VerifyReport& report, const VectorFamily& v, const json& doc) {
    std::vector<int> order = int_list(require(doc, "order"), "order");
    std::vector<Rational> norms;
    try {
        norms = prefix_inf_norms(v, order);
    } catch (const Error& e) {
        report.fail(std::string("order rejected: ") + e.what());
        return;
    }
    Rational max_norm(0);
    for (const auto& x : norms) max_norm = std::max(max_norm, x);

    if (doc.contains("prefix_norms")) {
        const json& recorded = doc["prefix_norms"];
        bool match = recorded.is_array() && recorded.size() == norms.size();
        for (std::size_t j = 0; match && j < norms.size(); ++j) {
            match = rational_field(recorded[j], "prefix_norms") == norms[j];
        }
        if (!match) report.fail("recorded prefix_norms disagree with recomputation");
    }
    check_recorded(report, doc, "max_prefix_norm", max_norm);

    Rational limit = Rational(v.dimension()) * v.max_inf_norm();
    if (max_norm > limit) {
        report.fail("max prefix norm <= d * max input norm violated: " +
                    format_rational(max_norm) + " > " + format_rational(limit));
    }
}

}  // namespace

VerifyReport verify_artifact(const Instance& inst, const std::string& artifact_json) {
    json doc = parse_doc(artifact_json);
    const json& type = require(doc, "type");
    if (!type.is_string()) throw Error(ErrorKind::parse, "artifact: \"type\" must be a string");
    const std::string kind = type.get<std::string>();

    VerifyReport report;
    if (kind == "chain") {
        if (const auto* fam = std::get_if<InstanceFamily>(&inst)) {
            verify_chain_doc(report, *fam, nullptr, doc);
        } else if (const auto* g = std::get_if<BlockedBipartiteGraph>(&inst)) {
            InstanceFamily fam = graph_to_family(*g);
            verify_chain_doc(report, fam, g, doc);
        } else {
            throw Error(ErrorKind::validation,
                        "chain artifacts verify against a family or graph instance");
        }
    } else if (kind == "partition") {
        const auto* fam = std::get_if<InstanceFamily>(&inst);
        if (!fam) {
            throw Error(ErrorKind::validation,
                        "partition artifacts verify against a family instance");
        }
        verify_partition_doc(report, *fam, doc);
    } else if (kind == "ordering") {
        const auto* v = std::get_if<VectorFamily>(&inst);
        if (!v) {
            throw Error(ErrorKind::validation,
                        "ordering artifacts verify against a vectors instance");
        }
        verify_ordering_doc(report, *v, doc);
    } else {
        throw Error(ErrorKind::parse, "unknown artifact type '" + kind + "'");
    }
    return report;
}

std::string verify_report_to_json(const VerifyReport& report) {
    json doc;
    doc["ok"] = report.ok;
    doc["violations"] = report.violations;
    return doc.dump(2);
}

}  // namespace balcov
