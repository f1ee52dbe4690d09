#include "balcov.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

#include <json.hpp>

#include "balcov/chains.hpp"
#include "balcov/convert.hpp"
#include "balcov/core.hpp"
#include "balcov/generators.hpp"
#include "balcov/io.hpp"
#include "balcov/oracles.hpp"
#include "balcov/partition.hpp"
#include "balcov/steinitz.hpp"
#include "balcov/verify.hpp"

struct balcov_instance {
    balcov::Instance value;
};

namespace {

using nlohmann::json;

thread_local std::string t_last_error;

balcov_status status_from(balcov::ErrorKind kind) {
    using balcov::ErrorKind;
    switch (kind) {
        case ErrorKind::invalid_subset: return BALCOV_ERR_INVALID_SUBSET;
        case ErrorKind::precondition: return BALCOV_ERR_PRECONDITION;
        case ErrorKind::uniformity: return BALCOV_ERR_UNIFORMITY;
        case ErrorKind::arity: return BALCOV_ERR_ARITY;
        case ErrorKind::dimension: return BALCOV_ERR_DIMENSION;
        case ErrorKind::size: return BALCOV_ERR_SIZE;
        case ErrorKind::parameter: return BALCOV_ERR_PARAMETER;
        case ErrorKind::infeasible: return BALCOV_ERR_INFEASIBLE;
        case ErrorKind::generation: return BALCOV_ERR_GENERATION;
        case ErrorKind::reduction: return BALCOV_ERR_REDUCTION;
        case ErrorKind::parse: return BALCOV_ERR_PARSE;
        case ErrorKind::validation: return BALCOV_ERR_VALIDATION;
        case ErrorKind::bound: return BALCOV_ERR_BOUND;
        case ErrorKind::internal: return BALCOV_ERR_INTERNAL;
    }
    return BALCOV_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
balcov_status guarded(Fn&& fn) {
    try {
        fn();
        t_last_error.clear();
        return BALCOV_OK;
    } catch (const balcov::Error& e) {
        t_last_error = e.what();
        return status_from(e.kind());
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return BALCOV_ERR_INTERNAL;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return BALCOV_ERR_INTERNAL;
    }
}

balcov_status null_argument() {
    t_last_error = "null argument";
    return BALCOV_ERR_PARAMETER;
}

balcov::ChainAlgo pick_chain_algo(const balcov::InstanceFamily& fam, const char* algo) {
    if (algo == nullptr || *algo == '\0') {
        return fam.k() == 2 ? balcov::ChainAlgo::two : balcov::ChainAlgo::greedy;
    }
    return balcov::chain_algo_from_name(algo);
}

balcov::Rational param_rational(const json& doc, const char* field) {
    auto it = doc.find(field);
    if (it == doc.end()) {
        throw balcov::Error(balcov::ErrorKind::parse,
                            std::string("params: missing field \"") + field + "\"");
    }
    if (it->is_number_integer()) return balcov::Rational(it->get<long long>());
    if (it->is_string()) return balcov::parse_rational(it->get<std::string>());
    throw balcov::Error(balcov::ErrorKind::parse,
                        std::string("params: \"") + field + "\" must be an exact value");
}

int param_int(const json& doc, const char* field) {
    auto it = doc.find(field);
    if (it == doc.end() || !it->is_number_integer()) {
        throw balcov::Error(balcov::ErrorKind::parse,
                            std::string("params: \"") + field + "\" must be an integer");
    }
    return it->get<int>();
}

std::uint64_t param_seed(const json& doc) {
    auto it = doc.find("seed");
    if (it == doc.end()) return 0;
    if (!it->is_number_integer()) {
        throw balcov::Error(balcov::ErrorKind::parse, "params: \"seed\" must be an integer");
    }
    return it->get<std::uint64_t>();
}

std::string run_generate(const std::string& params_text) {
    json doc = json::parse(params_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        throw balcov::Error(balcov::ErrorKind::parse, "params must be a JSON object");
    }
    auto kind_it = doc.find("kind");
    if (kind_it == doc.end() || !kind_it->is_string()) {
        throw balcov::Error(balcov::ErrorKind::parse, "params: \"kind\" must be a string");
    }
    const std::string kind = kind_it->get<std::string>();

    if (kind == "random") {
        int n = param_int(doc, "n");
        int k = param_int(doc, "k");
        balcov::Rational c = param_rational(doc, "c");
        std::uint64_t seed = param_seed(doc);
        if (doc.contains("max_card")) {
            return balcov::serialize_family(
                balcov::gen_random_general(n, k, param_int(doc, "max_card"), c, seed));
        }
        return balcov::serialize_family(
            balcov::gen_random_family(n, k, param_int(doc, "r"), c, seed));
    }
    if (kind == "almost-regular") {
        balcov::AlmostRegularParams params;
        params.c = param_rational(doc, "c");
        params.eps = param_rational(doc, "eps");
        params.r = param_int(doc, "r");
        params.m = param_int(doc, "m");
        params.seed = param_seed(doc);
        if (doc.contains("retry_budget")) params.retry_budget = param_int(doc, "retry_budget");
        if (doc.contains("iid")) {
            if (!doc["iid"].is_boolean()) {
                throw balcov::Error(balcov::ErrorKind::parse, "params: \"iid\" must be a boolean");
            }
            params.iid = doc["iid"].get<bool>();
        }
        if (doc.contains("exhaustive_cap")) {
            params.exhaustive_cap = param_int(doc, "exhaustive_cap");
        }
        return balcov::almost_regular_to_json(balcov::gen_almost_regular(params));
    }
    if (kind == "hadamard") {
        return balcov::serialize_vectors(balcov::gen_hadamard_vectors(param_int(doc, "k")));
    }
    if (kind == "reduction") {
        balcov::Rational c = param_rational(doc, "c");
        balcov::Rational theta = param_rational(doc, "theta");
        auto vec_it = doc.find("vectors");
        if (vec_it == doc.end() || !vec_it->is_object()) {
            throw balcov::Error(balcov::ErrorKind::parse,
                                "params: reduction needs an embedded \"vectors\" instance");
        }
        balcov::Instance inner = balcov::parse_instance(vec_it->dump());
        const auto* v = std::get_if<balcov::VectorFamily>(&inner);
        if (v == nullptr) {
            throw balcov::Error(balcov::ErrorKind::parse,
                                "params: embedded instance must have kind \"vectors\"");
        }
        return balcov::serialize_family(balcov::vectors_to_family(*v, c, theta));
    }
    throw balcov::Error(balcov::ErrorKind::parse, "unknown generator kind '" + kind + "'");
}

std::string run_oracle(const balcov::Instance& inst, const std::string& which, int cap) {
    json doc;
    doc["schema"] = 1;
    doc["type"] = "oracle";
    doc["which"] = which;
    if (which == "chain") {
        const auto* fam = std::get_if<balcov::InstanceFamily>(&inst);
        if (fam == nullptr) {
            throw balcov::Error(balcov::ErrorKind::validation,
                                "the chain oracle needs a family instance");
        }
        balcov::ChainOracleResult best =
            cap > 0 ? balcov::optimal_chain(*fam, cap) : balcov::optimal_chain(*fam);
        doc["value"] = balcov::format_rational(best.value);
        doc["order"] = best.chain.order();
        json steps = json::array();
        for (const auto& t : best.chain.trace()) steps.push_back(balcov::format_rational(t));
        doc["step_unbalance"] = std::move(steps);
    } else if (which == "partition") {
        const auto* fam = std::get_if<balcov::InstanceFamily>(&inst);
        if (fam == nullptr) {
            throw balcov::Error(balcov::ErrorKind::validation,
                                "the partition oracle needs a family instance");
        }
        balcov::PartitionOracleResult best =
            cap > 0 ? balcov::optimal_partition(*fam, cap) : balcov::optimal_partition(*fam);
        doc["value"] = balcov::format_rational(best.value);
        doc["S"] = best.partition.S;
        doc["T"] = best.partition.T;
        json gaps = json::array();
        for (const auto& gp : best.partition.gaps) gaps.push_back(balcov::format_rational(gp));
        doc["gaps"] = std::move(gaps);
    } else if (which == "ordering") {
        const auto* v = std::get_if<balcov::VectorFamily>(&inst);
        if (v == nullptr) {
            throw balcov::Error(balcov::ErrorKind::validation,
                                "the ordering oracle needs a vectors instance");
        }
        balcov::Rational best = cap > 0 ? balcov::min_ordering_prefix_norm(*v, cap)
                                        : balcov::min_ordering_prefix_norm(*v);
        doc["value"] = balcov::format_rational(best);
    } else {
        throw balcov::Error(balcov::ErrorKind::parse, "unknown oracle '" + which + "'");
    }
    return doc.dump(2);
}

}  // namespace

extern "C" {

const char* balcov_version(void) { return "1.0.0"; }

const char* balcov_last_error(void) { return t_last_error.c_str(); }

void balcov_string_free(char* s) { std::free(s); }

balcov_status balcov_instance_parse(const char* json_text, balcov_instance** out) {
    if (json_text == nullptr || out == nullptr) return null_argument();
    *out = nullptr;
    return guarded([&] {
        auto* inst = new balcov_instance{balcov::parse_instance(json_text)};
        *out = inst;
    });
}

void balcov_instance_free(balcov_instance* inst) { delete inst; }

balcov_status balcov_instance_serialize(const balcov_instance* inst, char** out_json) {
    if (inst == nullptr || out_json == nullptr) return null_argument();
    *out_json = nullptr;
    return guarded([&] { *out_json = dup_string(balcov::serialize_instance(inst->value)); });
}

const char* balcov_instance_kind(const balcov_instance* inst) {
    if (inst == nullptr) return nullptr;
    if (std::holds_alternative<balcov::InstanceFamily>(inst->value)) return "family";
    if (std::holds_alternative<balcov::BlockedBipartiteGraph>(inst->value)) return "graph";
    return "vectors";
}

balcov_status balcov_instance_info(const balcov_instance* inst, char** out_json) {
    if (inst == nullptr || out_json == nullptr) return null_argument();
    *out_json = nullptr;
    return guarded([&] { *out_json = dup_string(balcov::instance_info_json(inst->value)); });
}

balcov_status balcov_chain(const balcov_instance* inst, const char* algo, char** out_json) {
    if (inst == nullptr || out_json == nullptr) return null_argument();
    *out_json = nullptr;
    return guarded([&] {
        if (const auto* fam = std::get_if<balcov::InstanceFamily>(&inst->value)) {
            balcov::ChainAlgo which = pick_chain_algo(*fam, algo);
            balcov::Chain chain = balcov::build_chain(*fam, which);
            *out_json = dup_string(balcov::chain_to_json(*fam, chain, which));
        } else if (const auto* g = std::get_if<balcov::BlockedBipartiteGraph>(&inst->value)) {
            balcov::InstanceFamily fam = balcov::graph_to_family(*g);
            balcov::ChainAlgo which = pick_chain_algo(fam, algo);
            balcov::Chain chain = balcov::build_chain(fam, which);
            *out_json = dup_string(balcov::graph_chain_to_json(*g, fam, chain, which));
        } else {
            throw balcov::Error(balcov::ErrorKind::validation,
                                "chains need a family or graph instance");
        }
    });
}

balcov_status balcov_partition(const balcov_instance* inst, const char* algo, int cap,
                               unsigned long long seed, char** out_json) {
    if (inst == nullptr || algo == nullptr || out_json == nullptr) return null_argument();
    *out_json = nullptr;
    return guarded([&] {
        const auto* fam = std::get_if<balcov::InstanceFamily>(&inst->value);
        if (fam == nullptr) {
            throw balcov::Error(balcov::ErrorKind::validation,
                                "partitions need a family instance");
        }
        const std::string name = algo;
        balcov::PartitionResult res;
        if (name == "tucker") {
            res = cap > 0 ? balcov::partition_tucker(*fam, cap, seed)
                          : balcov::partition_tucker(*fam, 20, seed);
        } else if (name == "pairwise") {
            res = balcov::partition_pairwise(*fam);
        } else {
            throw balcov::Error(balcov::ErrorKind::parse,
                                "unknown partition algorithm '" + name + "'");
        }
        *out_json = dup_string(balcov::partition_to_json(*fam, res, name));
    });
}

balcov_status balcov_order_vectors(const balcov_instance* inst, char** out_json) {
    if (inst == nullptr || out_json == nullptr) return null_argument();
    *out_json = nullptr;
    return guarded([&] {
        const auto* v = std::get_if<balcov::VectorFamily>(&inst->value);
        if (v == nullptr) {
            throw balcov::Error(balcov::ErrorKind::validation,
                                "ordering needs a vectors instance");
        }
        std::vector<int> order = balcov::steinitz_order(*v);
        *out_json = dup_string(balcov::ordering_to_json(*v, order));
    });
}

balcov_status balcov_convert(const balcov_instance* inst, const char* to,
                             unsigned long long scale, balcov_instance** out) {
    if (inst == nullptr || to == nullptr || out == nullptr) return null_argument();
    *out = nullptr;
    return guarded([&] {
        const std::string target = to;
        if (target == "graph") {
            const auto* fam = std::get_if<balcov::InstanceFamily>(&inst->value);
            if (fam == nullptr) {
                throw balcov::Error(balcov::ErrorKind::validation,
                                    "only family instances convert to graphs");
            }
            *out = new balcov_instance{
                balcov::family_to_graph(*fam, scale == 0 ? 1 : scale)};
        } else if (target == "family") {
            const auto* g = std::get_if<balcov::BlockedBipartiteGraph>(&inst->value);
            if (g == nullptr) {
                throw balcov::Error(balcov::ErrorKind::validation,
                                    "only graph instances convert to families");
            }
            *out = new balcov_instance{balcov::graph_to_family(*g)};
        } else {
            throw balcov::Error(balcov::ErrorKind::parse,
                                std::string("unknown conversion target '") + to + "'");
        }
    });
}

balcov_status balcov_generate(const char* params_json, char** out_json) {
    if (params_json == nullptr || out_json == nullptr) return null_argument();
    *out_json = nullptr;
    return guarded([&] { *out_json = dup_string(run_generate(params_json)); });
}

balcov_status balcov_oracle(const balcov_instance* inst, const char* which, int cap,
                            char** out_json) {
    if (inst == nullptr || which == nullptr || out_json == nullptr) return null_argument();
    *out_json = nullptr;
    return guarded([&] { *out_json = dup_string(run_oracle(inst->value, which, cap)); });
}

balcov_status balcov_verify(const balcov_instance* inst, const char* artifact_json, int* out_ok,
                            char** out_report_json) {
    if (inst == nullptr || artifact_json == nullptr || out_ok == nullptr ||
        out_report_json == nullptr) {
        return null_argument();
    }
    *out_ok = 0;
    *out_report_json = nullptr;
    return guarded([&] {
        balcov::VerifyReport report = balcov::verify_artifact(inst->value, artifact_json);
        *out_ok = report.ok ? 1 : 0;
        *out_report_json = dup_string(balcov::verify_report_to_json(report));
    });
}

balcov_status balcov_cover_slack(const balcov_instance* inst, char** out_value) {
    if (inst == nullptr || out_value == nullptr) return null_argument();
    *out_value = nullptr;
    return guarded([&] {
        if (const auto* fam = std::get_if<balcov::InstanceFamily>(&inst->value)) {
            *out_value = dup_string(balcov::format_rational(balcov::cover_slack(*fam)));
        } else if (const auto* g = std::get_if<balcov::BlockedBipartiteGraph>(&inst->value)) {
            *out_value = dup_string(
                balcov::format_rational(balcov::cover_slack(balcov::graph_to_family(*g))));
        } else {
            throw balcov::Error(balcov::ErrorKind::validation,
                                "cover slack needs a family or graph instance");
        }
    });
}

}  // extern "C"
