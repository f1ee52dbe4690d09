// Command-line front end. Talks to the library exclusively through the C
// interface in balcov.h; JSON handling here is plumbing for its own files.
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "balcov.h"

namespace {

using nlohmann::json;

struct CliError {
    int code;
    std::string message;
};

struct StringFree {
    void operator()(char* p) const { balcov_string_free(p); }
};
using CString = std::unique_ptr<char, StringFree>;

struct InstanceFree {
    void operator()(balcov_instance* p) const { balcov_instance_free(p); }
};
using InstancePtr = std::unique_ptr<balcov_instance, InstanceFree>;

// 0 = success, 1 = a bound/verification/generation failure, 2 = bad input
int status_exit(balcov_status st) {
    switch (st) {
        case BALCOV_OK: return 0;
        case BALCOV_ERR_BOUND:
        case BALCOV_ERR_GENERATION:
        case BALCOV_ERR_INTERNAL: return 1;
        default: return 2;
    }
}

[[noreturn]] void raise_status(balcov_status st) {
    throw CliError{status_exit(st), balcov_last_error()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{2, "cannot open " + path};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError{2, "cannot write " + path};
    out << text << "\n";
}

InstancePtr load_instance(const std::string& path) {
    std::string text = read_file(path);
    balcov_instance* raw = nullptr;
    balcov_status st = balcov_instance_parse(text.c_str(), &raw);
    if (st != BALCOV_OK) raise_status(st);
    return InstancePtr(raw);
}

json parse_json(const std::string& text, const std::string& what) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw CliError{2, what + " is not valid JSON"};
    return doc;
}

struct ChainOptions {
    std::string in, out, algo;
};

int run_chain(const ChainOptions& opt) {
    InstancePtr inst = load_instance(opt.in);
    char* raw = nullptr;
    balcov_status st = balcov_chain(inst.get(), opt.algo.empty() ? nullptr : opt.algo.c_str(),
                                    &raw);
    if (st != BALCOV_OK) raise_status(st);
    CString doc(raw);
    write_output(opt.out, doc.get());

    json parsed = parse_json(doc.get(), "chain output");
    int code = 0;
    if (!parsed.value("bound_holds", true)) {
        std::string algo = parsed.value("algo", "greedy");
        std::string name = algo == "two"       ? "unbalance(S_j) <= c"
                           : algo == "steinitz" ? "unbalance(S_j) <= 2(k-1)c"
                                                : "unbalance(S_j)^2 <= 2(k-1)c";
        std::cerr << "bound violated: " << name << " (max_unbalance "
                  << parsed.value("max_unbalance", "?") << ", bound_sq "
                  << parsed.value("bound_sq", "?") << ")\n";
        code = 1;
    }
    if (parsed.contains("graph") &&
        !parsed["graph"]["half_cover"].value("margins_hold", true)) {
        std::cerr << "bound violated: half-cover margin^2 < 2(k-1)c m^2\n";
        code = 1;
    }
    return code;
}

struct PartitionOptions {
    std::string in, out;
    std::string algo = "tucker";
    int cap = 0;
    std::uint64_t seed = 0;
};

int run_partition(const PartitionOptions& opt) {
    InstancePtr inst = load_instance(opt.in);
    char* raw = nullptr;
    balcov_status st = balcov_partition(inst.get(), opt.algo.c_str(), opt.cap, opt.seed, &raw);
    if (st != BALCOV_OK) raise_status(st);
    CString doc(raw);
    write_output(opt.out, doc.get());
    return 0;
}

struct SimpleOptions {
    std::string in, out;
};

int run_order_vectors(const SimpleOptions& opt) {
    InstancePtr inst = load_instance(opt.in);
    char* raw = nullptr;
    balcov_status st = balcov_order_vectors(inst.get(), &raw);
    if (st != BALCOV_OK) raise_status(st);
    CString doc(raw);
    write_output(opt.out, doc.get());
    return 0;
}

struct ConvertOptions {
    std::string in, out, to;
    std::uint64_t scale = 1;
};

int run_convert(const ConvertOptions& opt) {
    InstancePtr inst = load_instance(opt.in);
    balcov_instance* raw = nullptr;
    balcov_status st = balcov_convert(inst.get(), opt.to.c_str(), opt.scale, &raw);
    if (st != BALCOV_OK) raise_status(st);
    InstancePtr converted(raw);
    char* text = nullptr;
    st = balcov_instance_serialize(converted.get(), &text);
    if (st != BALCOV_OK) raise_status(st);
    CString doc(text);
    write_output(opt.out, doc.get());
    return 0;
}

struct GenOptions {
    std::string kind, out, c, eps, theta, vectors;
    int n = 0, k = 0, r = 0, m = 0, max_card = 0, retry_budget = 0;
    std::uint64_t seed = 0;
    bool iid = false;
};

int run_gen(const GenOptions& opt) {
    json params;
    params["kind"] = opt.kind;
    params["seed"] = opt.seed;
    if (opt.kind == "random") {
        if (opt.n <= 0 || opt.k <= 0 || opt.c.empty()) {
            throw CliError{2, "gen --kind random needs --n, --k, and --c"};
        }
        if ((opt.r > 0) == (opt.max_card > 0)) {
            throw CliError{2, "gen --kind random needs exactly one of --r or --max-card"};
        }
        params["n"] = opt.n;
        params["k"] = opt.k;
        params["c"] = opt.c;
        if (opt.r > 0) params["r"] = opt.r;
        if (opt.max_card > 0) params["max_card"] = opt.max_card;
    } else if (opt.kind == "almost-regular") {
        if (opt.c.empty() || opt.eps.empty() || opt.r <= 0 || opt.m <= 0) {
            throw CliError{2, "gen --kind almost-regular needs --c, --eps, --r, and --m"};
        }
        params["c"] = opt.c;
        params["eps"] = opt.eps;
        params["r"] = opt.r;
        params["m"] = opt.m;
        if (opt.retry_budget > 0) params["retry_budget"] = opt.retry_budget;
        if (opt.iid) params["iid"] = true;
    } else if (opt.kind == "hadamard") {
        if (opt.k <= 0) throw CliError{2, "gen --kind hadamard needs --k"};
        params["k"] = opt.k;
    } else if (opt.kind == "reduction") {
        if (opt.c.empty() || opt.theta.empty() || opt.vectors.empty()) {
            throw CliError{2, "gen --kind reduction needs --c, --theta, and --vectors"};
        }
        params["c"] = opt.c;
        params["theta"] = opt.theta;
        params["vectors"] = parse_json(read_file(opt.vectors), "vectors file");
    } else {
        throw CliError{2, "unknown generator kind '" + opt.kind + "'"};
    }

    char* raw = nullptr;
    balcov_status st = balcov_generate(params.dump().c_str(), &raw);
    if (st != BALCOV_OK) raise_status(st);
    CString doc(raw);
    write_output(opt.out, doc.get());

    json parsed = parse_json(doc.get(), "generator output");
    if (parsed.value("type", "") == "almost_regular" && !parsed.value("success", true)) {
        std::cerr << "generation failed: retry budget exhausted; per-bullet failure counts "
                  << parsed["failure_counts"].dump() << "\n";
        return 1;
    }
    return 0;
}

struct OracleOptions {
    std::string in, out, which;
    int cap = 0;
};

int run_oracle(const OracleOptions& opt) {
    InstancePtr inst = load_instance(opt.in);
    char* raw = nullptr;
    balcov_status st = balcov_oracle(inst.get(), opt.which.c_str(), opt.cap, &raw);
    if (st != BALCOV_OK) raise_status(st);
    CString doc(raw);
    write_output(opt.out, doc.get());
    return 0;
}

struct VerifyOptions {
    std::string in, out;
    std::string chain, partition, ordering, artifact;
};

int run_verify(const VerifyOptions& opt) {
    std::vector<std::string> given;
    for (const auto& path : {opt.chain, opt.partition, opt.ordering, opt.artifact}) {
        if (!path.empty()) given.push_back(path);
    }
    if (given.size() != 1) {
        throw CliError{2, "verify needs exactly one of --chain, --partition, --ordering, "
                          "--artifact"};
    }
    InstancePtr inst = load_instance(opt.in);
    std::string artifact = read_file(given.front());
    int ok = 0;
    char* raw = nullptr;
    balcov_status st = balcov_verify(inst.get(), artifact.c_str(), &ok, &raw);
    if (st != BALCOV_OK) raise_status(st);
    CString doc(raw);
    write_output(opt.out, doc.get());
    if (ok == 0) {
        json parsed = parse_json(doc.get(), "verification report");
        for (const auto& violation : parsed["violations"]) {
            std::cerr << "violated: " << violation.get<std::string>() << "\n";
        }
        return 1;
    }
    return 0;
}

struct BenchOptions {
    std::string suite, out;
};

struct BenchRow {
    std::string csv;
    int code = 0;
    std::string error;
};

std::string rational_num(const std::string& value) {
    auto slash = value.find('/');
    return slash == std::string::npos ? value : value.substr(0, slash);
}

std::string rational_den(const std::string& value) {
    auto slash = value.find('/');
    return slash == std::string::npos ? "1" : value.substr(slash + 1);
}

BenchRow bench_case(const json& item) {
    BenchRow row;
    try {
        if (!item.is_object()) throw CliError{2, "suite cases must be objects"};
        json params;
        params["kind"] = "random";
        for (const char* field : {"n", "k", "r"}) {
            if (!item.contains(field) || !item[field].is_number_integer()) {
                throw CliError{2, std::string("suite case needs integer \"") + field + "\""};
            }
            params[field] = item[field];
        }
        if (!item.contains("c")) throw CliError{2, "suite case needs \"c\""};
        params["c"] = item["c"];
        params["seed"] = item.value("seed", 0);
        std::string algo = item.value("algo", "greedy");

        char* gen_raw = nullptr;
        balcov_status st = balcov_generate(params.dump().c_str(), &gen_raw);
        if (st != BALCOV_OK) raise_status(st);
        CString instance_text(gen_raw);

        balcov_instance* inst_raw = nullptr;
        st = balcov_instance_parse(instance_text.get(), &inst_raw);
        if (st != BALCOV_OK) raise_status(st);
        InstancePtr inst(inst_raw);

        auto start = std::chrono::steady_clock::now();
        char* chain_raw = nullptr;
        st = balcov_chain(inst.get(), algo.c_str(), &chain_raw);
        auto stop = std::chrono::steady_clock::now();
        if (st != BALCOV_OK) raise_status(st);
        CString chain_text(chain_raw);

        json chain = json::parse(chain_text.get(), nullptr, false);
        if (chain.is_discarded()) throw CliError{1, "chain output is not valid JSON"};
        std::string max_unb = chain.value("max_unbalance", "0");
        std::string bound_sq = chain.value("bound_sq", "0");
        double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        char ms_text[32];
        std::snprintf(ms_text, sizeof(ms_text), "%.3f", ms);

        std::string c_text = item["c"].is_string() ? item["c"].get<std::string>()
                                                   : item["c"].dump();
        std::ostringstream line;
        line << item["n"].get<int>() << ',' << item["k"].get<int>() << ','
             << item["r"].get<int>() << ',' << c_text << ',' << algo << ','
             << rational_num(max_unb) << ',' << rational_den(max_unb) << ','
             << rational_num(bound_sq) << ',' << rational_den(bound_sq) << ',' << ms_text;
        row.csv = line.str();
    } catch (const CliError& e) {
        row.code = e.code;
        row.error = e.message;
    }
    return row;
}

int bench_threads(std::size_t cases) {
    unsigned threads = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("BC_THREADS")) {
        long parsed = std::strtol(env, nullptr, 10);
        if (parsed < 1) throw CliError{2, "BC_THREADS must be a positive integer"};
        threads = static_cast<unsigned>(parsed);
    }
    if (threads < 1) threads = 1;
    if (threads > cases) threads = static_cast<unsigned>(cases);
    return static_cast<int>(threads);
}

int run_bench(const BenchOptions& opt) {
    json suite = parse_json(read_file(opt.suite), "suite");
    if (!suite.contains("cases") || !suite["cases"].is_array() || suite["cases"].empty()) {
        throw CliError{2, "suite needs a nonempty \"cases\" array"};
    }
    const json& cases = suite["cases"];
    std::vector<BenchRow> rows(cases.size());

    int threads = bench_threads(cases.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t i = cursor.fetch_add(1); i < rows.size(); i = cursor.fetch_add(1)) {
            rows[i] = bench_case(cases[i]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].code != 0) {
            std::cerr << "case " << i + 1 << ": " << rows[i].error << "\n";
            return rows[i].code;
        }
    }
    std::ostringstream csv;
    csv << "n,k,r,c,algo,max_unbalance_num,max_unbalance_den,bound_sq_num,bound_sq_den,"
           "wall_ms";
    for (const auto& row : rows) csv << "\n" << row.csv;
    write_output(opt.out, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"balanced covering chains, partitions, and orderings"};
    app.set_version_flag("--version", balcov_version());
    app.require_subcommand(1);

    ChainOptions chain_opt;
    auto* chain = app.add_subcommand("chain", "build a balanced deletion chain");
    chain->add_option("--in", chain_opt.in, "instance file (family or graph)")->required();
    chain->add_option("--out", chain_opt.out, "output file (default stdout)");
    chain->add_option("--algo", chain_opt.algo, "greedy|two|steinitz (default: two when k=2)")
        ->check(CLI::IsMember({"greedy", "two", "steinitz"}));

    PartitionOptions part_opt;
    auto* part = app.add_subcommand("partition", "split the ground set with balanced halves");
    part->add_option("--in", part_opt.in, "family instance file")->required();
    part->add_option("--out", part_opt.out, "output file (default stdout)");
    part->add_option("--algo", part_opt.algo, "tucker|pairwise (default tucker)")
        ->check(CLI::IsMember({"tucker", "pairwise"}));
    part->add_option("--cap", part_opt.cap, "exact-search size limit (0 = default)");
    part->add_option("--seed", part_opt.seed, "seed for the above-cap local search");

    SimpleOptions order_opt;
    auto* order = app.add_subcommand("order-vectors", "order sum-zero vectors with small "
                                                      "prefix sums");
    order->add_option("--in", order_opt.in, "vectors instance file")->required();
    order->add_option("--out", order_opt.out, "output file (default stdout)");

    ConvertOptions conv_opt;
    auto* conv = app.add_subcommand("convert", "switch between family and graph form");
    conv->add_option("--in", conv_opt.in, "instance file")->required();
    conv->add_option("--out", conv_opt.out, "output file (default stdout)");
    conv->add_option("--to", conv_opt.to, "graph|family")
        ->required()
        ->check(CLI::IsMember({"graph", "family"}));
    conv->add_option("--scale", conv_opt.scale, "extra right-vertex multiplier (default 1)");

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "generate instances and test beds");
    gen->add_option("--kind", gen_opt.kind, "random|almost-regular|hadamard|reduction")
        ->required();
    gen->add_option("--out", gen_opt.out, "output file (default stdout)");
    gen->add_option("--n", gen_opt.n, "ground set size");
    gen->add_option("--k", gen_opt.k, "hypergraph count / Hadamard order");
    gen->add_option("--r", gen_opt.r, "edge cardinality / right degree");
    gen->add_option("--m", gen_opt.m, "right vertices per block");
    gen->add_option("--max-card", gen_opt.max_card, "mixed edge cardinalities up to this");
    gen->add_option("--c", gen_opt.c, "cover slack target, exact string");
    gen->add_option("--eps", gen_opt.eps, "degree slack, exact string");
    gen->add_option("--theta", gen_opt.theta, "norm fraction for the reduction");
    gen->add_option("--vectors", gen_opt.vectors, "vectors instance file for the reduction");
    gen->add_option("--seed", gen_opt.seed, "PRNG seed (default 0)");
    gen->add_option("--retry-budget", gen_opt.retry_budget, "sampling attempts before giving up");
    gen->add_flag("--iid", gen_opt.iid, "independent edge sampling (reference mode)");

    OracleOptions oracle_opt;
    auto* oracle = app.add_subcommand("oracle", "exhaustive reference optima");
    oracle->add_option("--in", oracle_opt.in, "instance file")->required();
    oracle->add_option("--out", oracle_opt.out, "output file (default stdout)");
    oracle->add_option("--which", oracle_opt.which, "chain|partition|ordering")
        ->required()
        ->check(CLI::IsMember({"chain", "partition", "ordering"}));
    oracle->add_option("--cap", oracle_opt.cap, "search size limit (0 = default)");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "recheck an artifact against its instance");
    verify->add_option("--in", verify_opt.in, "instance file")->required();
    verify->add_option("--out", verify_opt.out, "report file (default stdout)");
    verify->add_option("--chain", verify_opt.chain, "chain artifact to recheck");
    verify->add_option("--partition", verify_opt.partition, "partition artifact to recheck");
    verify->add_option("--ordering", verify_opt.ordering, "ordering artifact to recheck");
    verify->add_option("--artifact", verify_opt.artifact, "artifact of any type");

    BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "run a suite and emit CSV timings");
    bench->add_option("--suite", bench_opt.suite, "suite file with a \"cases\" array")
        ->required();
    bench->add_option("--out", bench_opt.out, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(chain)) return run_chain(chain_opt);
        if (app.got_subcommand(part)) return run_partition(part_opt);
        if (app.got_subcommand(order)) return run_order_vectors(order_opt);
        if (app.got_subcommand(conv)) return run_convert(conv_opt);
        if (app.got_subcommand(gen)) return run_gen(gen_opt);
        if (app.got_subcommand(oracle)) return run_oracle(oracle_opt);
        if (app.got_subcommand(verify)) return run_verify(verify_opt);
        if (app.got_subcommand(bench)) return run_bench(bench_opt);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
