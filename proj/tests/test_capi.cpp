#include <doctest.h>

#include <json.hpp>
#include <memory>
#include <string>

#include <balcov.h>

#include "balcov/rational.hpp"
#include "fixtures.hpp"

using nlohmann::json;

namespace {

struct InstanceDeleter {
    void operator()(balcov_instance* p) const { balcov_instance_free(p); }
};
using InstancePtr = std::unique_ptr<balcov_instance, InstanceDeleter>;

struct StringDeleter {
    void operator()(char* p) const { balcov_string_free(p); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

InstancePtr parse_ok(const std::string& text) {
    balcov_instance* raw = nullptr;
    REQUIRE(balcov_instance_parse(text.c_str(), &raw) == BALCOV_OK);
    REQUIRE(raw != nullptr);
    return InstancePtr(raw);
}

}  // namespace

TEST_CASE("version and kind report through the C boundary") {
    CHECK(std::string(balcov_version()) == "1.0.0");
    InstancePtr inst = parse_ok(fixtures::e1_json);
    CHECK(std::string(balcov_instance_kind(inst.get())) == "family");
    CHECK(balcov_instance_kind(nullptr) == nullptr);
}

TEST_CASE("serialization and info round trip through the C boundary") {
    InstancePtr inst = parse_ok(fixtures::e1_json);

    char* text = nullptr;
    REQUIRE(balcov_instance_serialize(inst.get(), &text) == BALCOV_OK);
    StringPtr guard(text);
    InstancePtr again = parse_ok(text);
    char* text2 = nullptr;
    REQUIRE(balcov_instance_serialize(again.get(), &text2) == BALCOV_OK);
    StringPtr guard2(text2);
    CHECK(std::string(text) == text2);

    char* info = nullptr;
    REQUIRE(balcov_instance_info(inst.get(), &info) == BALCOV_OK);
    StringPtr info_guard(info);
    json doc = json::parse(std::string(info));
    CHECK(doc["n"] == 4);
    CHECK(doc["cover_slack"] == "2/5");
    CHECK(doc["question_valid"] == true);
}

TEST_CASE("default chain on a two-family uses the sign-matching rule") {
    InstancePtr inst = parse_ok(fixtures::e1_json);
    char* out = nullptr;
    REQUIRE(balcov_chain(inst.get(), nullptr, &out) == BALCOV_OK);
    StringPtr guard(out);
    json doc = json::parse(std::string(out));
    CHECK(doc["algo"] == "two");
    CHECK(doc["max_unbalance"] == "3/10");
    CHECK(doc["bound_holds"] == true);
    CHECK(std::string(balcov_last_error()).empty());
}

TEST_CASE("verification accepts and then rejects through the C boundary") {
    InstancePtr inst = parse_ok(fixtures::e1_json);
    char* artifact = nullptr;
    REQUIRE(balcov_chain(inst.get(), "two", &artifact) == BALCOV_OK);
    StringPtr artifact_guard(artifact);

    int ok = 0;
    char* report = nullptr;
    REQUIRE(balcov_verify(inst.get(), artifact, &ok, &report) == BALCOV_OK);
    StringPtr report_guard(report);
    CHECK(ok == 1);

    json doc = json::parse(std::string(artifact));
    doc["order"] = json::array({1, 4, 2, 3});
    std::string tampered = doc.dump();
    int ok2 = 1;
    char* report2 = nullptr;
    REQUIRE(balcov_verify(inst.get(), tampered.c_str(), &ok2, &report2) == BALCOV_OK);
    StringPtr report2_guard(report2);
    CHECK(ok2 == 0);
    json rep = json::parse(std::string(report2));
    CHECK(rep["ok"] == false);
    CHECK(rep["violations"].size() > 0);
}

TEST_CASE("partition and oracle endpoints") {
    InstancePtr inst = parse_ok(fixtures::e1_json);

    char* part = nullptr;
    REQUIRE(balcov_partition(inst.get(), "tucker", 0, 0, &part) == BALCOV_OK);
    StringPtr part_guard(part);
    json pdoc = json::parse(std::string(part));
    CHECK(pdoc["max_gap"] == "0");
    CHECK(pdoc["certified"] == true);

    char* oracle = nullptr;
    REQUIRE(balcov_oracle(inst.get(), "chain", 0, &oracle) == BALCOV_OK);
    StringPtr oracle_guard(oracle);
    json odoc = json::parse(std::string(oracle));
    CHECK(odoc["value"] == "3/10");
}

TEST_CASE("conversion shuttles between weights and block counts") {
    InstancePtr inst = parse_ok(fixtures::e1_json);

    balcov_instance* graph_raw = nullptr;
    REQUIRE(balcov_convert(inst.get(), "graph", 0, &graph_raw) == BALCOV_OK);
    InstancePtr graph(graph_raw);
    CHECK(std::string(balcov_instance_kind(graph.get())) == "graph");

    balcov_instance* fam_raw = nullptr;
    REQUIRE(balcov_convert(graph.get(), "family", 0, &fam_raw) == BALCOV_OK);
    InstancePtr fam(fam_raw);
    char* a = nullptr;
    char* b = nullptr;
    REQUIRE(balcov_instance_serialize(inst.get(), &a) == BALCOV_OK);
    StringPtr a_guard(a);
    REQUIRE(balcov_instance_serialize(fam.get(), &b) == BALCOV_OK);
    StringPtr b_guard(b);
    CHECK(std::string(a) == b);
}

TEST_CASE("generation endpoints cover every parameter kind") {
    char* random_out = nullptr;
    REQUIRE(balcov_generate(R"({"kind":"random","n":8,"k":2,"r":2,"c":"2/5","seed":5})",
                            &random_out) == BALCOV_OK);
    StringPtr random_guard(random_out);
    InstancePtr random_inst = parse_ok(random_out);
    char* slack = nullptr;
    REQUIRE(balcov_cover_slack(random_inst.get(), &slack) == BALCOV_OK);
    StringPtr slack_guard(slack);
    CHECK(balcov::parse_rational(slack) <= balcov::Rational(2, 5));

    char* had_out = nullptr;
    REQUIRE(balcov_generate(R"({"kind":"hadamard","k":2})", &had_out) == BALCOV_OK);
    StringPtr had_guard(had_out);
    json had = json::parse(std::string(had_out));
    CHECK(had["kind"] == "vectors");

    // norms must fit under theta*c = 1/8
    std::string reduction_params =
        R"({"kind":"reduction","c":"1/4","theta":"1/2","vectors":
            {"schema":1,"kind":"vectors","d":1,"vectors":[["1/8"],["-1/8"]]}})";
    char* red_out = nullptr;
    REQUIRE(balcov_generate(reduction_params.c_str(), &red_out) == BALCOV_OK);
    StringPtr red_guard(red_out);
    json red = json::parse(std::string(red_out));
    CHECK(red["kind"] == "family");
    CHECK(red["n"] == 8);  // padded to 1/((1-theta) c)
}

TEST_CASE("failures surface as status codes with messages") {
    char* out = nullptr;
    CHECK(balcov_generate(R"({"kind":"hadamard","k":3})", &out) == BALCOV_ERR_PARAMETER);
    CHECK_FALSE(std::string(balcov_last_error()).empty());

    balcov_instance* inst = nullptr;
    CHECK(balcov_instance_parse("{{{", &inst) == BALCOV_ERR_PARSE);
    CHECK(inst == nullptr);

    CHECK(balcov_instance_parse(nullptr, &inst) == BALCOV_ERR_PARAMETER);
    CHECK(balcov_chain(nullptr, nullptr, &out) == BALCOV_ERR_PARAMETER);
    CHECK(balcov_cover_slack(nullptr, &out) == BALCOV_ERR_PARAMETER);
    CHECK(balcov_generate(R"({"kind":"hadamard","k":2})", nullptr) == BALCOV_ERR_PARAMETER);
}

TEST_CASE("cover slack of the worked instance") {
    InstancePtr inst = parse_ok(fixtures::e1_json);
    char* out = nullptr;
    REQUIRE(balcov_cover_slack(inst.get(), &out) == BALCOV_OK);
    StringPtr guard(out);
    CHECK(std::string(out) == "2/5");
}
