#include <doctest.h>

#include <sstream>

#include "cgd/cli.hpp"
#include "cgd/errors.hpp"

using namespace cgd;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run call(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::main_entry(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("decompose p=3 r=2 s=2") {
    const Run r = call({"decompose", "--p", "3", "--r", "2", "--s", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["character_check"] == true);
    CHECK(j["dual"] == false);
    // 2 = -1 mod 3, so nabla(0) is not a summand: Y(4) = T(4) + T(2)
    bool has_zero = false;
    for (const json& s : j["summands"]) has_zero = has_zero || (s["m"] == 0 && s["I"].empty());
    CHECK_FALSE(has_zero);
    CHECK(j["summands"].size() == 2);
    CHECK(j["summands"][0]["m"] == 4);
    CHECK(j["summands"][0]["I"] == json::array({0}));
    CHECK(j["summands"][0]["sections"] == json::array({4, 0}));
    CHECK(j["summands"][0]["dim"] == 6);

    const Run q = call({"decompose", "--p", "5", "--r", "2", "--s", "2", "--format", "json"});
    const json jq = json::parse(q.out);
    bool five = false;
    for (const json& s : jq["summands"]) five = five || (s["m"] == 0 && s["I"].empty());
    CHECK(five);
}

TEST_CASE("ytilt p=2 r=4") {
    const Run r = call({"ytilt", "--p", "2", "--r", "4", "--s", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["contains"] == false);
    CHECK(j["tilting"] == json::array({4, 0}));
}

TEST_CASE("quadruple p=5 r=4 t=2") {
    for (const char* method : {"solve", "enumerate", "recursive"}) {
        const Run r = call({"quadruple", "--p", "5", "--r", "4", "--t", "2", "--method", method, "--format", "json"});
        REQUIRE(r.code == 0);
        const json q = json::parse(r.out)["quadruples"];
        REQUIRE(q.size() == 1);
        CHECK(q[0]["N"] == 0);
        CHECK(q[0]["sigma"] == 2);
        CHECK(q[0]["delta"] == 1);
        CHECK(q[0]["I"].empty());
    }
    const Run t = call({"quadruple", "--p", "5", "--r", "4", "--t", "2"});
    CHECK(t.out == "(N=0, sigma=2, delta=1, I={})\n");
}

TEST_CASE("char and ses") {
    Run r = call({"char", "--p", "3", "--r", "4", "--kind", "tilting", "--format", "json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["dim"] == 6);
    CHECK(j["chi"] == json::array({json::array({4, 1}), json::array({0, 1})}));

    r = call({"char", "--p", "3", "--r", "3", "--s", "2", "--kind", "tensor"});
    CHECK(r.code == 0);
    CHECK(r.out.find("chi(5) + chi(3) + chi(1)") != std::string::npos);

    r = call({"ses", "--p", "3", "--r", "5", "--s", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["rank"] == 21);
    CHECK(j["kernel_dim"] == 3);
}

TEST_CASE("verify") {
    const Run r = call({"verify", "--p", "3", "--bound", "30"});
    CHECK(r.code == 0);
    CHECK(r.out.find("26/26 passed") != std::string::npos);
    const Run j = call({"verify", "--p", "2", "--bound", "20", "--format", "json"});
    CHECK(json::parse(j.out)["all_passed"] == true);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(call({"decompose", "--p", "4", "--r", "1", "--s", "1"}).code == 2);
    CHECK(call({"decompose", "--p", "3", "--r", "-1", "--s", "1"}).code == 2);
    CHECK(call({"decompose", "--p", "3", "--r", "1"}).code == 2);
    CHECK(call({"frobnicate", "--p", "3"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK(call({"decompose", "--p", "3", "--r", "1", "--s", "1", "--format", "xml"}).code == 2);
    CHECK(call({"quadruple", "--p", "3", "--r", "3", "--t", "0"}).code == 2);
    CHECK(call({"ses", "--p", "3", "--r", "1", "--s", "2"}).code == 2);
    CHECK(call({"ses", "--p", "101", "--r", "2", "--s", "1"}).code == 2);
    const Run bad = call({"decompose", "--p", "6", "--r", "1", "--s", "1"});
    CHECK(bad.out.empty());
    CHECK_FALSE(bad.err.empty());
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args = {"decompose", "--p", "5", "--r", "37", "--s", "21", "--format", "json"};
    CHECK(call(args).out == call(args).out);
    const std::vector<std::string> table = {"decompose", "--p", "2", "--r", "19", "--s", "12"};
    CHECK(call(table).out == call(table).out);
}

TEST_CASE("json round trip") {
    for (Int p : {2, 3, 5, 7}) {
        for (Int r = 0; r <= 30; ++r) {
            for (Int s = 0; s <= 30; ++s) {
                const Decomposition d = decompose_tensor(r, s, Prime(p), DualPolicy::Dualize);
                const json j = json::parse(cli::to_json(d).dump());
                REQUIRE(cli::decomposition_from_json(j) == d);
            }
        }
    }
    const Run r = call({"decompose", "--p", "3", "--r", "2", "--s", "9", "--format", "json"});
    const Decomposition back = cli::decomposition_from_json(json::parse(r.out));
    CHECK(back == decompose_tensor(2, 9, Prime(3), DualPolicy::Dualize));
}
