#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "momentkit/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = momentkit::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name, const std::string& content) {
    const auto dir = std::filesystem::temp_directory_path() / "momentkit_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("validate builders") {
    auto r = run({"validate", "simplex:2:1", "--json"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["status"] == "ok");
    CHECK(j["result"]["smooth"] == true);
    CHECK(j["result"]["simple"] == true);
    CHECK(j["polytope"]["vertices"] == 3);

    j = run({"validate", "hirzebruch:2", "--json"}).json();
    CHECK(j["result"]["smooth"] == true);
    CHECK(j["polytope"]["vertices"] == 4);
}

TEST_CASE("validate reports the failing vertex of a non-smooth triangle") {
    const auto path = scratch("tall.json", R"({"dim": 2, "halfspaces": [
        {"normal": [1, 0], "offset": 0},
        {"normal": [0, 1], "offset": 0},
        {"normal": [-2, -1], "offset": -2}]})");
    const auto r = run({"validate", path.string(), "--json"});
    REQUIRE(r.code == 0);
    const auto j = r.json();
    CHECK(j["result"]["simple"] == true);
    CHECK(j["result"]["smooth"] == false);
    CHECK(j["result"]["det"] == "2");
    CHECK(j["result"]["vertex"] == nlohmann::json::array({"1", "0"}));
}

TEST_CASE("output is deterministic") {
    for (const std::string cmd : {"count", "volume", "betti", "decompose"}) {
        const auto a = run({cmd, "hirzebruch:1", "--json", "--seed", "3"});
        const auto b = run({cmd, "hirzebruch:1", "--json", "--seed", "3"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("commands agree with their oracles") {
    auto j = run({"count", "hirzebruch:1", "--json"}).json();
    CHECK(j["result"]["count"] == "5");
    CHECK(j["oracle"]["agree"] == true);

    j = run({"count", "cube:2:2", "--box", "-3..4,-1..5", "--json"}).json();
    CHECK(j["result"]["count"] == "9");

    j = run({"volume", "cube:3:2", "--json"}).json();
    CHECK(j["result"]["volume"] == "8");
    CHECK(j["oracle"]["agree"] == true);

    j = run({"volume", "simplex:2:1", "--xi", "1,2", "--json"}).json();
    CHECK(j["result"]["volume"] == "1/2");
    CHECK(j["result"]["xi_source"] == "user");

    j = run({"betti", "cube:3:1", "--json"}).json();
    CHECK(j["result"]["betti"] == nlohmann::json::array({1, 3, 3, 1}));

    j = run({"gkm-dim", "simplex:2:1", "--k", "1", "--json"}).json();
    CHECK(j["result"]["dimension"] == 3);
    CHECK(j["oracle"]["agree"] == true);

    j = run({"decompose", "simplex:2:1", "--json"}).json();
    CHECK(j["status"] == "ok");

    j = run({"catalog", "--json"}).json();
    CHECK(j["result"]["catalog"].size() == 21);
}

TEST_CASE("class files") {
    const auto good = scratch("good.json", R"({"0": {"1": "1"}, "1": {}})");
    const auto bad = scratch("bad.json", R"({"0": {"0": "1"}, "1": {}})");

    auto r = run({"gkm-check", "simplex:1:1", "--class", good.string(), "--json"});
    CHECK(r.code == 0);
    CHECK(r.json()["result"]["gkm"] == true);
    r = run({"gkm-check", "simplex:1:1", "--class", bad.string(), "--json"});
    CHECK(r.code == 0);
    CHECK(r.json()["result"]["gkm"] == false);

    r = run({"integrate", "simplex:1:1", "--class", good.string(), "--json"});
    CHECK(r.code == 0);
    CHECK(r.json()["result"]["pushforward"] == "1");
    CHECK(run({"integrate", "simplex:1:1", "--class", bad.string()}).code == 3);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"validate", "/nonexistent/p.json"}).code == 2);
    CHECK(run({"volume", "simplex:2:1", "--xi", "1,x"}).code == 2);
    const auto broken = scratch("broken.json", "{\"dim\": 2, ");
    CHECK(run({"validate", broken.string()}).code == 2);

    const auto tall = scratch("tall2.json", R"({"dim": 2, "halfspaces": [
        {"normal": [1, 0], "offset": 0}, {"normal": [0, 1], "offset": 0},
        {"normal": [-2, -1], "offset": -2}]})");
    CHECK(run({"volume", tall.string()}).code == 3);
    CHECK(run({"betti", tall.string()}).code == 3);

    const auto unbounded = scratch("unbounded.json", R"({"dim": 2, "halfspaces": [
        {"normal": [1, 0], "offset": 0}, {"normal": [0, 1], "offset": 0}]})");
    const auto r = run({"validate", unbounded.string(), "--json"});
    CHECK(r.code == 3);
    CHECK(r.json()["status"] == "domain_error");
    CHECK(run({"count", "simplex:2:1", "--box", "0..0,0..0"}).code == 3);
}
