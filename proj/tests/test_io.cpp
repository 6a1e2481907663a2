#include <doctest.h>
#include <json.hpp>

#include "helpers.hpp"
#include "sttt/harness.hpp"
#include "sttt/io.hpp"

using namespace sttt;
using namespace testing;

TEST_CASE("decomposition JSON round-trips") {
    for (int i = 0; i < 20; ++i) {
        GenParams p;
        p.family = Family::PlantedEsd;
        p.degrade = i % 2;
        p.seed = 10 + i;
        p.n = 10 + i;
        Esd d = *gen_planted_esd(p).esd;
        std::string text = render_esd(d);
        Esd back = parse_esd(text);
        CHECK(render_esd(back) == text);
        CHECK(validate_esd(gen_planted_esd(p).graph, back).ok());
    }
}

TEST_CASE("decomposition JSON shape") {
    std::string text =
        R"({"host": {"vertices": [0, 1, 2], "edges": [[0, 1]]},
            "eta": {"vertex": {"2": [2]}, "edge": {"0-1": {"all": [0, 1], "at_p": [0], "at_q": [1]}}}})";
    Esd d = parse_esd(text);
    CHECK(d.host.vertex_count() == 3);
    CHECK(d.eta(make_edge(0, 1)) == VertexSet{0, 1});
    CHECK(d.interface(make_edge(0, 1), 1) == VertexSet{1});
    CHECK(d.eta(2u) == VertexSet{2});
    CHECK(validate_esd(path(3), d).ok() == false);  // 1-2 crosses into eta(2)
    CHECK(validate_esd(make(3, {{0, 1}}), d).ok());

    auto doc = nlohmann::json::parse(render_esd(d));
    CHECK(doc["eta"]["edge"]["0-1"]["at_q"] == nlohmann::json::array({1}));
    CHECK_FALSE(doc["eta"].contains("triangle"));
}

TEST_CASE("decomposition JSON rejects bad documents") {
    CHECK_THROWS_AS(parse_esd("{"), Error);
    CHECK_THROWS_AS(parse_esd(R"({"host": {"vertices": [0]}, "extra": 1})"), Error);
    CHECK_THROWS_AS(parse_esd(R"({"host": {"vertices": [0, 1], "edges": [[1, 0]]}})"), Error);
    CHECK_THROWS_AS(parse_esd(R"({"host": {"vertices": [0, 1], "edges": [[0, 1], [0, 1]]}})"), Error);
    CHECK_THROWS_AS(parse_esd(R"({"host": {"vertices": [0]}, "eta": {"vertex": {"3": [0]}}})"), Error);
    CHECK_THROWS_AS(parse_esd(R"({"host": {"vertices": [0, 1], "edges": [[0, 1]]}, "eta": {"edge": {"1-0": {"all": [0]}}}})"),
                    Error);
    CHECK_THROWS_AS(parse_esd(R"({"host": {"vertices": [0]}, "eta": {"vertex": {"0": [0]}, "edgy": {}}})"), Error);
}

TEST_CASE("outcome report") {
    Outcome out = decompose(cycle(5), 1, TiatConfig{});
    auto doc = nlohmann::json::parse(render_outcome_report(out, "c5.esd.json"));
    CHECK(doc["branch"] == "separator");
    CHECK(doc["S"] == nlohmann::json::array({0}));
    CHECK(doc["esd_file"] == "c5.esd.json");
    for (auto& [name, value] : doc["checks"].items()) CHECK(value == "pass");
    CHECK(doc["checks"].contains("|S| <= 3t+11"));
}

TEST_CASE("file helpers") {
    std::string path = "io_test_tmp.txt";
    write_file(path, "p 1\n");
    CHECK(read_file(path) == "p 1\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_file("/nonexistent/file"), Error);
}
