#include <doctest.h>

#include "helpers.hpp"
#include "sttt/gyarfas.hpp"
#include "sttt/harness.hpp"
#include "sttt/io.hpp"

using namespace sttt;
using namespace testing;

namespace {

std::string fingerprint(const PlantedInstance& inst) {
    std::string s = render_graph(inst.graph);
    if (inst.esd) s += render_esd(*inst.esd);
    if (inst.cert) s += render_line_graph_cert(*inst.cert);
    if (inst.copy) {
        s += std::to_string(inst.copy->center);
        for (const auto& arm : inst.copy->arms)
            for (Vertex v : arm) s += "," + std::to_string(v);
    }
    return s;
}

}  // namespace

TEST_CASE("generators are deterministic per seed") {
    for (Family f : {Family::PlantedEsd, Family::LineGraph, Family::PlantedSttt, Family::Random}) {
        GenParams p;
        p.family = f;
        p.n = 18;
        p.density = 0.2;
        p.wmax = 5;
        p.seed = 99;
        std::string a = fingerprint(generate(p));
        CHECK(a == fingerprint(generate(p)));
        p.seed = 100;
        CHECK(a != fingerprint(generate(p)));
    }
    CHECK(parse_family("planted-esd") == Family::PlantedEsd);
    CHECK(parse_family("line-graph") == Family::LineGraph);
    CHECK_THROWS_AS(parse_family("nope"), Error);
}

TEST_CASE("planted decompositions validate and plant two peripheral vertices") {
    for (int i = 0; i < 50; ++i) {
        GenParams p;
        p.family = Family::PlantedEsd;
        p.seed = 1 + i;
        p.host_n = 1 + i % 6;
        p.n = 1 + (i * 13) % 80;
        p.density = 0.3;
        PlantedInstance inst = gen_planted_esd(p);
        REQUIRE(inst.esd);
        CHECK(inst.graph.size() <= 80);
        CHECK(validate_esd(inst.graph, *inst.esd).ok());
        CHECK(is_rigid(*inst.esd).ok());
        CHECK(oracle::esd_valid(inst.graph, *inst.esd));
        auto per = peripheral_vertices(inst.graph, *inst.esd);
        CHECK(contains(per, inst.peripheral.first));
        CHECK(contains(per, inst.peripheral.second));
        CHECK(inst.peripheral.first != inst.peripheral.second);
        CHECK(oracle::peripheral(*inst.esd) == per);
    }
}

TEST_CASE("degraded decompositions stay valid but lose rigidity somewhere") {
    std::size_t non_rigid = 0;
    for (int i = 0; i < 30; ++i) {
        GenParams p;
        p.family = Family::PlantedEsd;
        p.degrade = true;
        p.seed = 50 + i;
        p.host_n = 5;
        p.n = 30;
        PlantedInstance inst = gen_planted_esd(p);
        CHECK(oracle::esd_valid(inst.graph, *inst.esd));
        non_rigid += !oracle::esd_rigid(*inst.esd);
    }
    CHECK(non_rigid > 10);
}

TEST_CASE("line-graph generator") {
    for (int i = 0; i < 20; ++i) {
        GenParams p;
        p.family = Family::LineGraph;
        p.root = "tree";
        p.n = 4;
        p.seed = i;
        PlantedInstance inst = gen_line_graph(p);
        const Graph& root = inst.cert->root;
        std::size_t max_deg = 0;
        for (Vertex v = 0; v < root.size(); ++v) max_deg = std::max(max_deg, root.degree(v));
        // a 4-vertex tree is P4 or K_{1,3}
        if (max_deg == 2) {
            CHECK(inst.graph.edge_count() == 2);
            CHECK(inst.graph.size() == 3);
        }
        if (max_deg == 3) CHECK(inst.graph.edge_count() == 3);
        CHECK(check_line_graph_cert(inst.graph, *inst.cert));
    }
    GenParams big;
    big.family = Family::LineGraph;
    big.n = 60;
    big.seed = 3;
    PlantedInstance inst = gen_line_graph(big);
    CHECK(check_line_graph_cert(inst.graph, *inst.cert));
}

TEST_CASE("planted spider generator") {
    GenParams p;
    p.family = Family::PlantedSttt;
    p.t = 1;
    p.n = 4;
    p.density = 0;
    p.seed = 1;
    PlantedInstance claw = gen_planted_sttt(p);
    CHECK(claw.graph.edge_count() == 3);
    CHECK(oracle::verify_sttt(claw.graph, *claw.copy));

    for (int i = 0; i < 20; ++i) {
        GenParams q;
        q.family = Family::PlantedSttt;
        q.t = 1 + i % 3;
        q.n = 25;
        q.density = 0.3;
        q.backbone = i % 2;
        q.seed = 30 + i;
        PlantedInstance inst = gen_planted_sttt(q);
        CHECK(oracle::verify_sttt(inst.graph, *inst.copy));
    }
}

TEST_CASE("check_separator") {
    CHECK(check_separator(star(6), VertexSet{0}));
    CHECK_FALSE(check_separator(path(9), VertexSet{}));
    CHECK(check_separator(path(9), VertexSet{4}));
    CHECK(oracle::check_separator(path(9), VertexSet{4}));
}

TEST_CASE("oracles agree with the library on random instances") {
    for (int i = 0; i < 30; ++i) {
        GenParams p;
        p.seed = 2000 + i;
        p.n = 5 + i;
        p.density = 0.15;
        Graph g = gen_random(p).graph;
        PathSeq q = gyarfas_path(g).path;
        CHECK(oracle::is_induced_path(g, q) == is_induced_path(g, q));
        VertexSet s = normalized(q);
        CHECK(oracle::check_separator(g, s) == all_components_small(g, s));
        auto mine = components_after_removal(g, s);
        auto theirs = oracle::components_after_removal(g, s);
        std::sort(mine.begin(), mine.end());
        std::sort(theirs.begin(), theirs.end());
        CHECK(mine == theirs);
        CHECK(oracle::esd_valid(g, trivial_esd(g)));
    }
}

TEST_CASE("induced path enumeration") {
    auto all = induced_paths(cycle(6), 0, 3, true, 0, 1);
    CHECK(all.size() == 2);
    for (const auto& p : all) {
        CHECK(p.front() == 0);
        CHECK(p.back() == 3);
        CHECK(oracle::is_induced_path(cycle(6), p));
    }
    auto sampled = induced_paths(cycle(6), 0, 3, false, 10, 5);
    CHECK(sampled.size() == 10);
}

TEST_CASE("path invariants hold on planted decompositions and catch a bad one") {
    PathInvariantCounts counts;
    for (int i = 0; i < 20; ++i) {
        GenParams p;
        p.family = Family::PlantedEsd;
        p.seed = 31 + i;
        p.host_n = 2 + i % 4;
        p.n = 8 + i % 6;
        p.density = 0.25;
        PlantedInstance inst = gen_planted_esd(p);
        auto [u, v] = inst.peripheral;
        for (const auto& path : induced_paths(inst.graph, u, v, true, 0, 0))
            check_path_invariants(inst.graph, *inst.esd, path, counts);
    }
    CHECK(counts.paths > 0);
    for (auto c : counts.violations) CHECK(c == 0);

    // two path vertices in one interface
    Graph g = path(5);
    Esd d;
    d.host.add_vertex(0);
    d.host.add_vertex(1);
    d.host.add_edge(0, 1);
    d.edge_sets[make_edge(0, 1)] = EdgeSets{{0, 1, 2, 3, 4}, {0, 1}, {4}};
    REQUIRE(validate_esd(g, d).ok());
    PathInvariantCounts bad;
    check_path_invariants(g, d, PathSeq{0, 1, 2, 3, 4}, bad);
    CHECK(bad.violations[0] == 1);
}

TEST_CASE("suite registry") {
    auto names = suite_names();
    CHECK(names.size() == 9);
    SuiteResult r = run_suite("8");
    CHECK(r.criterion == 8);
    CHECK(r.pass);
    CHECK(format_result(r).rfind("criterion 8 [bounds]: PASS", 0) == 0);
    CHECK_THROWS_AS(run_suite("10"), Error);
}
