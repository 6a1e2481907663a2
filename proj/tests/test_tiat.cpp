#include <doctest.h>

#include "helpers.hpp"
#include "sttt/harness.hpp"

using namespace sttt;
using namespace testing;

namespace {

LineGraphCert cert_of(const Graph& root) {
    LineGraphCert c{root, root.edges()};
    return c;
}

TiatConfig only(Backend b) {
    TiatConfig c;
    c.order = {b};
    return c;
}

// spider with arms of length `len`; centre 0, arm k is 1+k*len .. (k+1)*len
Graph spider(std::size_t len) {
    Edges e;
    for (Vertex k = 0; k < 3; ++k) {
        Vertex prev = 0;
        for (Vertex i = 0; i < len; ++i) {
            Vertex v = 1 + k * static_cast<Vertex>(len) + i;
            e.push_back({prev, v});
            prev = v;
        }
    }
    return Graph(1 + 3 * len, e);
}

}  // namespace

TEST_CASE("three_in_a_tree: exhaustive backend on P3") {
    auto a = three_in_a_tree(path(3), VertexSet{0, 1, 2}, only(Backend::Exhaustive));
    auto* t = std::get_if<TreeAnswer>(&a);
    REQUIRE(t);
    CHECK(t->tree == VertexSet{0, 1, 2});
}

TEST_CASE("three_in_a_tree: oracle backend answers are certified") {
    Graph k3 = complete(3);
    Esd claw;
    for (HostId x : {0u, 1u, 2u, 3u}) claw.host.add_vertex(x);
    for (HostId leaf : {1u, 2u, 3u}) {
        claw.host.add_edge(0, leaf);
        claw.edge_sets[make_edge(0, leaf)] = EdgeSets{{leaf - 1}, {leaf - 1}, {leaf - 1}};
    }
    TiatConfig c = only(Backend::Oracle);
    c.oracle = [&](const TiatQuery&) -> std::optional<TiatAnswer> { return DecompositionAnswer{claw}; };
    auto a = three_in_a_tree(k3, VertexSet{0, 1, 2}, c);
    auto* d = std::get_if<DecompositionAnswer>(&a);
    REQUIRE(d);
    CHECK(is_subset(VertexSet{0, 1, 2}, peripheral_vertices(k3, d->esd)));

    // three isolated vertices on three disjoint host edges
    Graph iso = make(3, {});
    Esd apart;
    for (HostId i = 0; i < 3; ++i) {
        apart.host.add_vertex(2 * i);
        apart.host.add_vertex(2 * i + 1);
        apart.host.add_edge(2 * i, 2 * i + 1);
        apart.edge_sets[make_edge(2 * i, 2 * i + 1)] = EdgeSets{{i}, {i}, {i}};
    }
    c.oracle = [&](const TiatQuery&) -> std::optional<TiatAnswer> { return DecompositionAnswer{apart}; };
    CHECK(std::holds_alternative<DecompositionAnswer>(three_in_a_tree(iso, VertexSet{0, 1, 2}, c)));

    // a tree that is not a tree
    c.oracle = [&](const TiatQuery&) -> std::optional<TiatAnswer> { return TreeAnswer{{0, 1, 2}}; };
    try {
        three_in_a_tree(k3, VertexSet{0, 1, 2}, c);
        FAIL("expected CertificationFailed");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CertificationFailed);
    }

    // a decomposition that leaves a terminal non-peripheral
    c.oracle = [&](const TiatQuery& q) -> std::optional<TiatAnswer> { return DecompositionAnswer{trivial_esd(q.graph)}; };
    CHECK_THROWS_AS(three_in_a_tree(k3, VertexSet{0, 1, 2}, c), Error);

    c.oracle = [](const TiatQuery&) -> std::optional<TiatAnswer> { return std::nullopt; };
    CHECK(std::holds_alternative<InconclusiveAnswer>(three_in_a_tree(k3, VertexSet{0, 1, 2}, c)));
}

TEST_CASE("three_in_a_tree falls through to the next backend") {
    // root triangle: certificate cannot make terminals peripheral
    Graph root = complete(3);
    TiatConfig c;
    c.order = {Backend::Certificate, Backend::Exhaustive};
    c.certificate = cert_of(root);
    Graph g = line_graph(root);
    auto a = three_in_a_tree(g, VertexSet{0, 1, 2}, c);
    CHECK(std::holds_alternative<InconclusiveAnswer>(a));
    CHECK_THROWS_AS(three_in_a_tree(g, VertexSet{0}, c), Error);
}

TEST_CASE("exhaustive_tree_search") {
    auto claw = exhaustive_tree_search(star(3), VertexSet{1, 2, 3}, 4);
    REQUIRE(std::holds_alternative<TreeAnswer>(claw));
    CHECK(std::get<TreeAnswer>(claw).tree == VertexSet{0, 1, 2, 3});

    CHECK(std::holds_alternative<NoTreeProven>(exhaustive_tree_search(complete(3), VertexSet{0, 1, 2}, 3)));

    // terminals at both ends and the middle of P30: the only tree is the whole path
    auto far = exhaustive_tree_search(path(30), VertexSet{0, 15, 29}, 12);
    CHECK(std::holds_alternative<BudgetExceeded>(far));
    auto all = exhaustive_tree_search(path(30), VertexSet{0, 15, 29}, 30);
    REQUIRE(std::holds_alternative<TreeAnswer>(all));
    CHECK(std::get<TreeAnswer>(all).tree.size() == 30);

    // C6 with terminals 0, 2, 4: any tree is a path on five vertices
    auto c6 = exhaustive_tree_search(cycle(6), VertexSet{0, 2, 4}, 6);
    REQUIRE(std::holds_alternative<TreeAnswer>(c6));
    CHECK(std::get<TreeAnswer>(c6).tree.size() == 5);
    CHECK(is_terminal_tree(cycle(6), std::get<TreeAnswer>(c6).tree, VertexSet{0, 2, 4}));
}

TEST_CASE("exhaustive_tree_search agrees with brute force on small graphs") {
    for (int i = 0; i < 40; ++i) {
        GenParams p;
        p.seed = 5 + i;
        p.n = 4 + i % 7;
        p.density = 0.3;
        Graph g = gen_random(p).graph;
        VertexSet z{0, static_cast<Vertex>(g.size() / 2), static_cast<Vertex>(g.size() - 1)};
        bool exists = false;
        for (std::uint32_t mask = 1; mask < (1u << g.size()) && !exists; ++mask) {
            VertexSet s;
            for (Vertex v = 0; v < g.size(); ++v)
                if (mask >> v & 1) s.push_back(v);
            exists = is_terminal_tree(g, s, z);
        }
        auto r = exhaustive_tree_search(g, z, g.size());
        CHECK(std::holds_alternative<TreeAnswer>(r) == exists);
        CHECK(std::holds_alternative<NoTreeProven>(r) == !exists);
    }
}

TEST_CASE("line_graph_esd") {
    Graph p4 = path(4);  // root edges a=01, b=12, c=23
    Graph g = line_graph(p4);
    REQUIRE(g == path(3));
    Esd d = line_graph_esd(g, cert_of(p4), g.all_vertices(), VertexSet{0, 2});
    CHECK(d.host.vertex_count() == 4);
    CHECK(d.host.edge_count() == 3);
    CHECK(validate_esd(g, d).ok());
    CHECK(is_rigid(d).ok());
    CHECK(peripheral_vertices(g, d) == VertexSet{0, 2});

    Graph claw = star(3);
    Graph k3 = line_graph(claw);
    REQUIRE(k3 == complete(3));
    Esd dc = line_graph_esd(k3, cert_of(claw), k3.all_vertices(), VertexSet{0, 1, 2});
    CHECK(peripheral_vertices(k3, dc) == VertexSet{0, 1, 2});

    Graph tri = complete(3);
    try {
        line_graph_esd(line_graph(tri), cert_of(tri), VertexSet{0, 1, 2}, VertexSet{0});
        FAIL("expected NotPeripheral");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPeripheral);
    }

    LineGraphCert wrong = cert_of(p4);
    std::swap(wrong.edge_map[0], wrong.edge_map[1]);
    CHECK_FALSE(check_line_graph_cert(g, wrong));
    CHECK_THROWS_AS(line_graph_esd(g, wrong, g.all_vertices(), {}), Error);
}

TEST_CASE("generated line graphs: certificate decompositions have singleton particles") {
    const char* roots[3] = {"cycle", "tree", "random"};
    for (int i = 0; i < 30; ++i) {
        GenParams p;
        p.family = Family::LineGraph;
        p.seed = 77 + i;
        p.root = roots[i % 3];
        p.n = 3 + i * 2;
        p.density = 0.1;
        p.wmax = 4;
        PlantedInstance inst = gen_line_graph(p);
        const Graph& g = inst.graph;
        REQUIRE(inst.cert);
        CHECK(check_line_graph_cert(g, *inst.cert));
        Esd d = line_graph_esd(g, *inst.cert, g.all_vertices(), {});
        CHECK(validate_esd(g, d).ok());
        CHECK(is_rigid(d).ok());
        for (const auto& part : particles(g, d)) {
            CHECK(part.members.size() <= 1);
            if (part.members.size() == 1) CHECK(part.weight == g.weight(part.members[0]));
        }
        std::string text = render_line_graph_cert(*inst.cert);
        LineGraphCert back = parse_line_graph_cert(text);
        CHECK(back.root == inst.cert->root);
        CHECK(back.edge_map == inst.cert->edge_map);
    }
}

TEST_CASE("line-graph certificate text format") {
    LineGraphCert c = parse_line_graph_cert("p 3\ne 0 1\ne 1 2\nm 0 1 1\nm 1 2 0\n");
    CHECK(c.root == path(3));
    CHECK(c.edge_map == std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {0, 1}});
    CHECK_THROWS_AS(parse_line_graph_cert("p 3\ne 0 1\nm 0 1 0\nm 0 1 0\n"), Error);
    CHECK_THROWS_AS(parse_line_graph_cert("p 3\ne 0 1\nm 0 1\n"), Error);
}

TEST_CASE("separation_esd") {
    // P3 and a lone vertex: terminals 0, 2 share a component
    Graph g = make(4, {{0, 1}, {1, 2}});
    auto d = separation_esd(g, VertexSet{0, 2, 3});
    REQUIRE(d);
    CHECK(is_terminal_decomposition(g, *d, VertexSet{0, 2, 3}));
    CHECK_FALSE(separation_esd(path(5), VertexSet{0, 2, 4}));
}

TEST_CASE("extract_sttt") {
    StttCopy c = extract_sttt(star(3), VertexSet{0, 1, 2, 3}, VertexSet{1, 2, 3}, 1);
    CHECK(c.center == 0);
    CHECK(c.vertices() == VertexSet{0, 1, 2, 3});
    CHECK(verify_sttt(star(3), c));

    Graph s3 = spider(3);
    StttCopy c2 = extract_sttt(s3, s3.all_vertices(), VertexSet{3, 6, 9}, 2);
    CHECK(c2.center == 0);
    for (const auto& arm : c2.arms) CHECK(arm.size() == 2);
    CHECK(c2.vertices() == VertexSet{0, 1, 2, 4, 5, 7, 8});
    CHECK(verify_sttt(s3, c2));

    try {
        extract_sttt(path(5), VertexSet{0, 1, 2, 3, 4}, VertexSet{0, 2, 4}, 1);
        FAIL("expected InvalidTreeShape");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidTreeShape);
    }
    try {
        extract_sttt(s3, s3.all_vertices(), VertexSet{3, 6, 9}, 4);
        FAIL("expected ArmTooShort");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ArmTooShort);
    }
}

TEST_CASE("verify_sttt") {
    StttCopy c;
    c.center = 0;
    c.t = 1;
    c.arms[0] = {1};
    c.arms[1] = {2};
    c.arms[2] = {3};
    CHECK(verify_sttt(star(3), c));
    CHECK(oracle::verify_sttt(star(3), c));
    Graph chord = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    CHECK_FALSE(verify_sttt(chord, c));
    CHECK_FALSE(oracle::verify_sttt(chord, c));
    c.arms[2] = {2};
    CHECK_FALSE(verify_sttt(star(3), c));

    GenParams p;
    p.family = Family::PlantedSttt;
    p.t = 2;
    p.n = 20;
    p.seed = 7;
    p.density = 0.3;
    PlantedInstance inst = gen_planted_sttt(p);
    REQUIRE(inst.copy);
    CHECK(verify_sttt(inst.graph, *inst.copy));
    CHECK(oracle::verify_sttt(inst.graph, *inst.copy));
}

TEST_CASE("find_sttt_exhaustive") {
    auto r = find_sttt_exhaustive(star(3), 1, 1000);
    REQUIRE(std::holds_alternative<StttCopy>(r));
    CHECK(oracle::verify_sttt(star(3), std::get<StttCopy>(r)));
    CHECK(std::holds_alternative<NoneProven>(find_sttt_exhaustive(star(3), 2, 1000)));
    CHECK(std::holds_alternative<NoneProven>(find_sttt_exhaustive(path(10), 1, 1000)));

    Graph s3 = spider(3);
    auto r3 = find_sttt_exhaustive(s3, 3, 100000);
    REQUIRE(std::holds_alternative<StttCopy>(r3));
    CHECK(oracle::verify_sttt(s3, std::get<StttCopy>(r3)));

    GenParams p;
    p.family = Family::Random;
    p.n = 120;
    p.density = 0.2;
    p.seed = 4;
    CHECK(std::holds_alternative<BudgetExceeded>(find_sttt_exhaustive(gen_random(p).graph, 6, 50)));
}

TEST_CASE("line graphs contain no spider") {
    const char* roots[3] = {"cycle", "tree", "random"};
    for (int i = 0; i < 15; ++i) {
        GenParams p;
        p.family = Family::LineGraph;
        p.seed = 900 + i;
        p.root = roots[i % 3];
        p.n = 4 + i % 10;
        p.density = 0.15;
        Graph g = gen_line_graph(p).graph;
        if (g.size() > 25) continue;
        for (int t = 1; t <= 2; ++t)
            CHECK(std::holds_alternative<NoneProven>(find_sttt_exhaustive(g, t, 10000000)));
    }
}

TEST_CASE("planted spiders are found by the exhaustive search") {
    for (int i = 0; i < 10; ++i) {
        GenParams p;
        p.family = Family::PlantedSttt;
        p.t = 1 + i % 2;
        p.n = 3 * p.t + 1 + i;
        p.density = 0.2;
        p.seed = 1234 + i;
        PlantedInstance inst = gen_planted_sttt(p);
        REQUIRE(inst.copy);
        CHECK(oracle::verify_sttt(inst.graph, *inst.copy));
        auto r = find_sttt_exhaustive(inst.graph, p.t, 10000000);
        REQUIRE(std::holds_alternative<StttCopy>(r));
        CHECK(oracle::verify_sttt(inst.graph, std::get<StttCopy>(r)));
    }
}
