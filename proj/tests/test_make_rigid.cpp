#include <doctest.h>

#include "helpers.hpp"
#include "sttt/harness.hpp"

using namespace sttt;
using namespace testing;

TEST_CASE("edge with both interfaces empty becomes an isolated host vertex") {
    // u - v on host edge 0-1 with empty interfaces, a on its own edge 2-3
    Graph g = make(3, {{0, 1}}, {1, 1, 2});
    Esd d;
    for (HostId x : {0u, 1u, 2u, 3u}) d.host.add_vertex(x);
    d.host.add_edge(0, 1);
    d.host.add_edge(2, 3);
    d.edge_sets[make_edge(0, 1)] = EdgeSets{{0, 1}, {}, {}};
    d.edge_sets[make_edge(2, 3)] = EdgeSets{{2}, {2}, {2}};
    auto res = make_rigid(g, d, 2);
    auto* ok = std::get_if<RigidEsdResult>(&res);
    REQUIRE(ok);
    CHECK(ok->stats.detached_edges == 1);
    bool carried = false;
    for (HostId x : ok->esd.host.vertices())
        if (ok->esd.host.degree(x) == 0) carried = carried || ok->esd.eta(x) == VertexSet{0, 1};
    CHECK(carried);
    CHECK(ok->esd.host.edge_count() == 1);
    CHECK(oracle::esd_valid(g, ok->esd));
    CHECK(oracle::esd_rigid(ok->esd));
}

TEST_CASE("edge with one empty interface is re-hung on a fresh pendant") {
    // a - b on host edge x=0, y=1 with only eta(xy, y) = {b}; c isolated, weight 2
    Graph g = make(3, {{0, 1}}, {1, 1, 2});
    Esd d;
    for (HostId x : {0u, 1u, 5u}) d.host.add_vertex(x);
    d.host.add_edge(0, 1);
    d.edge_sets[make_edge(0, 1)] = EdgeSets{{0, 1}, {}, {1}};
    d.vertex_sets[5] = {2};
    auto res = make_rigid(g, d, 2);
    auto* ok = std::get_if<RigidEsdResult>(&res);
    REQUIRE(ok);
    CHECK(ok->stats.rehung_edges == 1);
    auto edges = ok->esd.host.edges();
    REQUIRE(edges.size() == 1);
    HostEdge zy = edges[0];
    REQUIRE(zy.has(1));
    HostId z = zy.other(1);
    CHECK(z != 0);
    CHECK(ok->esd.host.degree(z) == 1);
    CHECK(ok->esd.eta(zy) == VertexSet{0, 1});
    CHECK(ok->esd.interface(zy, z) == VertexSet{0, 1});
    CHECK(ok->esd.interface(zy, 1) == VertexSet{1});
    CHECK_FALSE(ok->esd.host.has_vertex(0));
}

TEST_CASE("rigid input without triangles is returned unchanged") {
    Graph g = complete(3);
    Esd d;
    for (HostId x : {0u, 1u, 2u, 3u}) d.host.add_vertex(x);
    for (HostId leaf : {1u, 2u, 3u}) {
        d.host.add_edge(0, leaf);
        d.edge_sets[make_edge(0, leaf)] = EdgeSets{{leaf - 1}, {leaf - 1}, {leaf - 1}};
    }
    auto res = make_rigid(g, d, 1);
    auto* ok = std::get_if<RigidEsdResult>(&res);
    REQUIRE(ok);
    CHECK(ok->esd == d);
    CHECK(ok->stats.steps == 0);
}

TEST_CASE("merging a triple into a host vertex can force a separator") {
    // host triangle x y z plus pendant edge x a; eta(yz, y) is empty, so yz is
    // re-hung and xyz stops being a triangle. Its set {u} touches xy and xz,
    // lands in eta(x), and pushes the full edge xa above w.
    enum : Vertex { u, b, c, e, f, h };
    Graph g = make(6, {{b, c}, {b, f}, {c, f}, {c, e}, {u, b}, {u, c}, {f, h}}, {3, 1, 1, 1, 1, 3});
    constexpr HostId x = 0, y = 1, z = 2, a = 3;
    Esd d;
    for (HostId v : {x, y, z, a}) d.host.add_vertex(v);
    d.host.add_edge(x, y);
    d.host.add_edge(x, z);
    d.host.add_edge(y, z);
    d.host.add_edge(x, a);
    d.edge_sets[make_edge(x, y)] = EdgeSets{{b}, {b}, {b}};
    d.edge_sets[make_edge(x, z)] = EdgeSets{{c}, {c}, {c}};
    d.edge_sets[make_edge(y, z)] = EdgeSets{{e}, {}, {e}};
    d.edge_sets[make_edge(x, a)] = EdgeSets{{f, h}, {f}, {f}};
    d.triangle_sets[make_triple(x, y, z)] = {u};
    REQUIRE(validate_esd(g, d).ok());
    REQUIRE(g.total_weight() == 10);
    REQUIRE(max_particle_weight(g, d) <= 5);

    auto res = make_rigid(g, d, 5);
    auto* sep = std::get_if<SeparatorResult>(&res);
    REQUIRE(sep);
    CHECK(sep->separator.size() <= 2);
    CHECK(sep->offending == make_edge(x, a));
    CHECK(sep->stats.merged_into_vertex == 1);
    for (const auto& comp : oracle::components_after_removal(g, sep->separator)) {
        Weight w = 0;
        for (Vertex v : comp) w += g.weight(v);
        CHECK(w <= 5);
    }
}

TEST_CASE("make_rigid preconditions") {
    Graph g = path(5);
    Esd d;
    d.host.add_vertex(0);
    d.host.add_vertex(1);
    d.host.add_edge(0, 1);
    d.edge_sets[make_edge(0, 1)] = EdgeSets{{0, 1, 2, 3, 4}, {0}, {4}};
    // w = 1 is below half of W = 5
    CHECK_THROWS_AS(make_rigid(g, d, 1), Error);
    // the full-edge particle weighs 5 > w = 2
    try {
        make_rigid(g, d, 2);
        FAIL("expected PreconditionViolated");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PreconditionViolated);
    }
    Esd bad = d;
    bad.edge_sets[make_edge(0, 1)].all = {0, 1, 2, 4};
    CHECK_THROWS_AS(make_rigid(g, bad, 5), Error);
}

TEST_CASE("make_rigid contract on degraded decompositions") {
    std::size_t checked = 0;
    for (int i = 0; i < 60; ++i) {
        GenParams p;
        p.family = Family::PlantedEsd;
        p.degrade = true;
        p.seed = 60000 + i;
        p.host_n = 3 + i % 4;
        p.n = 10 + i % 30;
        p.density = 0.25;
        p.wmax = 3;
        PlantedInstance inst = gen_planted_esd(p);
        const Graph& g = inst.graph;
        const Esd& d = *inst.esd;
        REQUIRE(oracle::esd_valid(g, d));
        Weight w = g.total_weight() / 2;
        if (oracle::max_particle_weight(g, d) > w) continue;
        ++checked;
        auto res = make_rigid(g, d, w);
        if (auto* ok = std::get_if<RigidEsdResult>(&res)) {
            CHECK(oracle::esd_valid(g, ok->esd));
            CHECK(oracle::esd_rigid(ok->esd));
            CHECK(oracle::max_particle_weight(g, ok->esd) <= w);
            CHECK(ok->stats.steps <= ok->stats.step_cap);
        } else {
            auto& sep = std::get<SeparatorResult>(res);
            CHECK(sep.separator.size() <= 2);
            for (const auto& comp : oracle::components_after_removal(g, sep.separator))
                CHECK(g.weight_of(comp) <= w);
        }
    }
    CHECK(checked >= 40);
}
