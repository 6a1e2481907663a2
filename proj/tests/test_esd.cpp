#include <doctest.h>

#include "helpers.hpp"
#include "sttt/harness.hpp"

using namespace sttt;
using namespace testing;

namespace {

// K3 on a, b, c hung on the three leaves of a claw host.
Esd claw_host_k3() {
    Esd d;
    for (HostId x : {0u, 1u, 2u, 3u}) d.host.add_vertex(x);
    for (HostId leaf : {1u, 2u, 3u}) {
        d.host.add_edge(0, leaf);
        Vertex v = leaf - 1;
        d.edge_sets[make_edge(0, leaf)] = EdgeSets{{v}, {v}, {v}};
    }
    return d;
}

// P5 (v1..v5 = 0..4) on a single host edge.
Esd single_edge(VertexSet at_p, VertexSet at_q) {
    Esd d;
    d.host.add_vertex(0);
    d.host.add_vertex(1);
    d.host.add_edge(0, 1);
    d.edge_sets[make_edge(0, 1)] = EdgeSets{{0, 1, 2, 3, 4}, std::move(at_p), std::move(at_q)};
    return d;
}

const Particle& find(const std::vector<Particle>& ps, ParticleKind kind, HostId side = 0) {
    for (const auto& p : ps)
        if (p.kind == kind && (kind != ParticleKind::HalfEdge || p.side == side)) return p;
    FAIL("particle kind not present");
    return ps.front();
}

}  // namespace

TEST_CASE("claw host over K3 validates and every vertex is peripheral") {
    Graph g = complete(3);
    Esd d = claw_host_k3();
    CHECK(validate_esd(g, d).ok());
    CHECK(oracle::esd_valid(g, d));
    CHECK(is_rigid(d).ok());
    CHECK(peripheral_vertices(g, d) == VertexSet{0, 1, 2});
}

TEST_CASE("trivial decomposition") {
    CHECK(trivial_esd(Graph()).host.vertex_count() == 0);

    Graph conn = path(4);
    Esd one = trivial_esd(conn);
    CHECK(one.host.vertex_count() == 1);
    CHECK(validate_esd(conn, one).ok());
    auto ps = particles(conn, one);
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].members == VertexSet{0, 1, 2, 3});
    CHECK(peripheral_vertices(conn, one).empty());

    // weights 3 and 4
    Graph two = make(4, {{0, 1}, {2, 3}}, {1, 2, 2, 2});
    Esd d = trivial_esd(two);
    CHECK(validate_esd(two, d).ok());
    std::vector<Weight> ws;
    for (const auto& p : particles(two, d)) {
        CHECK(p.kind == ParticleKind::Vertex);
        ws.push_back(p.weight);
    }
    CHECK(ws == std::vector<Weight>{3, 4});
}

TEST_CASE("missing completeness edge is reported with its witness") {
    Graph g = make(2, {});
    Esd d;
    for (HostId x : {0u, 1u, 2u}) d.host.add_vertex(x);
    d.host.add_edge(0, 1);
    d.host.add_edge(0, 2);
    d.edge_sets[make_edge(0, 1)] = EdgeSets{{0}, {0}, {0}};
    d.edge_sets[make_edge(0, 2)] = EdgeSets{{1}, {1}, {1}};
    auto report = validate_esd(g, d);
    REQUIRE_FALSE(report.ok());
    bool found = false;
    for (const auto& v : report.violations) {
        CHECK(oracle::witness_holds(g, d, v));
        if (v.rule == Rule::Completeness) {
            found = true;
            CHECK(normalized(v.vertices) == VertexSet{0, 1});
            CHECK(std::find(v.host.begin(), v.host.end(), 0u) != v.host.end());
        }
    }
    CHECK(found);
    CHECK_FALSE(oracle::esd_valid(g, d));
}

TEST_CASE("other rule violations") {
    Graph g = path(5);
    SUBCASE("vertex missing from the partition") {
        Esd d = single_edge({0}, {4});
        d.edge_sets[make_edge(0, 1)].all = {0, 1, 3, 4};
        d.edge_sets[make_edge(0, 1)].at_p = {0};
        auto r = validate_esd(g, d);
        REQUIRE_FALSE(r.ok());
        CHECK(r.violations[0].rule == Rule::Partition);
    }
    SUBCASE("interface outside its edge set") {
        Esd d = single_edge({0}, {4});
        d.vertex_sets[0] = {0};
        d.edge_sets[make_edge(0, 1)].all = {1, 2, 3, 4};
        auto r = validate_esd(g, d);
        REQUIRE_FALSE(r.ok());
        bool subset = false;
        for (const auto& v : r.violations) subset = subset || v.rule == Rule::Subset;
        CHECK(subset);
    }
    SUBCASE("edge between the interiors of two host edges") {
        Esd d;
        for (HostId x : {0u, 1u, 2u, 3u}) d.host.add_vertex(x);
        d.host.add_edge(0, 1);
        d.host.add_edge(2, 3);
        d.edge_sets[make_edge(0, 1)] = EdgeSets{{0, 1, 2}, {0}, {0}};
        d.edge_sets[make_edge(2, 3)] = EdgeSets{{3, 4}, {4}, {4}};
        auto r = validate_esd(g, d);
        REQUIRE_FALSE(r.ok());
        for (const auto& v : r.violations) {
            CHECK(v.rule == Rule::EdgePattern);
            CHECK(oracle::witness_holds(g, d, v));
        }
    }
}

TEST_CASE("particles of a single host edge") {
    Graph g = path(5);
    Esd d = single_edge({0}, {4});
    REQUIRE(validate_esd(g, d).ok());
    auto ps = particles(g, d);
    CHECK(find(ps, ParticleKind::FullEdge).weight == 5);
    CHECK(find(ps, ParticleKind::HalfEdge, 0).members == VertexSet{0, 1, 2, 3});
    CHECK(find(ps, ParticleKind::HalfEdge, 0).weight == 4);
    CHECK(find(ps, ParticleKind::EdgeInterior).members == VertexSet{1, 2, 3});
    for (const auto& p : ps)
        if (p.kind == ParticleKind::Vertex) CHECK(p.members.empty());
    CHECK(max_particle_weight(g, d) == 5);
    CHECK(oracle::max_particle_weight(g, d) == 5);
}

TEST_CASE("triangle set joins the full-edge particles around it") {
    Graph g = make(1, {});
    Esd d;
    for (HostId x : {0u, 1u, 2u}) d.host.add_vertex(x);
    d.host.add_edge(0, 1);
    d.host.add_edge(0, 2);
    d.host.add_edge(1, 2);
    d.triangle_sets[make_triple(0, 1, 2)] = {0};
    REQUIRE(validate_esd(g, d).ok());
    auto ps = particles(g, d);
    CHECK(find(ps, ParticleKind::Triangle).members == VertexSet{0});
    CHECK(full_edge_particle(d, make_edge(0, 1)) == VertexSet{0});
    CHECK_FALSE(is_rigid(d).ok());
}

TEST_CASE("is_rigid") {
    CHECK(is_rigid(claw_host_k3()).ok());

    Esd d = single_edge({}, {4});
    auto r = is_rigid(d);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations[0].rule == Rule::Rigidity);
    CHECK(r.violations[0].host == std::vector<HostId>{0, 1, 0});

    Esd iso;
    iso.host.add_vertex(7);
    CHECK_FALSE(is_rigid(iso).ok());
}

TEST_CASE("restrict") {
    Graph g = path(5);
    Esd d = single_edge({0}, {4});
    CHECK(restrict(d, g.all_vertices()) == d);

    Esd none = restrict(d, VertexSet{});
    CHECK(none.eta(make_edge(0, 1)).empty());
    CHECK(validate_esd(Graph(), none).ok());

    Subgraph sub = induced_subgraph(g, VertexSet{1, 2, 3, 4});
    Esd r = lower_esd(restrict(d, sub.to_parent), sub);
    CHECK(r.interface(make_edge(0, 1), 0).empty());
    CHECK(validate_esd(sub.graph, r).ok());
    CHECK_FALSE(is_rigid(r).ok());
}

TEST_CASE("peripheral vertices of a path root's line graph") {
    // root P5, so G = P4 with one host edge per G-vertex
    Graph g = path(4);
    Esd d;
    for (HostId x = 0; x < 5; ++x) d.host.add_vertex(x);
    for (HostId x = 0; x < 4; ++x) {
        d.host.add_edge(x, x + 1);
        d.edge_sets[make_edge(x, x + 1)] = EdgeSets{{x}, {x}, {x}};
    }
    REQUIRE(validate_esd(g, d).ok());
    CHECK(peripheral_vertices(g, d) == VertexSet{0, 3});
    CHECK(oracle::peripheral(d) == VertexSet{0, 3});
}

TEST_CASE("interface dominators") {
    Graph g = path(5);
    CHECK(interface_dominators(g, single_edge({0}, {4}), make_edge(0, 1)) == VertexSet{0, 4});
    CHECK(interface_dominators(g, single_edge({0, 1}, {4}), make_edge(0, 1)) == VertexSet{0, 4});
    try {
        interface_dominators(g, single_edge({}, {4}), make_edge(0, 1));
        FAIL("expected NotRigid");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotRigid);
    }
}

TEST_CASE("generated decompositions: particle formulas, restriction, dominators, mutations") {
    for (int i = 0; i < 40; ++i) {
        GenParams p;
        p.family = Family::PlantedEsd;
        p.seed = 300 + i;
        p.host_n = 2 + i % 5;
        p.n = 6 + i;
        p.density = 0.2;
        p.wmax = 3;
        PlantedInstance inst = gen_planted_esd(p);
        const Graph& g = inst.graph;
        const Esd& d = *inst.esd;
        REQUIRE(validate_esd(g, d).ok());
        CHECK(is_rigid(d).ok());
        CHECK(oracle::esd_valid(g, d));

        // full-edge particle by set algebra
        for (HostEdge e : d.host.edges()) {
            VertexSet expect = set_union(set_union(d.eta(e.p), d.eta(e.q)), d.eta(e));
            for (HostTriple t : d.host.triangles())
                if (t.has(e.p) && t.has(e.q)) expect = set_union(expect, d.eta(t));
            CHECK(full_edge_particle(d, e) == expect);
        }
        CHECK(max_particle_weight(g, d) == oracle::max_particle_weight(g, d));

        // restriction to a random subset still validates
        VertexSet keep;
        for (Vertex v = 0; v < g.size(); ++v)
            if ((v * 7 + i) % 3) keep.push_back(v);
        Subgraph sub = induced_subgraph(g, keep);
        CHECK(validate_esd(sub.graph, lower_esd(restrict(d, keep), sub)).ok());

        // N(A) inside N(X_A)
        for (HostEdge e : d.host.edges()) {
            VertexSet a = full_edge_particle(d, e);
            VertexSet xa = interface_dominators(g, d, e);
            CHECK(xa.size() <= 2);
            CHECK(is_subset(open_neighborhood(g, a), closed_neighborhood(g, xa)));
        }

        // moving a vertex into a different set always breaks the partition
        Esd m = d;
        Vertex v = static_cast<Vertex>(i % g.size());
        HostId x = d.host.vertices().front();
        m.vertex_sets[x] = set_union(m.vertex_sets[x], VertexSet{v});
        if (!contains(d.eta(x), v)) {
            auto r = validate_esd(g, m);
            CHECK_FALSE(r.ok());
            for (const auto& viol : r.violations) CHECK(oracle::witness_holds(g, m, viol));
        }
    }
}
