#include "sttt/decomposer.hpp"

#include <algorithm>

#include "sttt/gyarfas.hpp"

namespace sttt {

namespace {

[[noreturn]] void cert_fail(const std::string& what) { throw Error(ErrorKind::CertificationFailed, what); }

std::size_t size_bound(int t) { return 3 * static_cast<std::size_t>(t) + 11; }

VertexSet set_of(std::span<const Vertex> seq) { return normalized({seq.begin(), seq.end()}); }

Esd trivial_remainder(const Graph& g, const VertexSet& s) {
    Subgraph sub = induced_subgraph(g, set_difference(g.all_vertices(), closed_neighborhood(g, s)));
    return lift_esd(trivial_esd(sub.graph), sub);
}

}  // namespace

const char* to_string(Branch b) {
    switch (b) {
        case Branch::ShortPath: return "short-path";
        case Branch::Sttt: return "sttt";
        case Branch::Rigid: return "rigid";
        case Branch::RigidSeparator: return "rigid-separator";
        case Branch::BigParticle: return "big-particle";
    }
    return "?";
}

Anchors mark_anchors(const PathSeq& q, int t) {
    if (t < 1) throw Error(ErrorKind::PreconditionViolated, "t must be positive");
    const std::size_t n = q.size();
    const std::size_t tt = static_cast<std::size_t>(t);
    if (n <= size_bound(t))
        throw Error(ErrorKind::TooShort, "path has " + std::to_string(n) + " vertices, need more than " +
                                             std::to_string(size_bound(t)));
    Anchors a;
    a.t = t;
    a.ell = q[n - 1];
    std::size_t zi = n - tt - 2;
    a.q2.assign(q.begin() + zi, q.end());
    a.z = q[zi];
    a.z_prime = q[zi - 1];
    a.y = q[zi - 2];
    a.x = q[0];
    a.q1.assign(q.begin(), q.begin() + (zi - 1));
    a.qx = set_of(std::span(q).subspan(0, tt + 1));
    a.qy = set_of(std::span(q).subspan(zi - 2 - tt, tt + 1));
    a.qz = set_of(std::span(q).subspan(zi, tt + 1));
    a.y_set = set_union(set_union(a.qx, a.qy), a.qz);
    return a;
}

VertexSet build_gprime(const Graph& g, const Anchors& a) {
    VertexSet removed = set_difference(set_difference(open_neighborhood(g, a.y_set), set_of(a.q1)), set_of(a.q2));
    VertexSet keep = set_difference(g.all_vertices(), removed);
    for (Vertex v : a.q1)
        if (!contains(keep, v)) throw Error(ErrorKind::AssertionFailed, "path vertex " + std::to_string(v) + " missing from G'");
    for (Vertex v : a.q2)
        if (!contains(keep, v)) throw Error(ErrorKind::AssertionFailed, "path vertex " + std::to_string(v) + " missing from G'");
    if (contains(keep, a.z_prime)) throw Error(ErrorKind::AssertionFailed, "z' survived in G'");
    for (Vertex v : {a.x, a.y, a.z}) {
        auto nbrs = g.neighbors(v);
        auto deg = std::count_if(nbrs.begin(), nbrs.end(), [&](Vertex u) { return contains(keep, u); });
        if (deg != 1)
            throw Error(ErrorKind::AssertionFailed,
                        "terminal " + std::to_string(v) + " has degree " + std::to_string(deg) + " in G'");
    }
    return keep;
}

Esd normalize_isolated(const Graph& g, const Esd& d) {
    auto report = validate_esd(g, d);
    if (!report.ok()) throw Error(ErrorKind::InvalidEsd, report.summary());
    Esd out = d;
    for (HostId x : d.host.vertices()) {
        if (d.host.degree(x) != 0) continue;
        auto comps = components(g, d.eta(x));
        out.vertex_sets.erase(x);
        if (comps.empty()) {
            out.host.remove_vertex(x);
            continue;
        }
        out.vertex_sets[x] = std::move(comps[0]);
        for (std::size_t i = 1; i < comps.size(); ++i) {
            HostId fresh = out.host.fresh_id();
            out.host.add_vertex(fresh);
            out.vertex_sets[fresh] = std::move(comps[i]);
        }
    }
    return out;
}

std::optional<HostEdge> find_big_particle(const Graph& g, const Esd& d, Weight total) {
    bool any = false;
    for (const auto& p : particles(g, d)) {
        if (is_small(p.weight, total)) continue;
        any = true;
        if (p.kind == ParticleKind::Vertex && d.host.degree(std::get<HostId>(p.anchor)) == 0)
            throw Error(ErrorKind::ContractViolation,
                        "isolated host vertex " + std::to_string(std::get<HostId>(p.anchor)) + " carries weight " +
                            std::to_string(p.weight) + " of " + std::to_string(total));
    }
    if (!any) return std::nullopt;
    for (HostEdge e : d.host.edges())
        if (!is_small(g.weight_of(full_edge_particle(d, e)), total)) return e;
    throw Error(ErrorKind::Internal, "big particle not covered by any full edge");
}

BigParticleResult big_particle_separator(const Graph& g, const Anchors& a, const Subgraph& gprime, const Esd& d,
                                         HostEdge pq) {
    const Graph& gp = gprime.graph;
    auto report = validate_esd(gp, d);
    if (!report.ok()) cert_fail("decomposition of G' is invalid: " + report.summary());
    if (!d.host.has_edge(pq)) cert_fail("no host edge " + to_string(pq));

    VertexSet q1 = set_of(a.q1);
    VertexSet eta_pq = gprime.lift(d.eta(pq));
    VertexSet a_local = full_edge_particle(d, pq);
    VertexSet big = gprime.lift(a_local);
    if (is_small(g.weight_of(big), g.total_weight())) cert_fail("particle of " + to_string(pq) + " is not big");
    if (!set_intersection(q1, eta_pq).empty()) cert_fail("Claim 1: Q1 meets the set of " + to_string(pq));
    if (!set_intersection(q1, big).empty()) cert_fail("Claim 1: Q1 meets the full-edge particle of " + to_string(pq));

    BigParticleResult r;
    r.x = set_intersection(gprime.lift(closed_neighborhood(gp, a_local)), q1);
    if (r.x.size() > 4) cert_fail("|X| <= 4: got " + std::to_string(r.x.size()));
    try {
        r.x_a = gprime.lift(interface_dominators(gp, d, pq));
    } catch (const Error& e) {
        cert_fail(std::string("interface dominators: ") + e.what());
    }
    if (r.x_a.size() > 2) cert_fail("|X_A| <= 2");
    r.s = set_union(set_union(a.y_set, r.x), set_union(r.x_a, normalized({a.ell, a.z_prime})));
    if (r.s.size() > size_bound(a.t)) cert_fail("|S| <= 3t+11: got " + std::to_string(r.s.size()));
    if (!all_components_small(g, r.s)) cert_fail("Claim 2: G - N[S] has a big component");
    return r;
}

std::vector<std::pair<std::string, bool>> verify_outcome(const Graph& g, int t, const Outcome& out) {
    std::vector<std::pair<std::string, bool>> checks;
    if (const auto* copy = std::get_if<StttCopy>(&out.result)) {
        checks.emplace_back("verify_sttt", verify_sttt(g, *copy));
        checks.emplace_back("arm length", copy->t == t);
        return checks;
    }
    const auto& sep = std::get<SeparatorOutcome>(out.result);
    bool in_range = is_normalized(sep.s) && (sep.s.empty() || sep.s.back() < g.size());
    checks.emplace_back("S in range", in_range);
    checks.emplace_back("|S| <= 3t+11", sep.s.size() <= size_bound(t));
    if (!in_range) return checks;
    Subgraph sub = induced_subgraph(g, set_difference(g.all_vertices(), closed_neighborhood(g, sep.s)));
    Esd local;
    bool mapped = true;
    try {
        local = lower_esd(sep.esd, sub);
    } catch (const Error&) {
        mapped = false;
    }
    bool valid = mapped && validate_esd(sub.graph, local).ok();
    checks.emplace_back("esd valid", valid);
    checks.emplace_back("esd rigid", valid && is_rigid(local).ok());
    bool small = valid;
    if (valid)
        for (const auto& p : particles(sub.graph, local))
            if (!is_small(p.weight, g.total_weight())) small = false;
    checks.emplace_back("particles small", small);
    return checks;
}

Outcome decompose_from_path(const Graph& g, int t, const PathSeq& q, const TiatConfig& config) {
    if (t < 1) throw Error(ErrorKind::PreconditionViolated, "t must be positive");
    if (!is_induced_path(g, q)) throw Error(ErrorKind::PreconditionViolated, "Q is not an induced path");
    if (!all_components_small(g, q)) throw Error(ErrorKind::PreconditionViolated, "G - N[Q] has a big component");

    Outcome out;
    out.trace.q = q;
    const Weight total = g.total_weight();

    auto finish = [&]() -> Outcome {
        out.checks = verify_outcome(g, t, out);
        for (const auto& [name, ok] : out.checks)
            if (!ok) cert_fail("outcome check failed: " + name);
        return std::move(out);
    };

    if (q.size() <= size_bound(t)) {
        VertexSet s = set_of(q);
        out.result = SeparatorOutcome{s, trivial_remainder(g, s)};
        out.branch = Branch::ShortPath;
        return finish();
    }

    Anchors a = mark_anchors(q, t);
    out.trace.anchors = a;
    out.trace.gprime = build_gprime(g, a);
    out.trace.terminal_degrees_ok = true;
    Subgraph gp = induced_subgraph(g, out.trace.gprime);
    VertexSet z = gp.lower(normalized({a.x, a.y, a.z}));

    TiatConfig local_config = config;
    if (local_config.certificate && !local_config.certificate_graph) local_config.certificate_graph = &g;
    TiatAnswer answer = three_in_a_tree(TiatQuery{gp.graph, z, gp.to_parent}, local_config);

    if (auto* inc = std::get_if<InconclusiveAnswer>(&answer)) throw Error(ErrorKind::Inconclusive, inc->reason);

    if (auto* tree = std::get_if<TreeAnswer>(&answer)) {
        StttCopy copy;
        try {
            copy = extract_sttt(gp.graph, tree->tree, z, t);
        } catch (const Error& e) {
            cert_fail(std::string("tree answer does not yield S_{t,t,t}: ") + e.what());
        }
        copy.center = gp.to_parent[copy.center];
        for (auto& arm : copy.arms)
            for (auto& v : arm) v = gp.to_parent[v];
        out.result = std::move(copy);
        out.branch = Branch::Sttt;
        return finish();
    }

    Esd d = normalize_isolated(gp.graph, std::get<DecompositionAnswer>(answer).esd);
    auto big = find_big_particle(gp.graph, d, total);
    if (big) {
        out.trace.big_edge = *big;
        BigParticleResult r = big_particle_separator(g, a, gp, d, *big);
        out.trace.x = r.x;
        out.trace.x_a = r.x_a;
        out.result = SeparatorOutcome{r.s, trivial_remainder(g, r.s)};
        out.branch = Branch::BigParticle;
        return finish();
    }

    // all particles small: restrict to G - N[Y] and rigidify
    Subgraph rest = induced_subgraph(g, set_difference(g.all_vertices(), closed_neighborhood(g, a.y_set)));
    std::vector<Vertex> to_rest(gp.graph.size(), Subgraph::npos);
    for (Vertex i = 0; i < gp.graph.size(); ++i) to_rest[i] = rest.to_local[gp.to_parent[i]];
    VertexSet keep;
    for (Vertex i = 0; i < gp.graph.size(); ++i)
        if (to_rest[i] != Subgraph::npos) keep.push_back(i);
    if (keep.size() != rest.graph.size()) throw Error(ErrorKind::Internal, "G - N[Y] is not inside G'");
    Esd restricted = map_vertices(restrict(d, keep), to_rest);

    MakeRigidResult mr = make_rigid(rest.graph, restricted, total / 2);
    if (auto* rigid = std::get_if<RigidEsdResult>(&mr)) {
        out.trace.rigid_stats = rigid->stats;
        out.result = SeparatorOutcome{a.y_set, lift_esd(rigid->esd, rest)};
        out.branch = Branch::Rigid;
        return finish();
    }
    auto& sep = std::get<SeparatorResult>(mr);
    out.trace.rigid_stats = sep.stats;
    out.trace.x = rest.lift(sep.separator);
    VertexSet s = set_union(a.y_set, out.trace.x);
    out.result = SeparatorOutcome{s, trivial_remainder(g, s)};
    out.branch = Branch::RigidSeparator;
    return finish();
}

Outcome decompose(const Graph& g, int t, const TiatConfig& config) {
    if (t < 1) throw Error(ErrorKind::PreconditionViolated, "t must be positive");
    return decompose_from_path(g, t, gyarfas_path(g).path, config);
}

}  // namespace sttt
