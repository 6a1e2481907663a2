// Acceptance suites. Each one regenerates its instances from fixed seeds and
// checks results with the brute-force oracles in harness.cpp.

#include <chrono>
#include <map>
#include <sstream>

#include "sttt/gyarfas.hpp"
#include "sttt/harness.hpp"

namespace sttt {

namespace {

using Clock = std::chrono::steady_clock;
using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

class Tally {
public:
    void fail(const std::string& what) {
        if (failures_++ < 5) notes_ << (notes_.tellp() > 0 ? "; " : "") << what;
    }
    std::size_t failures() const { return failures_; }
    std::string notes() const { return notes_.str(); }

private:
    std::size_t failures_ = 0;
    std::ostringstream notes_;
};

std::string finish(Tally& tally, const std::string& summary) {
    std::string s = summary;
    if (tally.failures()) s += "; " + std::to_string(tally.failures()) + " failures: " + tally.notes();
    return s;
}

// ---------------------------------------------------------------- 1

enum class Mutation { Move, DropInterface, DropCompletenessEdge };

struct Mutant {
    Graph g;
    Esd d;
    Mutation kind;
    Vertex a = 0, b = 0;
};

std::optional<Mutant> mutate(const Graph& g, const Esd& d, Mutation kind, Rng& rng) {
    Mutant m{g, d, kind};
    if (kind == Mutation::Move) {
        if (g.size() == 0) return std::nullopt;
        Vertex v = static_cast<Vertex>(pick(rng, 0, g.size() - 1));
        for (auto& [x, s] : m.d.vertex_sets) s = set_difference(s, VertexSet{v});
        for (auto& [t, s] : m.d.triangle_sets) s = set_difference(s, VertexSet{v});
        for (auto& [e, s] : m.d.edge_sets)
            s = EdgeSets{set_difference(s.all, VertexSet{v}), set_difference(s.at_p, VertexSet{v}),
                         set_difference(s.at_q, VertexSet{v})};
        auto hv = d.host.vertices();
        auto he = d.host.edges();
        auto ht = d.host.triangles();
        std::size_t choice = pick(rng, 0, 3);
        if (choice == 0 || he.empty()) {
            HostId x = hv[pick(rng, 0, hv.size() - 1)];
            m.d.vertex_sets[x] = set_union(m.d.vertex_sets[x], VertexSet{v});
        } else if (choice == 3 && !ht.empty()) {
            HostTriple t = ht[pick(rng, 0, ht.size() - 1)];
            m.d.triangle_sets[t] = set_union(m.d.triangle_sets[t], VertexSet{v});
        } else {
            HostEdge e = he[pick(rng, 0, he.size() - 1)];
            EdgeSets& s = m.d.edge_sets[e];
            s.all = set_union(s.all, VertexSet{v});
            if (choice == 1) s.at_p = set_union(s.at_p, VertexSet{v});
            if (choice == 2) s.at_q = set_union(s.at_q, VertexSet{v});
        }
        m.a = v;
        return m;
    }
    if (kind == Mutation::DropInterface) {
        std::vector<std::pair<HostEdge, bool>> sides;
        for (const auto& [e, s] : d.edge_sets) {
            if (!s.at_p.empty()) sides.push_back({e, true});
            if (!s.at_q.empty()) sides.push_back({e, false});
        }
        if (sides.empty()) return std::nullopt;
        auto [e, at_p] = sides[pick(rng, 0, sides.size() - 1)];
        VertexSet& side = at_p ? m.d.edge_sets[e].at_p : m.d.edge_sets[e].at_q;
        Vertex v = side[pick(rng, 0, side.size() - 1)];
        side = set_difference(side, VertexSet{v});
        m.a = v;
        return m;
    }
    // a mandatory edge between two interfaces at one host vertex
    std::vector<std::pair<Vertex, Vertex>> mandatory;
    for (HostId x : d.host.vertices())
        for (HostId y : d.host.neighbors(x))
            for (HostId z : d.host.neighbors(x))
                if (y < z)
                    for (Vertex a : d.interface(make_edge(x, y), x))
                        for (Vertex b : d.interface(make_edge(x, z), x)) mandatory.push_back({a, b});
    if (mandatory.empty()) return std::nullopt;
    auto [a, b] = mandatory[pick(rng, 0, mandatory.size() - 1)];
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto e : g.edges())
        if (e != std::pair{std::min(a, b), std::max(a, b)}) edges.push_back(e);
    m.g = Graph(g.size(), edges, {g.weights().begin(), g.weights().end()});
    m.a = a;
    m.b = b;
    return m;
}

SuiteResult validator_suite() {
    SuiteResult r{1, "validator", false, "", 0, 60};
    Tally tally;
    std::size_t instances = 0, mutants = 0, max_n = 0;
    for (int i = 0; i < 200; ++i) {
        GenParams p;
        p.family = Family::PlantedEsd;
        p.seed = 1000 + i;
        p.host_n = 2 + i % 6;
        p.n = 20 + (i * 7) % 60;
        p.density = 0.15;
        p.wmax = 5;
        PlantedInstance inst = gen_planted_esd(p);
        const Graph& g = inst.graph;
        const Esd& d = *inst.esd;
        max_n = std::max(max_n, g.size());
        ++instances;
        if (g.size() > 80) tally.fail("seed " + std::to_string(p.seed) + " has n > 80");
        if (!validate_esd(g, d).ok() || !oracle::esd_valid(g, d)) {
            tally.fail("seed " + std::to_string(p.seed) + " truth rejected");
            continue;
        }
        Rng rng(p.seed);
        int found = 0;
        for (int attempt = 0; attempt < 2000 && found < 20; ++attempt) {
            auto m = mutate(g, d, static_cast<Mutation>(attempt % 3), rng);
            if (!m || oracle::esd_valid(m->g, m->d)) continue;
            ++found;
            ++mutants;
            auto report = validate_esd(m->g, m->d);
            if (report.ok()) {
                tally.fail("seed " + std::to_string(p.seed) + " mutant accepted");
                continue;
            }
            for (const auto& v : report.violations)
                if (!oracle::witness_holds(m->g, m->d, v))
                    tally.fail("seed " + std::to_string(p.seed) + " bad witness: " + v.message);
            if (m->kind == Mutation::DropCompletenessEdge) {
                bool named = false;
                for (const auto& v : report.violations)
                    named = named || (v.rule == Rule::Completeness && normalized(v.vertices) ==
                                                                          normalized({m->a, m->b}));
                if (!named) tally.fail("seed " + std::to_string(p.seed) + " deleted edge not named");
            }
        }
        if (found < 20) tally.fail("seed " + std::to_string(p.seed) + " only " + std::to_string(found) + " mutants");
    }
    r.pass = tally.failures() == 0;
    r.detail = finish(tally, std::to_string(instances) + " instances (n <= " + std::to_string(max_n) + "), " +
                                 std::to_string(mutants) + " invalid mutants rejected with checked witnesses");
    return r;
}

// ---------------------------------------------------------------- 2

SuiteResult make_rigid_suite() {
    SuiteResult r{2, "make-rigid", false, "", 0, 60};
    Tally tally;
    std::size_t accepted = 0, skipped = 0, rigid = 0, separator = 0, max_steps = 0;
    for (int i = 0; accepted < 100 && i < 2000; ++i) {
        GenParams p;
        p.family = Family::PlantedEsd;
        p.degrade = true;
        p.seed = 5000 + i;
        p.host_n = 3 + i % 5;
        p.n = 15 + (i * 11) % 46;
        p.density = 0.2;
        p.wmax = 4;
        PlantedInstance inst = gen_planted_esd(p);
        const Graph& g = inst.graph;
        const Esd& d = *inst.esd;
        Weight w = g.total_weight() / 2;
        if (oracle::max_particle_weight(g, d) > w) {
            ++skipped;
            continue;
        }
        ++accepted;
        std::size_t size = d.host.vertex_count() + d.host.edge_count() + g.size();
        std::size_t cap = 8 * size * size * size;
        std::string tag = "seed " + std::to_string(p.seed);
        try {
            auto res = make_rigid(g, d, w);
            if (auto* ok = std::get_if<RigidEsdResult>(&res)) {
                ++rigid;
                max_steps = std::max(max_steps, ok->stats.steps);
                if (!oracle::esd_valid(g, ok->esd)) tally.fail(tag + " result invalid");
                if (!oracle::esd_rigid(ok->esd)) tally.fail(tag + " result not rigid");
                if (2 * oracle::max_particle_weight(g, ok->esd) > 2 * w) tally.fail(tag + " heavy particle");
                if (ok->stats.steps > cap) tally.fail(tag + " step cap");
            } else {
                auto& sep = std::get<SeparatorResult>(res);
                ++separator;
                max_steps = std::max(max_steps, sep.stats.steps);
                if (sep.separator.size() > 2) tally.fail(tag + " |X| > 2");
                for (const auto& c : oracle::components_after_removal(g, sep.separator)) {
                    Weight cw = 0;
                    for (Vertex v : c) cw += g.weight(v);
                    if (cw > w) tally.fail(tag + " component above w");
                }
                if (sep.stats.steps > cap) tally.fail(tag + " step cap");
            }
        } catch (const Error& e) {
            tally.fail(tag + ": " + e.what());
        }
    }
    if (accepted < 100) tally.fail("only " + std::to_string(accepted) + " instances met the particle bound");
    r.pass = tally.failures() == 0;
    r.detail = finish(tally, std::to_string(accepted) + " degraded instances (" + std::to_string(skipped) +
                                 " skipped: particle above W/2), " + std::to_string(rigid) + " rigid, " +
                                 std::to_string(separator) + " separator, max steps " + std::to_string(max_steps));
    return r;
}

// ---------------------------------------------------------------- 3

SuiteResult gyarfas_suite() {
    SuiteResult r{3, "gyarfas", false, "", 0, 120};
    Tally tally;
    const double densities[3] = {0.05, 0.1, 0.3};
    std::size_t longest = 0;
    for (int i = 0; i < 300; ++i) {
        GenParams p;
        p.family = Family::Random;
        p.seed = 9000 + i;
        p.n = 5 + (i * 37) % 196;
        p.density = densities[i % 3];
        p.wmin = 0;
        p.wmax = 10;
        Graph g = gen_random(p).graph;
        std::string tag = "seed " + std::to_string(p.seed);
        try {
            auto res = gyarfas_path(g);
            const auto& q = res.path;
            longest = std::max(longest, q.size());
            if (!oracle::is_induced_path(g, q)) tally.fail(tag + " not induced");
            if (!oracle::check_separator(g, q)) tally.fail(tag + " big component left");
            if (!q.empty()) {
                VertexSet prefix(q.begin(), q.end() - 1);
                if (oracle::check_separator(g, normalized(prefix))) tally.fail(tag + " not prefix-minimal");
            }
            if (res.trace.size() > g.size()) tally.fail(tag + " more than n extensions");
        } catch (const Error& e) {
            tally.fail(tag + ": " + e.what());
        }
    }
    r.pass = tally.failures() == 0;
    r.detail = finish(tally, "300 graphs, longest path " + std::to_string(longest));
    return r;
}

// ---------------------------------------------------------------- 4

SuiteResult path_invariant_suite() {
    SuiteResult r{4, "path-invariants", false, "", 0, 120};
    Tally tally;
    PathInvariantCounts counts;
    std::size_t exhaustive = 0;
    for (int i = 0; i < 100; ++i) {
        GenParams p;
        p.family = Family::PlantedEsd;
        p.seed = 20000 + i;
        p.host_n = 2 + i % 5;
        p.n = 8 + (i * 5) % 33;
        p.density = 0.2;
        PlantedInstance inst = gen_planted_esd(p);
        const Graph& g = inst.graph;
        auto [u, v] = inst.peripheral;
        bool all = g.size() <= 14;
        exhaustive += all;
        auto paths = induced_paths(g, u, v, all, 200, p.seed);
        if (paths.empty()) tally.fail("seed " + std::to_string(p.seed) + " no induced path");
        for (const auto& path : paths) check_path_invariants(g, *inst.esd, path, counts);
    }
    for (int k = 0; k < 4; ++k)
        if (counts.violations[k]) tally.fail("invariant " + std::to_string(k + 1) + ": " +
                                             std::to_string(counts.violations[k]) + " paths");
    r.pass = tally.failures() == 0;
    r.detail = finish(tally, std::to_string(counts.paths) + " paths checked (" + std::to_string(exhaustive) +
                                 " instances enumerated exhaustively), 0 violations expected");
    return r;
}

// ---------------------------------------------------------------- 5, 6, 9

struct EndToEnd {
    bool collected5 = false, collected6 = false;
    std::size_t runs = 0, long_runs = 0, degree_ok = 0, assertion_failures = 0;
};

EndToEnd& e2e() {
    static EndToEnd stats;
    return stats;
}

// independent re-check of a separator outcome
void check_separator_outcome(const Graph& g, int t, const SeparatorOutcome& sep, Tally& tally, const std::string& tag) {
    if (sep.s.size() > 3 * static_cast<std::size_t>(t) + 11) tally.fail(tag + " |S| too large");
    VertexSet removed;
    {
        oracle::Matrix m(g);
        std::vector<char> gone(g.size(), 0);
        for (Vertex s : sep.s) {
            gone[s] = 1;
            for (Vertex u = 0; u < g.size(); ++u)
                if (m(s, u)) gone[u] = 1;
        }
        for (Vertex v = 0; v < g.size(); ++v)
            if (!gone[v]) removed.push_back(v);
    }
    Subgraph sub = induced_subgraph(g, removed);
    Esd local;
    try {
        local = lower_esd(sep.esd, sub);
    } catch (const Error&) {
        tally.fail(tag + " decomposition mentions removed vertices");
        return;
    }
    if (!oracle::esd_valid(sub.graph, local)) tally.fail(tag + " decomposition invalid");
    if (!oracle::esd_rigid(local)) tally.fail(tag + " decomposition not rigid");
    if (2 * oracle::max_particle_weight(sub.graph, local) > g.total_weight()) tally.fail(tag + " big particle");
}

void note_run(const Outcome& out) {
    auto& s = e2e();
    ++s.runs;
    if (out.trace.anchors) {
        ++s.long_runs;
        if (out.trace.terminal_degrees_ok) ++s.degree_ok;
    }
}

SuiteResult separator_suite() {
    SuiteResult r{5, "separator-branch", false, "", 0, 180};
    Tally tally;
    std::map<Branch, std::size_t> branches;
    std::size_t inconclusive = 0;
    const char* roots[3] = {"cycle", "tree", "random"};
    for (int i = 0; i < 200; ++i) {
        GenParams p;
        p.family = Family::LineGraph;
        p.seed = 30000 + i;
        p.root = roots[i % 3];
        p.n = 3 + (i * 13) % 58;
        p.density = 0.08;
        p.wmax = (i / 3) % 2 ? 5 : 1;
        int t = 1 + (i / 6) % 3;
        PlantedInstance inst = gen_line_graph(p);
        TiatConfig config;
        config.order = {Backend::Certificate};
        config.certificate = inst.cert;
        std::string tag = "seed " + std::to_string(p.seed);
        try {
            Outcome out = decompose(inst.graph, t, config);
            note_run(out);
            ++branches[out.branch];
            if (auto* sep = std::get_if<SeparatorOutcome>(&out.result))
                check_separator_outcome(inst.graph, t, *sep, tally, tag);
            else
                tally.fail(tag + " returned S_{t,t,t} in a line graph");
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Inconclusive) ++inconclusive;
            if (e.kind() == ErrorKind::AssertionFailed) ++e2e().assertion_failures;
            tally.fail(tag + ": " + e.what());
        }
    }
    e2e().collected5 = true;
    r.pass = tally.failures() == 0 && inconclusive == 0;
    std::string mix;
    for (auto [b, c] : branches) mix += std::string(mix.empty() ? "" : ", ") + to_string(b) + " " + std::to_string(c);
    r.detail = finish(tally, "200 line graphs: " + mix + "; inconclusive " + std::to_string(inconclusive));
    return r;
}

SuiteResult sttt_suite() {
    SuiteResult r{6, "sttt-branch", false, "", 0, 300};
    Tally tally;
    std::map<Branch, std::size_t> branches;
    std::size_t inconclusive = 0;
    for (int i = 0; i < 100; ++i) {
        GenParams p;
        p.family = Family::PlantedSttt;
        p.seed = 40000 + i;
        p.t = 1 + i % 2;
        p.backbone = (i / 2) % 2 == 0;
        std::size_t lo = p.backbone ? 3 * p.t + 14 : 3 * p.t + 4;
        p.n = lo + (i * 3) % (23 - lo);
        p.density = 0.15;
        PlantedInstance inst = gen_planted_sttt(p);
        const Graph& g = inst.graph;
        std::string tag = "seed " + std::to_string(p.seed);
        if (g.size() > 22) tally.fail(tag + " has n > 22");
        TiatConfig config;
        config.order = {Backend::Separation, Backend::Exhaustive};
        config.tree_budget = g.size();
        try {
            Outcome out = decompose(g, p.t, config);
            note_run(out);
            ++branches[out.branch];
            if (auto* c = std::get_if<StttCopy>(&out.result)) {
                if (!oracle::verify_sttt(g, *c)) tally.fail(tag + " copy does not verify");
                for (const auto& arm : c->arms)
                    if (arm.size() != static_cast<std::size_t>(p.t)) tally.fail(tag + " arm length");
            } else {
                check_separator_outcome(g, p.t, std::get<SeparatorOutcome>(out.result), tally, tag);
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Inconclusive) ++inconclusive;
            if (e.kind() == ErrorKind::AssertionFailed) ++e2e().assertion_failures;
            tally.fail(tag + ": " + e.what());
        }
    }
    e2e().collected6 = true;
    r.pass = tally.failures() == 0;
    std::string mix;
    for (auto [b, c] : branches) mix += std::string(mix.empty() ? "" : ", ") + to_string(b) + " " + std::to_string(c);
    r.detail = finish(tally, "100 planted instances: " + mix + "; inconclusive " + std::to_string(inconclusive));
    if (branches[Branch::Sttt] == 0) {
        r.pass = false;
        r.detail += "; no run reached the S_{t,t,t} branch";
    }
    return r;
}

SuiteResult terminal_degree_suite() {
    SuiteResult r{9, "terminal-degree", false, "", 0, 600};
    if (!e2e().collected5) separator_suite();
    if (!e2e().collected6) sttt_suite();
    const auto& s = e2e();
    r.pass = s.assertion_failures == 0 && s.degree_ok == s.long_runs && s.long_runs > 0;
    r.detail = std::to_string(s.long_runs) + " long-path runs out of " + std::to_string(s.runs) + ", " +
               std::to_string(s.degree_ok) + " with x, y, z of degree 1 in G', " +
               std::to_string(s.assertion_failures) + " assertion failures";
    return r;
}

// ---------------------------------------------------------------- 7

SuiteResult big_particle_suite() {
    SuiteResult r{7, "big-particle", false, "", 0, 10};
    Tally tally;
    std::size_t ran = 0;
    for (const auto& f : big_particle_fixtures()) {
        ++ran;
        try {
            Outcome out = decompose_from_path(f.graph, f.t, f.q, fixture_config(f));
            if (f.corrupt) {
                tally.fail(f.name + " accepted");
                continue;
            }
            if (out.branch != Branch::BigParticle) {
                tally.fail(f.name + " took branch " + to_string(out.branch));
                continue;
            }
            const auto& sep = std::get<SeparatorOutcome>(out.result);
            const auto& a = *out.trace.anchors;
            HostEdge pq = *out.trace.big_edge;
            if (!set_intersection(normalized(a.q1), f.esd.eta(pq)).empty()) tally.fail(f.name + " first claim");
            if (out.trace.x.size() != f.expected_x || out.trace.x.size() > 4) tally.fail(f.name + " |X|");
            if (out.trace.x_a.size() > 2) tally.fail(f.name + " |X_A|");
            if (sep.s.size() > 3 * static_cast<std::size_t>(f.t) + 11) tally.fail(f.name + " |S|");
            if (!oracle::check_separator(f.graph, sep.s)) tally.fail(f.name + " second claim");
        } catch (const Error& e) {
            bool expected = f.corrupt && e.kind() == ErrorKind::CertificationFailed &&
                            std::string(e.what()).find("Claim 1") != std::string::npos;
            if (!expected) tally.fail(f.name + ": " + e.what());
        }
    }
    r.pass = tally.failures() == 0 && ran >= 5;
    r.detail = finish(tally, std::to_string(ran) + " fixtures (|X| in {0, 2, 4}, one corrupted)");
    return r;
}

// ---------------------------------------------------------------- 8

SuiteResult bounds_suite() {
    SuiteResult r{8, "bounds", false, "", 0, 1};
    Tally tally;
    std::size_t checked = 0;
    for (int t = 1; t <= 5; ++t) {
        if ((3 * t + 3) + 4 + 2 + 2 != 3 * t + 11) tally.fail("accounting t=" + std::to_string(t));
        for (std::size_t len : {20u, 40u}) {
            PathSeq q(len);
            for (Vertex i = 0; i < len; ++i) q[i] = i;
            std::string tag = "t=" + std::to_string(t) + " len=" + std::to_string(len);
            if (len > 3 * static_cast<std::size_t>(t) + 11) {
                Anchors a = mark_anchors(q, t);
                ++checked;
                if (a.y_set.size() != 3 * static_cast<std::size_t>(t) + 3) tally.fail(tag + " |Y|");
                if (a.qx.size() != static_cast<std::size_t>(t) + 1 || a.qy.size() != a.qx.size() ||
                    a.qz.size() != a.qx.size())
                    tally.fail(tag + " piece sizes");
            } else {
                try {
                    mark_anchors(q, t);
                    tally.fail(tag + " accepted a short path");
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::TooShort) tally.fail(tag + " wrong error");
                }
            }
        }
    }
    r.pass = tally.failures() == 0;
    r.detail = finish(tally, "accounting holds for t=1..5; |Y| = 3t+3 on " + std::to_string(checked) +
                                 " long paths, TooShort on the rest");
    return r;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"validator", "make-rigid", "gyarfas", "path-invariants", "separator-branch",
            "sttt-branch", "big-particle", "bounds", "terminal-degree"};
}

SuiteResult run_suite(const std::string& which) {
    auto names = suite_names();
    int k = 0;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (which == names[i] || which == std::to_string(i + 1)) k = static_cast<int>(i) + 1;
    if (k == 0) throw Error(ErrorKind::Syntax, "unknown suite '" + which + "'");
    auto start = Clock::now();
    SuiteResult r;
    switch (k) {
        case 1: r = validator_suite(); break;
        case 2: r = make_rigid_suite(); break;
        case 3: r = gyarfas_suite(); break;
        case 4: r = path_invariant_suite(); break;
        case 5: r = separator_suite(); break;
        case 6: r = sttt_suite(); break;
        case 7: r = big_particle_suite(); break;
        case 8: r = bounds_suite(); break;
        case 9: r = terminal_degree_suite(); break;
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (r.seconds > r.limit) {
        r.pass = false;
        r.detail += "; over the time limit";
    }
    return r;
}

std::string format_result(const SuiteResult& r) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << "criterion " << r.criterion << " [" << r.name << "]: " << (r.pass ? "PASS" : "FAIL") << "  " << r.seconds
        << "s / " << r.limit << "s  " << r.detail;
    return out.str();
}

}  // namespace sttt
