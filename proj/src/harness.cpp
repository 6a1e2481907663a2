#include "sttt/harness.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace sttt {

using Rng = std::mt19937_64;

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

std::vector<Weight> random_weights(Rng& rng, std::size_t n, Weight lo, Weight hi) {
    std::vector<Weight> w(n);
    for (auto& x : w) x = std::uniform_int_distribution<Weight>(lo, std::max(lo, hi))(rng);
    return w;
}

class EdgeList {
public:
    void add(Vertex u, Vertex v) {
        if (u == v) return;
        if (u > v) std::swap(u, v);
        set_.insert({u, v});
    }
    void erase(Vertex u, Vertex v) { set_.erase({std::min(u, v), std::max(u, v)}); }
    std::vector<std::pair<Vertex, Vertex>> list() const { return {set_.begin(), set_.end()}; }

private:
    std::set<std::pair<Vertex, Vertex>> set_;
};

// random spanning tree over `members`, in a random order
void connect(Rng& rng, std::vector<Vertex> members, EdgeList& edges) {
    std::shuffle(members.begin(), members.end(), rng);
    for (std::size_t i = 1; i < members.size(); ++i) edges.add(members[i], members[uniform(rng, 0, i - 1)]);
}

void sprinkle(Rng& rng, const VertexSet& a, const VertexSet& b, double p, EdgeList& edges) {
    for (Vertex u : a)
        for (Vertex v : b)
            if (u != v && coin(rng, p)) edges.add(u, v);
}

}  // namespace

const char* to_string(Family f) {
    switch (f) {
        case Family::PlantedEsd: return "planted-esd";
        case Family::LineGraph: return "line-graph";
        case Family::PlantedSttt: return "planted-sttt";
        case Family::Random: return "random";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::PlantedEsd, Family::LineGraph, Family::PlantedSttt, Family::Random})
        if (name == to_string(f)) return f;
    throw Error(ErrorKind::Syntax, "unknown family '" + name + "'");
}

PlantedInstance generate(const GenParams& p) {
    switch (p.family) {
        case Family::PlantedEsd: return gen_planted_esd(p);
        case Family::LineGraph: return gen_line_graph(p);
        case Family::PlantedSttt: return gen_planted_sttt(p);
        case Family::Random: return gen_random(p);
    }
    throw Error(ErrorKind::Internal, "bad family");
}

// ---------------------------------------------------------------------------
// planted extended strip decompositions

namespace {

enum class SlotKind { Vertex, AtP, AtQ, Both, Interior, Triangle };

struct Slot {
    SlotKind kind;
    HostId x = 0;
    HostEdge e{};
    HostTriple t{};
    bool extendable = true;
};

}  // namespace

PlantedInstance gen_planted_esd(const GenParams& p) {
    Rng rng(p.seed);
    Esd d;
    const std::size_t core = std::max<std::size_t>(1, p.host_n);
    for (HostId x = 0; x < core; ++x) d.host.add_vertex(x);
    for (HostId x = 1; x < core; ++x) d.host.add_edge(x, static_cast<HostId>(uniform(rng, 0, x - 1)));
    for (HostId a = 0; a < core; ++a)
        for (HostId b = a + 1; b < core; ++b)
            if (!d.host.has_edge({a, b}) && coin(rng, p.density)) d.host.add_edge(a, b);
    HostId pend_u = static_cast<HostId>(core), pend_v = pend_u + 1;
    d.host.add_vertex(pend_u);
    d.host.add_vertex(pend_v);
    d.host.add_edge(pend_u, static_cast<HostId>(uniform(rng, 0, core - 1)));
    d.host.add_edge(pend_v, static_cast<HostId>(uniform(rng, 0, core - 1)));
    HostId next = pend_v + 1;
    std::vector<HostId> isolated;
    if (coin(rng, 0.5)) isolated.push_back(next++);
    std::vector<HostId> empty_isolated;
    if (p.degrade && coin(rng, 0.5)) empty_isolated.push_back(next++);
    for (HostId x : isolated) d.host.add_vertex(x);
    for (HostId x : empty_isolated) d.host.add_vertex(x);

    auto pendant = [&](HostId x) { return x == pend_u || x == pend_v; };

    // Mandatory members first, then spread the rest over extendable slots.
    std::vector<Slot> slots;
    std::vector<std::size_t> fill;
    for (HostEdge e : d.host.edges()) {
        bool pp = pendant(e.p), pq = pendant(e.q);
        bool empty_p = p.degrade && !pp && !pq && coin(rng, 0.3);
        bool empty_q = p.degrade && !pp && !pq && !empty_p && coin(rng, 0.3);
        bool both = !pp && !pq && !empty_p && !empty_q && coin(rng, 0.2);
        if (both) {
            slots.push_back({SlotKind::Both, 0, e, {}, true});
            fill.push_back(1);
        }
        slots.push_back({SlotKind::AtP, 0, e, {}, !pp && !empty_p});
        fill.push_back(both || empty_p ? 0 : 1);
        slots.push_back({SlotKind::AtQ, 0, e, {}, !pq && !empty_q});
        fill.push_back(both || empty_q ? 0 : 1);
        slots.push_back({SlotKind::Interior, 0, e, {}, true});
        fill.push_back(0);
    }
    for (HostId x = 0; x < core; ++x) {
        slots.push_back({SlotKind::Vertex, x, {}, {}, true});
        fill.push_back(0);
    }
    for (HostId x : isolated) {
        slots.push_back({SlotKind::Vertex, x, {}, {}, true});
        fill.push_back(1);
    }
    for (HostTriple t : d.host.triangles()) {
        slots.push_back({SlotKind::Triangle, 0, {}, t, true});
        fill.push_back(p.degrade ? 1 : 0);
    }
    std::size_t total = std::accumulate(fill.begin(), fill.end(), std::size_t{0});
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (slots[i].extendable) open.push_back(i);
    while (total < p.n && !open.empty()) {
        ++fill[open[uniform(rng, 0, open.size() - 1)]];
        ++total;
    }

    std::vector<Vertex> perm(total);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Vertex counter = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const Slot& s = slots[i];
        for (std::size_t k = 0; k < fill[i]; ++k) {
            Vertex v = perm[counter++];
            switch (s.kind) {
                case SlotKind::Vertex: d.vertex_sets[s.x].push_back(v); break;
                case SlotKind::Triangle: d.triangle_sets[s.t].push_back(v); break;
                case SlotKind::AtP:
                    d.edge_sets[s.e].all.push_back(v);
                    d.edge_sets[s.e].at_p.push_back(v);
                    break;
                case SlotKind::AtQ:
                    d.edge_sets[s.e].all.push_back(v);
                    d.edge_sets[s.e].at_q.push_back(v);
                    break;
                case SlotKind::Both:
                    d.edge_sets[s.e].all.push_back(v);
                    d.edge_sets[s.e].at_p.push_back(v);
                    d.edge_sets[s.e].at_q.push_back(v);
                    break;
                case SlotKind::Interior: d.edge_sets[s.e].all.push_back(v); break;
            }
        }
    }
    for (auto& [x, s] : d.vertex_sets) s = normalized(s);
    for (auto& [t, s] : d.triangle_sets) s = normalized(s);
    for (auto& [e, s] : d.edge_sets) s = EdgeSets{normalized(s.all), normalized(s.at_p), normalized(s.at_q)};

    EdgeList edges;
    for (HostId x : d.host.vertices()) {
        std::vector<HostEdge> inc;
        for (HostId y : d.host.neighbors(x)) inc.push_back(make_edge(x, y));
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                for (Vertex a : d.interface(inc[i], x))
                    for (Vertex b : d.interface(inc[j], x)) edges.add(a, b);
        for (HostEdge e : inc) sprinkle(rng, d.interface(e, x), d.eta(x), p.density, edges);
    }
    for (const auto& [e, s] : d.edge_sets) {
        connect(rng, s.all, edges);
        sprinkle(rng, s.all, s.all, p.density, edges);
    }
    for (const auto& [x, s] : d.vertex_sets) sprinkle(rng, s, s, std::max(p.density, 0.3), edges);
    for (const auto& [t, s] : d.triangle_sets) {
        sprinkle(rng, s, s, std::max(p.density, 0.3), edges);
        for (HostEdge e : {make_edge(t.a, t.b), make_edge(t.a, t.c), make_edge(t.b, t.c)}) {
            VertexSet core_set = set_intersection(d.interface(e, e.p), d.interface(e, e.q));
            sprinkle(rng, s, core_set, 0.5, edges);
        }
    }

    PlantedInstance inst;
    auto list = edges.list();
    inst.graph = Graph(total, list, random_weights(rng, total, p.wmin, p.wmax));
    inst.peripheral = {d.interface(make_edge(pend_u, *d.host.neighbors(pend_u).begin()), pend_u).front(),
                       d.interface(make_edge(pend_v, *d.host.neighbors(pend_v).begin()), pend_v).front()};
    auto report = validate_esd(inst.graph, d);
    if (!report.ok()) throw Error(ErrorKind::Internal, "planted decomposition invalid: " + report.summary());
    if (!p.degrade && !is_rigid(d).ok()) throw Error(ErrorKind::Internal, "planted decomposition not rigid");
    inst.esd = std::move(d);
    return inst;
}

// ---------------------------------------------------------------------------
// line graphs

PlantedInstance gen_line_graph(const GenParams& p) {
    Rng rng(p.seed);
    const std::size_t n = std::max<std::size_t>(2, p.n);
    EdgeList root_edges;
    if (p.root == "cycle" && n >= 3) {
        for (Vertex i = 0; i < n; ++i) root_edges.add(i, static_cast<Vertex>((i + 1) % n));
    } else {
        if (p.root != "random" && p.root != "tree" && p.root != "cycle")
            throw Error(ErrorKind::Syntax, "unknown root kind '" + p.root + "'");
        for (Vertex i = 1; i < n; ++i) root_edges.add(i, static_cast<Vertex>(uniform(rng, 0, i - 1)));
        if (p.root == "random") {
            for (Vertex a = 0; a < n; ++a)
                for (Vertex b = a + 1; b < n; ++b)
                    if (coin(rng, p.density)) root_edges.add(a, b);
        }
    }
    auto list = root_edges.list();
    Graph root(n, list);
    // shuffle which G id represents which root edge
    std::vector<std::pair<Vertex, Vertex>> edge_map = list;
    std::shuffle(edge_map.begin(), edge_map.end(), rng);
    std::vector<std::vector<Vertex>> incident(n);
    for (Vertex v = 0; v < edge_map.size(); ++v) {
        incident[edge_map[v].first].push_back(v);
        incident[edge_map[v].second].push_back(v);
    }
    EdgeList g_edges;
    for (const auto& inc : incident)
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j) g_edges.add(inc[i], inc[j]);
    auto gl = g_edges.list();
    PlantedInstance inst;
    inst.graph = Graph(edge_map.size(), gl, random_weights(rng, edge_map.size(), p.wmin, p.wmax));
    inst.cert = LineGraphCert{std::move(root), std::move(edge_map)};
    std::string why;
    if (!check_line_graph_cert(inst.graph, *inst.cert, &why)) throw Error(ErrorKind::Internal, why);
    return inst;
}

// ---------------------------------------------------------------------------
// planted spiders

namespace {

// Long induced path q0..q_{L-1}, a heavy pendant on its last vertex, and a
// connector from the middle of the first part back to the last vertex. The
// minimum-id Gyarfas path follows the backbone; the connector closes a
// spider around the middle vertex in G'.
PlantedInstance backbone_sttt(const GenParams& p, Rng& rng) {
    const int t = p.t;
    const std::size_t len = 3 * static_cast<std::size_t>(t) + 12;
    const std::size_t q1_len = len - t - 3;
    const std::size_t n_min = len + 2;
    const std::size_t n = std::max(p.n, n_min);
    const std::size_t k_max = std::max<std::size_t>(1, n - len - 1);
    const std::size_t k = uniform(rng, 1, std::min<std::size_t>(k_max, 6));
    const std::size_t extra = n - len - 1 - k;
    const std::size_t m = uniform(rng, t + 1, q1_len - t - 2);

    EdgeList edges;
    for (Vertex i = 0; i + 1 < len; ++i) edges.add(i, i + 1);
    Vertex ell = static_cast<Vertex>(len - 1);
    std::vector<Vertex> conn;
    for (std::size_t i = 0; i < k; ++i) conn.push_back(static_cast<Vertex>(len + i));
    edges.add(static_cast<Vertex>(m), conn.front());
    for (std::size_t i = 0; i + 1 < k; ++i) edges.add(conn[i], conn[i + 1]);
    edges.add(conn.back(), ell);
    Vertex heavy = static_cast<Vertex>(len + k);
    edges.add(ell, heavy);
    for (std::size_t i = 0; i < extra; ++i) edges.add(heavy, static_cast<Vertex>(len + k + 1 + i));

    std::vector<Weight> w(n, 1);
    w[heavy] = static_cast<Weight>(n);  // more than everything else together
    PlantedInstance inst;
    auto list = edges.list();
    inst.graph = Graph(n, list, w);

    StttCopy c;
    c.t = t;
    c.center = static_cast<Vertex>(m);
    std::vector<Vertex> around = conn;
    for (Vertex v = ell; around.size() < static_cast<std::size_t>(t); --v) around.push_back(v);
    for (int i = 1; i <= t; ++i) {
        c.arms[0].push_back(static_cast<Vertex>(m - i));
        c.arms[1].push_back(static_cast<Vertex>(m + i));
    }
    c.arms[2].assign(around.begin(), around.begin() + t);
    inst.copy = c;
    return inst;
}

}  // namespace

PlantedInstance gen_planted_sttt(const GenParams& p) {
    if (p.t < 1) throw Error(ErrorKind::PreconditionViolated, "t must be positive");
    Rng rng(p.seed);
    PlantedInstance inst;
    if (p.backbone) {
        inst = backbone_sttt(p, rng);
    } else {
        const std::size_t size = 3 * static_cast<std::size_t>(p.t) + 1;
        const std::size_t n = std::max(p.n, size);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        StttCopy c;
        c.t = p.t;
        c.center = perm[0];
        for (int a = 0; a < 3; ++a)
            for (int i = 0; i < p.t; ++i) c.arms[a].push_back(perm[1 + a * p.t + i]);
        EdgeList edges;
        for (const auto& arm : c.arms) {
            Vertex prev = c.center;
            for (Vertex v : arm) {
                edges.add(prev, v);
                prev = v;
            }
        }
        std::vector<bool> planted(n, false);
        for (std::size_t i = 0; i < size; ++i) planted[perm[i]] = true;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                if (!(planted[a] && planted[b]) && coin(rng, p.density)) edges.add(a, b);
        auto list = edges.list();
        inst.graph = Graph(n, list, random_weights(rng, n, p.wmin, p.wmax));
        inst.copy = c;
    }
    if (!verify_sttt(inst.graph, *inst.copy)) throw Error(ErrorKind::Internal, "planted spider does not verify");
    return inst;
}

PlantedInstance gen_random(const GenParams& p) {
    Rng rng(p.seed);
    const std::size_t n = std::max<std::size_t>(1, p.n);
    EdgeList edges;
    for (Vertex i = 1; i < n; ++i) edges.add(i, static_cast<Vertex>(uniform(rng, 0, i - 1)));
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (coin(rng, p.density)) edges.add(a, b);
    auto list = edges.list();
    PlantedInstance inst;
    inst.graph = Graph(n, list, random_weights(rng, n, p.wmin, p.wmax));
    return inst;
}

bool check_separator(const Graph& g, const VertexSet& s) { return oracle::check_separator(g, s); }

// ---------------------------------------------------------------------------
// oracles

namespace oracle {

Matrix::Matrix(const Graph& g) : n(g.size()), adj(g.size() * g.size(), 0) {
    for (auto [u, v] : g.edges()) {
        adj[u * n + v] = 1;
        adj[v * n + u] = 1;
    }
}

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::vector<std::size_t> parent;
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<VertexSet> components_after_removal(const Graph& g, const VertexSet& s) {
    Matrix m(g);
    std::vector<char> gone(g.size(), 0);
    for (Vertex v : s) {
        gone[v] = 1;
        for (Vertex u = 0; u < g.size(); ++u)
            if (m(v, u)) gone[u] = 1;
    }
    UnionFind uf(g.size());
    for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v = u + 1; v < g.size(); ++v)
            if (!gone[u] && !gone[v] && m(u, v)) uf.unite(u, v);
    std::map<std::size_t, VertexSet> groups;
    for (Vertex v = 0; v < g.size(); ++v)
        if (!gone[v]) groups[uf.find(v)].push_back(v);
    std::vector<VertexSet> out;
    for (auto& [r, c] : groups) out.push_back(std::move(c));
    return out;
}

bool check_separator(const Graph& g, const VertexSet& s) {
    Weight total = 0;
    for (Vertex v = 0; v < g.size(); ++v) total += g.weight(v);
    for (const auto& c : components_after_removal(g, s)) {
        Weight w = 0;
        for (Vertex v : c) w += g.weight(v);
        if (2 * w > total) return false;
    }
    return true;
}

bool is_induced_path(const Graph& g, const PathSeq& q) {
    Matrix m(g);
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] >= g.size()) return false;
        for (std::size_t j = i + 1; j < q.size(); ++j) {
            if (q[i] == q[j]) return false;
            if (m(q[i], q[j]) != (j == i + 1)) return false;
        }
    }
    return true;
}

namespace {

// Where a vertex sits: host vertex, host edge (with interface flags) or
// host triple. A valid decomposition puts each vertex in exactly one place.
struct Place {
    int kind = -1;  // 0 vertex, 1 edge, 2 triangle
    HostId x = 0;
    HostEdge e{};
    HostTriple t{};
    bool at_p = false, at_q = false;
};

bool in(const VertexSet& s, Vertex v) { return std::find(s.begin(), s.end(), v) != s.end(); }

bool places(const Graph& g, const Esd& d, std::vector<Place>& where) {
    std::vector<int> count(g.size(), 0);
    where.assign(g.size(), Place{});
    for (const auto& [x, s] : d.vertex_sets)
        for (Vertex v : s) {
            if (v >= g.size() || !d.host.has_vertex(x)) return false;
            ++count[v];
            where[v].kind = 0;
            where[v].x = x;
        }
    for (const auto& [e, s] : d.edge_sets) {
        for (Vertex v : s.all) {
            if (v >= g.size() || !d.host.has_edge(e)) return false;
            ++count[v];
            where[v].kind = 1;
            where[v].e = e;
            where[v].at_p = in(s.at_p, v);
            where[v].at_q = in(s.at_q, v);
        }
        for (Vertex v : s.at_p)
            if (!in(s.all, v)) return false;
        for (Vertex v : s.at_q)
            if (!in(s.all, v)) return false;
    }
    for (const auto& [t, s] : d.triangle_sets)
        for (Vertex v : s) {
            if (v >= g.size() || !d.host.is_triangle(t)) return false;
            ++count[v];
            where[v].kind = 2;
            where[v].t = t;
        }
    for (int c : count)
        if (c != 1) return false;
    return true;
}

bool at_end(const Place& pl, HostId x) {
    return pl.kind == 1 && ((pl.e.p == x && pl.at_p) || (pl.e.q == x && pl.at_q));
}

bool edge_allowed(const Place& a, const Place& b) {
    // same set
    if (a.kind == 0 && b.kind == 0 && a.x == b.x) return true;
    if (a.kind == 1 && b.kind == 1 && a.e == b.e) return true;
    if (a.kind == 2 && b.kind == 2 && a.t == b.t) return true;
    for (int flip = 0; flip < 2; ++flip) {
        const Place& u = flip ? b : a;
        const Place& v = flip ? a : b;
        if (u.kind == 1 && v.kind == 1)
            for (HostId x : {u.e.p, u.e.q})
                if (at_end(u, x) && at_end(v, x)) return true;
        if (u.kind == 1 && v.kind == 0 && at_end(u, v.x)) return true;
        if (u.kind == 2 && v.kind == 1 && v.at_p && v.at_q && u.t.has(v.e.p) && u.t.has(v.e.q)) return true;
    }
    return false;
}

}  // namespace

bool esd_valid(const Graph& g, const Esd& d) {
    std::vector<Place> where;
    if (!places(g, d, where)) return false;
    Matrix m(g);
    for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v = u + 1; v < g.size(); ++v)
            if (m(u, v) && !edge_allowed(where[u], where[v])) return false;
    for (HostId x : d.host.vertices())
        for (HostId y : d.host.neighbors(x))
            for (HostId z : d.host.neighbors(x)) {
                if (y >= z) continue;
                for (Vertex a : d.interface(make_edge(x, y), x))
                    for (Vertex b : d.interface(make_edge(x, z), x))
                        if (!m(a, b)) return false;
            }
    return true;
}

bool esd_rigid(const Esd& d) {
    for (HostEdge e : d.host.edges())
        if (d.interface(e, e.p).empty() || d.interface(e, e.q).empty()) return false;
    for (HostId x : d.host.vertices())
        if (d.host.neighbors(x).empty() && d.eta(x).empty()) return false;
    return true;
}

Weight max_particle_weight(const Graph& g, const Esd& d) {
    auto weight = [&](const std::set<Vertex>& s) {
        Weight w = 0;
        for (Vertex v : s) w += g.weight(v);
        return w;
    };
    Weight best = 0;
    for (HostId x : d.host.vertices()) best = std::max(best, weight({d.eta(x).begin(), d.eta(x).end()}));
    for (HostEdge e : d.host.edges()) {
        const auto& all = d.eta(e);
        const auto& ip = d.interface(e, e.p);
        const auto& iq = d.interface(e, e.q);
        std::set<Vertex> interior, half_p, half_q, full;
        for (Vertex v : all) {
            bool a = in(ip, v), b = in(iq, v);
            if (!a && !b) interior.insert(v);
            if (!b) half_p.insert(v);
            if (!a) half_q.insert(v);
            full.insert(v);
        }
        for (Vertex v : d.eta(e.p)) half_p.insert(v), full.insert(v);
        for (Vertex v : d.eta(e.q)) half_q.insert(v), full.insert(v);
        for (HostId r : d.host.vertices())
            if (r != e.p && r != e.q && d.host.has_edge(make_edge(r, e.p)) && d.host.has_edge(make_edge(r, e.q)))
                for (Vertex v : d.eta(make_triple(r, e.p, e.q))) full.insert(v);
        best = std::max({best, weight(interior), weight(half_p), weight(half_q), weight(full)});
    }
    for (const auto& [t, s] : d.triangle_sets) best = std::max(best, weight({s.begin(), s.end()}));
    return best;
}

VertexSet peripheral(const Esd& d) {
    VertexSet out;
    for (HostId x : d.host.vertices()) {
        if (d.host.neighbors(x).size() != 1) continue;
        HostId y = *d.host.neighbors(x).begin();
        const auto& s = d.interface(make_edge(x, y), x);
        if (s.size() == 1) out.push_back(s[0]);
    }
    return normalized(out);
}

bool verify_sttt(const Graph& g, const StttCopy& c) {
    if (c.t < 1) return false;
    std::vector<Vertex> all{c.center};
    std::set<std::pair<Vertex, Vertex>> want;
    for (const auto& arm : c.arms) {
        if (arm.size() != static_cast<std::size_t>(c.t)) return false;
        Vertex prev = c.center;
        for (Vertex v : arm) {
            all.push_back(v);
            want.insert({std::min(prev, v), std::max(prev, v)});
            prev = v;
        }
    }
    std::set<Vertex> distinct(all.begin(), all.end());
    if (distinct.size() != all.size()) return false;
    for (Vertex v : all)
        if (v >= g.size()) return false;
    Matrix m(g);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            auto key = std::pair{std::min(all[i], all[j]), std::max(all[i], all[j])};
            if (m(all[i], all[j]) != (want.count(key) == 1)) return false;
        }
    return true;
}

bool witness_holds(const Graph& g, const Esd& d, const Violation& v) {
    Matrix m(g);
    switch (v.rule) {
        case Rule::Partition: {
            if (v.vertices.empty()) return false;
            for (Vertex x : v.vertices) {
                if (x >= g.size()) continue;  // a set names a vertex that is not in G
                int count = 0;
                for (const auto& [h, s] : d.vertex_sets) count += in(s, x);
                for (const auto& [e, s] : d.edge_sets) count += in(s.all, x);
                for (const auto& [t, s] : d.triangle_sets) count += in(s, x);
                if (count == 1) return false;
            }
            return true;
        }
        case Rule::Completeness: {
            if (v.vertices.size() != 2 || v.host.size() != 3) return false;
            Vertex a = v.vertices[0], b = v.vertices[1];
            HostId x = v.host[0], y = v.host[1], z = v.host[2];
            if (y == z || !d.host.has_edge(make_edge(x, y)) || !d.host.has_edge(make_edge(x, z))) return false;
            return !m(a, b) && in(d.interface(make_edge(x, y), x), a) && in(d.interface(make_edge(x, z), x), b);
        }
        case Rule::EdgePattern: {
            if (v.vertices.size() != 2) return false;
            std::vector<Place> where;
            if (!places(g, d, where)) return false;
            return m(v.vertices[0], v.vertices[1]) && !edge_allowed(where[v.vertices[0]], where[v.vertices[1]]);
        }
        case Rule::Subset: {
            for (Vertex x : v.vertices)
                for (const auto& [e, s] : d.edge_sets)
                    if ((in(s.at_p, x) || in(s.at_q, x)) && !in(s.all, x)) return true;
            return false;
        }
        case Rule::Structure:
        case Rule::Rigidity:
            return true;
    }
    return false;
}

}  // namespace oracle

// ---------------------------------------------------------------------------
// induced paths and the path invariants

namespace {

class PathWalker {
public:
    PathWalker(const Graph& g, Vertex target) : g_(g), target_(target), blocked_(g.size(), 0) {}

    void all(Vertex from, std::vector<PathSeq>& out, std::size_t cap) {
        path_ = {from};
        block(from, +1);
        enumerate(out, cap);
        block(from, -1);
    }

    bool random(Vertex from, Rng& rng, std::size_t node_cap, PathSeq& out) {
        path_ = {from};
        nodes_ = 0;
        std::fill(blocked_.begin(), blocked_.end(), 0);
        block(from, +1);
        bool ok = walk(rng, node_cap);
        if (ok) out = path_;
        return ok;
    }

private:
    const Graph& g_;
    Vertex target_;
    std::vector<int> blocked_;  // how many path vertices are in N[v]
    PathSeq path_;
    std::size_t nodes_ = 0;

    void block(Vertex v, int delta) {
        blocked_[v] += delta;
        for (Vertex u : g_.neighbors(v)) blocked_[u] += delta;
    }

    // u may extend the path if its only path neighbour is the last vertex
    bool extendable(Vertex u) const { return blocked_[u] == 1; }

    void enumerate(std::vector<PathSeq>& out, std::size_t cap) {
        if (out.size() >= cap) return;
        Vertex last = path_.back();
        if (last == target_) {
            out.push_back(path_);
            return;
        }
        for (Vertex u : g_.neighbors(last)) {
            if (!extendable(u)) continue;
            path_.push_back(u);
            block(u, +1);
            enumerate(out, cap);
            block(u, -1);
            path_.pop_back();
        }
    }

    bool walk(Rng& rng, std::size_t cap) {
        if (++nodes_ > cap) return false;
        Vertex last = path_.back();
        if (last == target_) return true;
        std::vector<Vertex> next;
        for (Vertex u : g_.neighbors(last))
            if (extendable(u)) next.push_back(u);
        std::shuffle(next.begin(), next.end(), rng);
        for (Vertex u : next) {
            path_.push_back(u);
            block(u, +1);
            if (walk(rng, cap)) return true;
            block(u, -1);
            path_.pop_back();
            if (nodes_ > cap) return false;
        }
        return false;
    }
};

}  // namespace

std::vector<PathSeq> induced_paths(const Graph& g, Vertex u, Vertex v, bool exhaustive, std::size_t samples,
                                   std::uint64_t seed) {
    std::vector<PathSeq> out;
    PathWalker w(g, v);
    if (exhaustive) {
        w.all(u, out, static_cast<std::size_t>(-1));
        return out;
    }
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        PathSeq p;
        if (w.random(u, rng, 20000, p)) out.push_back(std::move(p));
    }
    return out;
}

void check_path_invariants(const Graph& g, const Esd& d, const PathSeq& path, PathInvariantCounts& counts) {
    ++counts.paths;
    VertexSet on = normalized(path);
    std::vector<std::size_t> index(g.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < path.size(); ++i) index[path[i]] = i;

    bool bad[4] = {false, false, false, false};
    VertexSet in_edges;
    for (HostEdge e : d.host.edges()) {
        const auto& all = d.eta(e);
        const auto& ip = d.interface(e, e.p);
        const auto& iq = d.interface(e, e.q);
        in_edges = set_union(in_edges, all);
        // (i)
        if (set_intersection(on, ip).size() > 1 || set_intersection(on, iq).size() > 1) bad[0] = true;
        // (iii)
        VertexSet seg = set_intersection(on, all);
        if (seg.empty()) continue;
        std::vector<std::size_t> pos;
        for (Vertex v : seg) pos.push_back(index[v]);
        std::sort(pos.begin(), pos.end());
        bool contiguous = pos.back() - pos.front() + 1 == pos.size();
        Vertex first = path[pos.front()], last = path[pos.back()];
        bool ends_ok;
        if (pos.size() == 1)
            ends_ok = contains(ip, first) && contains(iq, first);
        else
            ends_ok = (contains(ip, first) && contains(iq, last)) || (contains(iq, first) && contains(ip, last));
        bool interior_ok = true;
        for (std::size_t i = 1; i + 1 < pos.size(); ++i) {
            Vertex v = path[pos[i]];
            if (contains(ip, v) || contains(iq, v)) interior_ok = false;
        }
        if (!contiguous || !ends_ok || !interior_ok) bad[2] = true;
    }
    // (ii)
    if (!is_subset(on, in_edges)) bad[1] = true;
    // (iv), from both ends
    for (Vertex start : {path.front(), path.back()}) {
        for (HostEdge pq : d.host.edges()) {
            if (contains(d.eta(pq), start)) continue;
            VertexSet a = full_edge_particle(d, pq);
            if (set_intersection(on, closed_neighborhood(g, a)).empty()) continue;
            bool found = false;
            for (HostId r : {pq.p, pq.q})
                for (HostId s : d.host.neighbors(r)) {
                    HostEdge f = make_edge(r, s);
                    if (f != pq && !set_intersection(on, d.interface(f, r)).empty()) found = true;
                }
            if (!found) bad[3] = true;
        }
    }
    for (int i = 0; i < 4; ++i)
        if (bad[i]) ++counts.violations[i];
}

}  // namespace sttt
