#include "sttt/esd.hpp"

#include <algorithm>
#include <sstream>

namespace sttt {

HostEdge make_edge(HostId x, HostId y) {
    if (x == y) throw Error(ErrorKind::InvalidEsd, "host loop at " + std::to_string(x));
    return x < y ? HostEdge{x, y} : HostEdge{y, x};
}

HostTriple make_triple(HostId x, HostId y, HostId z) {
    HostId v[3] = {x, y, z};
    std::sort(v, v + 3);
    if (v[0] == v[1] || v[1] == v[2])
        throw Error(ErrorKind::InvalidEsd, "degenerate host triple");
    return {v[0], v[1], v[2]};
}

std::string to_string(HostEdge e) { return std::to_string(e.p) + "-" + std::to_string(e.q); }

std::string to_string(HostTriple t) {
    return std::to_string(t.a) + "-" + std::to_string(t.b) + "-" + std::to_string(t.c);
}

// ------------------------------------------------------------------ HostGraph

void HostGraph::add_vertex(HostId x) { adjacency_.try_emplace(x); }

void HostGraph::add_edge(HostId x, HostId y) {
    HostEdge e = make_edge(x, y);
    add_vertex(x);
    add_vertex(y);
    if (adjacency_[x].insert(y).second) {
        adjacency_[y].insert(x);
        ++edge_count_;
    } else {
        throw Error(ErrorKind::InvalidEsd, "duplicate host edge " + to_string(e));
    }
}

void HostGraph::remove_edge(HostEdge e) {
    if (!has_edge(e)) throw Error(ErrorKind::Internal, "no host edge " + to_string(e));
    adjacency_[e.p].erase(e.q);
    adjacency_[e.q].erase(e.p);
    --edge_count_;
}

void HostGraph::remove_vertex(HostId x) {
    auto it = adjacency_.find(x);
    if (it == adjacency_.end()) return;
    for (HostId y : it->second) {
        adjacency_[y].erase(x);
        --edge_count_;
    }
    adjacency_.erase(x);
}

bool HostGraph::has_edge(HostEdge e) const {
    auto it = adjacency_.find(e.p);
    return it != adjacency_.end() && it->second.count(e.q) != 0;
}

bool HostGraph::is_triangle(HostTriple t) const {
    return has_edge({t.a, t.b}) && has_edge({t.a, t.c}) && has_edge({t.b, t.c});
}

std::vector<HostId> HostGraph::vertices() const {
    std::vector<HostId> out;
    for (const auto& [x, _] : adjacency_) out.push_back(x);
    return out;
}

std::vector<HostEdge> HostGraph::edges() const {
    std::vector<HostEdge> out;
    for (const auto& [x, nbrs] : adjacency_)
        for (HostId y : nbrs)
            if (x < y) out.push_back({x, y});
    return out;
}

std::vector<HostTriple> HostGraph::triangles() const {
    std::vector<HostTriple> out;
    for (const auto& [a, nbrs] : adjacency_)
        for (HostId b : nbrs) {
            if (b <= a) continue;
            for (HostId c : adjacency_.at(b))
                if (c > b && nbrs.count(c)) out.push_back({a, b, c});
        }
    return out;
}

// ------------------------------------------------------------------------ Esd

namespace {

const VertexSet kEmpty;
const EdgeSets kEmptyEdge;

template <class Map, class Key>
const VertexSet& lookup(const Map& m, const Key& k) {
    auto it = m.find(k);
    return it == m.end() ? kEmpty : it->second;
}

const EdgeSets& lookup_edge(const std::map<HostEdge, EdgeSets>& m, HostEdge e) {
    auto it = m.find(e);
    return it == m.end() ? kEmptyEdge : it->second;
}

const VertexSet& side_of(const EdgeSets& s, HostEdge e, HostId end) {
    if (end == e.p) return s.at_p;
    if (end == e.q) return s.at_q;
    throw Error(ErrorKind::Internal, std::to_string(end) + " is not an end of " + to_string(e));
}

}  // namespace

const VertexSet& Esd::eta(HostId x) const { return lookup(vertex_sets, x); }
const VertexSet& Esd::eta(HostEdge e) const { return lookup_edge(edge_sets, e).all; }
const VertexSet& Esd::eta(HostTriple t) const { return lookup(triangle_sets, t); }

const VertexSet& Esd::interface(HostEdge e, HostId end) const {
    return side_of(lookup_edge(edge_sets, e), e, end);
}

RelaxedEsd RelaxedEsd::from(const Esd& d) {
    RelaxedEsd r{d.host, d.vertex_sets, d.edge_sets, {}};
    for (const auto& [t, s] : d.triangle_sets)
        if (!s.empty()) r.triple_sets.emplace(t, s);
    return r;
}

Esd RelaxedEsd::to_esd() const {
    Esd d{host, {}, {}, {}};
    for (const auto& [x, s] : vertex_sets)
        if (!s.empty() && host.has_vertex(x)) d.vertex_sets.emplace(x, s);
    for (const auto& [e, s] : edge_sets)
        if (host.has_edge(e)) d.edge_sets.emplace(e, s);
    for (const auto& [t, s] : triple_sets) {
        if (s.empty()) continue;
        if (!host.is_triangle(t))
            throw Error(ErrorKind::Internal, "nonempty non-triangle triple " + to_string(t));
        d.triangle_sets.emplace(t, s);
    }
    return d;
}

const char* to_string(Rule r) {
    switch (r) {
        case Rule::Partition: return "partition";
        case Rule::Completeness: return "completeness";
        case Rule::EdgePattern: return "edge-pattern";
        case Rule::Subset: return "subset";
        case Rule::Structure: return "structure";
        case Rule::Rigidity: return "rigidity";
    }
    return "?";
}

std::string ValidationReport::summary() const {
    if (ok()) return "ok";
    std::ostringstream out;
    out << violations.size() << " violation(s)";
    for (std::size_t i = 0; i < violations.size() && i < 5; ++i)
        out << "; [" << to_string(violations[i].rule) << "] " << violations[i].message;
    return out.str();
}

// ----------------------------------------------------------------- validation

namespace {

enum class OwnerKind : std::uint8_t { None, Vertex, Edge, Triple, Many };

struct Owner {
    OwnerKind kind = OwnerKind::None;
    HostId x = 0;
    HostEdge e{};
    HostTriple t{};
};


ValidationReport validate_impl(const Graph& g, const HostGraph& host,
                               const std::map<HostId, VertexSet>& vsets,
                               const std::map<HostEdge, EdgeSets>& esets,
                               const std::map<HostTriple, VertexSet>& tsets,
                               bool triangles_only) {
    ValidationReport report;
    auto add = [&](Rule r, VertexSet v, std::vector<HostId> h, std::string msg) {
        report.violations.push_back({r, std::move(v), std::move(h), std::move(msg)});
    };
    auto check_set = [&](const VertexSet& s, const std::string& where) {
        if (!is_normalized(s)) add(Rule::Structure, {}, {}, where + " is not sorted and duplicate-free");
        for (Vertex v : s)
            if (v >= g.size()) add(Rule::Structure, {v}, {}, where + " holds out-of-range vertex " + std::to_string(v));
    };

    for (const auto& [x, s] : vsets) {
        if (!host.has_vertex(x)) add(Rule::Structure, {}, {x}, "eta of unknown host vertex " + std::to_string(x));
        check_set(s, "eta(" + std::to_string(x) + ")");
    }
    for (const auto& [e, s] : esets) {
        if (!host.has_edge(e)) add(Rule::Structure, {}, {e.p, e.q}, "eta of unknown host edge " + to_string(e));
        check_set(s.all, "eta(" + to_string(e) + ")");
        check_set(s.at_p, "eta(" + to_string(e) + "," + std::to_string(e.p) + ")");
        check_set(s.at_q, "eta(" + to_string(e) + "," + std::to_string(e.q) + ")");
    }
    for (const auto& [t, s] : tsets) {
        if (!host.has_vertex(t.a) || !host.has_vertex(t.b) || !host.has_vertex(t.c))
            add(Rule::Structure, {}, {t.a, t.b, t.c}, "eta of triple with unknown host vertex " + to_string(t));
        else if (triangles_only && !s.empty() && !host.is_triangle(t))
            add(Rule::Structure, {}, {t.a, t.b, t.c}, to_string(t) + " is not a host triangle");
        check_set(s, "eta(" + to_string(t) + ")");
    }
    if (!report.ok()) return report;

    // Interfaces are subsets of the edge set.
    for (const auto& [e, s] : esets) {
        for (HostId end : {e.p, e.q}) {
            for (Vertex v : side_of(s, e, end))
                if (!contains(s.all, v))
                    add(Rule::Subset, {v}, {e.p, e.q, end},
                        "vertex " + std::to_string(v) + " in eta(" + to_string(e) + "," +
                            std::to_string(end) + ") but not in eta(" + to_string(e) + ")");
        }
    }

    // Property 1: partition.
    std::vector<Owner> owner(g.size());
    std::vector<std::uint32_t> count(g.size(), 0);
    auto claim = [&](Vertex v, Owner o) {
        ++count[v];
        owner[v] = count[v] == 1 ? o : Owner{OwnerKind::Many};
    };
    for (const auto& [x, s] : vsets)
        for (Vertex v : s) claim(v, {OwnerKind::Vertex, x});
    for (const auto& [e, s] : esets)
        for (Vertex v : s.all) claim(v, {OwnerKind::Edge, 0, e});
    for (const auto& [t, s] : tsets)
        for (Vertex v : s) claim(v, {OwnerKind::Triple, 0, {}, t});
    for (Vertex v = 0; v < g.size(); ++v) {
        if (count[v] == 0)
            add(Rule::Partition, {v}, {}, "vertex " + std::to_string(v) + " is in no eta set");
        else if (count[v] > 1)
            add(Rule::Partition, {v}, {}, "vertex " + std::to_string(v) + " is in " + std::to_string(count[v]) + " eta sets");
    }

    // Property 2: interfaces at a common host vertex are complete to each other.
    for (HostId x : host.vertices()) {
        std::vector<HostId> nbrs(host.neighbors(x).begin(), host.neighbors(x).end());
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                HostEdge ey = make_edge(x, nbrs[i]);
                HostEdge ez = make_edge(x, nbrs[j]);
                const auto& iy = side_of(lookup_edge(esets, ey), ey, x);
                const auto& iz = side_of(lookup_edge(esets, ez), ez, x);
                for (Vertex a : iy)
                    for (Vertex b : iz)
                        if (a != b && !g.adjacent(a, b))
                            add(Rule::Completeness, {a, b}, {x, nbrs[i], nbrs[j]},
                                "eta(" + to_string(ey) + "," + std::to_string(x) + ") not complete to eta(" +
                                    to_string(ez) + "," + std::to_string(x) + "): " + std::to_string(a) +
                                    " and " + std::to_string(b) + " are non-adjacent");
            }
        }
    }

    // Property 3: every G-edge lies inside one set or follows an allowed pattern.
    auto in_side = [&](HostEdge e, HostId end, Vertex v) {
        return contains(side_of(lookup_edge(esets, e), e, end), v);
    };
    auto allowed = [&](Vertex u, const Owner& ou, Vertex v, const Owner& ov) {
        if (ou.kind == OwnerKind::Edge && ov.kind == OwnerKind::Edge) {
            for (HostId x : {ou.e.p, ou.e.q})
                if (ov.e.has(x) && in_side(ou.e, x, u) && in_side(ov.e, x, v)) return true;
            return false;
        }
        if (ou.kind == OwnerKind::Edge && ov.kind == OwnerKind::Vertex)
            return ou.e.has(ov.x) && in_side(ou.e, ov.x, u);
        if (ou.kind == OwnerKind::Triple && ov.kind == OwnerKind::Edge) {
            HostEdge e = ov.e;
            return ou.t.has(e.p) && ou.t.has(e.q) && in_side(e, e.p, v) && in_side(e, e.q, v);
        }
        return false;
    };
    for (auto [u, v] : g.edges()) {
        const Owner& ou = owner[u];
        const Owner& ov = owner[v];
        if (ou.kind == OwnerKind::None || ou.kind == OwnerKind::Many || ov.kind == OwnerKind::None ||
            ov.kind == OwnerKind::Many)
            continue;  // already reported under the partition rule
        bool same = ou.kind == ov.kind &&
                    ((ou.kind == OwnerKind::Vertex && ou.x == ov.x) ||
                     (ou.kind == OwnerKind::Edge && ou.e == ov.e) ||
                     (ou.kind == OwnerKind::Triple && ou.t == ov.t));
        if (same || allowed(u, ou, v, ov) || allowed(v, ov, u, ou)) continue;
        add(Rule::EdgePattern, {u, v}, {},
            "edge " + std::to_string(u) + "-" + std::to_string(v) + " crosses eta sets in a forbidden way");
    }
    return report;
}

}  // namespace

ValidationReport validate_esd(const Graph& g, const Esd& d) {
    return validate_impl(g, d.host, d.vertex_sets, d.edge_sets, d.triangle_sets, true);
}

ValidationReport validate_relaxed_esd(const Graph& g, const RelaxedEsd& d) {
    return validate_impl(g, d.host, d.vertex_sets, d.edge_sets, d.triple_sets, false);
}

ValidationReport is_rigid(const Esd& d) {
    ValidationReport report;
    for (HostEdge e : d.host.edges()) {
        for (HostId end : {e.p, e.q})
            if (d.interface(e, end).empty())
                report.violations.push_back({Rule::Rigidity, {}, {e.p, e.q, end},
                                             "eta(" + to_string(e) + "," + std::to_string(end) + ") is empty"});
    }
    for (HostId x : d.host.vertices())
        if (d.host.degree(x) == 0 && d.eta(x).empty())
            report.violations.push_back({Rule::Rigidity, {}, {x},
                                         "isolated host vertex " + std::to_string(x) + " has empty eta"});
    return report;
}

// ------------------------------------------------------------------ particles

const char* to_string(ParticleKind k) {
    switch (k) {
        case ParticleKind::Vertex: return "vertex";
        case ParticleKind::EdgeInterior: return "edge-interior";
        case ParticleKind::HalfEdge: return "half-edge";
        case ParticleKind::FullEdge: return "full-edge";
        case ParticleKind::Triangle: return "triangle";
    }
    return "?";
}

VertexSet full_edge_particle(const Esd& d, HostEdge e) {
    VertexSet out = set_union(d.eta(e.p), d.eta(e.q));
    out = set_union(out, d.eta(e));
    for (const auto& [t, s] : d.triangle_sets)
        if (t.has(e.p) && t.has(e.q)) out = set_union(out, s);
    return out;
}

std::vector<Particle> particles_unchecked(const Graph& g, const Esd& d) {
    std::vector<Particle> out;
    auto push = [&](ParticleKind kind, auto anchor, HostId side, VertexSet members) {
        Weight w = g.weight_of(members);
        out.push_back({kind, anchor, side, std::move(members), w});
    };
    for (HostId x : d.host.vertices()) push(ParticleKind::Vertex, x, x, d.eta(x));
    for (HostEdge e : d.host.edges()) {
        const auto& all = d.eta(e);
        push(ParticleKind::EdgeInterior, e, 0,
             set_difference(all, set_union(d.interface(e, e.p), d.interface(e, e.q))));
        push(ParticleKind::HalfEdge, e, e.p, set_difference(set_union(d.eta(e.p), all), d.interface(e, e.q)));
        push(ParticleKind::HalfEdge, e, e.q, set_difference(set_union(d.eta(e.q), all), d.interface(e, e.p)));
        push(ParticleKind::FullEdge, e, 0, full_edge_particle(d, e));
    }
    for (HostTriple t : d.host.triangles()) push(ParticleKind::Triangle, t, 0, d.eta(t));
    return out;
}

std::vector<Particle> particles(const Graph& g, const Esd& d) {
    auto report = validate_esd(g, d);
    if (!report.ok()) throw Error(ErrorKind::InvalidEsd, report.summary());
    return particles_unchecked(g, d);
}

Weight max_particle_weight(const Graph& g, const Esd& d) {
    Weight best = 0;
    for (const auto& p : particles_unchecked(g, d)) best = std::max(best, p.weight);
    return best;
}

// ------------------------------------------------------------ transformations

Esd restrict(const Esd& d, std::span<const Vertex> keep) {
    VertexSet k = normalized({keep.begin(), keep.end()});
    Esd out{d.host, {}, {}, {}};
    for (const auto& [x, s] : d.vertex_sets) out.vertex_sets.emplace(x, set_intersection(s, k));
    for (const auto& [e, s] : d.edge_sets)
        out.edge_sets.emplace(e, EdgeSets{set_intersection(s.all, k), set_intersection(s.at_p, k),
                                          set_intersection(s.at_q, k)});
    for (const auto& [t, s] : d.triangle_sets) out.triangle_sets.emplace(t, set_intersection(s, k));
    return out;
}

VertexSet peripheral_vertices(const Graph& g, const Esd& d) {
    auto report = validate_esd(g, d);
    if (!report.ok()) throw Error(ErrorKind::InvalidEsd, report.summary());
    VertexSet out;
    for (HostId x : d.host.vertices()) {
        if (d.host.degree(x) != 1) continue;
        HostId y = *d.host.neighbors(x).begin();
        const auto& side = d.interface(make_edge(x, y), x);
        if (side.size() == 1) out.push_back(side.front());
    }
    return normalized(std::move(out));
}

Esd trivial_esd(const Graph& g) {
    Esd d;
    HostId id = 0;
    for (auto& comp : components(g, g.all_vertices())) {
        d.host.add_vertex(id);
        d.vertex_sets.emplace(id, std::move(comp));
        ++id;
    }
    return d;
}

namespace {

template <class F>
Esd transform_sets(const Esd& d, F f) {
    Esd out{d.host, {}, {}, {}};
    for (const auto& [x, s] : d.vertex_sets) out.vertex_sets.emplace(x, f(s));
    for (const auto& [e, s] : d.edge_sets) out.edge_sets.emplace(e, EdgeSets{f(s.all), f(s.at_p), f(s.at_q)});
    for (const auto& [t, s] : d.triangle_sets) out.triangle_sets.emplace(t, f(s));
    return out;
}

}  // namespace

Esd map_vertices(const Esd& d, std::span<const Vertex> map) {
    return transform_sets(d, [&](const VertexSet& s) {
        VertexSet r;
        r.reserve(s.size());
        for (Vertex v : s) r.push_back(map[v]);
        return normalized(std::move(r));
    });
}

Esd lower_esd(const Esd& d, const Subgraph& sub) {
    return transform_sets(d, [&](const VertexSet& s) { return sub.lower(s); });
}

Esd lift_esd(const Esd& d, const Subgraph& sub) {
    return transform_sets(d, [&](const VertexSet& s) { return sub.lift(s); });
}

VertexSet interface_dominators(const Graph& g, const Esd& d, HostEdge e) {
    auto report = validate_esd(g, d);
    if (!report.ok()) throw Error(ErrorKind::InvalidEsd, report.summary());
    if (!d.host.has_edge(e)) throw Error(ErrorKind::PreconditionViolated, "no host edge " + to_string(e));
    const auto& at_p = d.interface(e, e.p);
    const auto& at_q = d.interface(e, e.q);
    if (at_p.empty() || at_q.empty())
        throw Error(ErrorKind::NotRigid, "empty interface on host edge " + to_string(e));
    return normalized({at_p.front(), at_q.front()});
}

}  // namespace sttt
