// Rigidification of extended strip decompositions via relaxed decompositions.
//
// The rewrite runs in four phases on a RelaxedEsd:
//   (a) edges with an empty interface are detached (both empty) or re-hung on
//       a fresh pendant host vertex (one empty);
//   (b) nonempty triples touching an isolated host vertex are flushed into the
//       opposite host edge or a fresh isolated host vertex;
//   (c) isolated host vertices with an empty set are dropped;
//   (d) nonempty triples that are not host triangles are eliminated. The third
//       case of (d) may create a heavy full-edge particle, in which case the
//       two interface dominators of that particle are returned instead.

#include <algorithm>
#include <optional>

#include "sttt/esd.hpp"

namespace sttt {

namespace {

class Rewriter {
public:
    Rewriter(const Graph& g, const Esd& d, Weight w)
        : g_(g), r_(RelaxedEsd::from(d)), w_(w), cap_(make_rigid_step_cap(g, d)) {
        stats_.step_cap = cap_;
    }

    MakeRigidResult run() {
        fix_empty_interfaces();
        flush_isolated_triples();
        drop_empty_isolated();
        if (auto sep = eliminate_non_triangles()) return *sep;

        Esd out = r_.to_esd();
        auto report = validate_esd(g_, out);
        if (!report.ok()) throw Error(ErrorKind::Internal, "make_rigid produced an invalid decomposition: " + report.summary());
        auto rigid = is_rigid(out);
        if (!rigid.ok()) throw Error(ErrorKind::Internal, "make_rigid produced a non-rigid decomposition: " + rigid.summary());
        if (max_particle_weight(g_, out) > w_)
            throw Error(ErrorKind::Internal, "make_rigid produced a particle heavier than the bound");
        return RigidEsdResult{std::move(out), stats_};
    }

private:
    const Graph& g_;
    RelaxedEsd r_;
    Weight w_;
    std::size_t cap_;
    MakeRigidStats stats_;

    void step() {
        if (++stats_.steps > cap_)
            throw Error(ErrorKind::StepBudgetExceeded, "more than " + std::to_string(cap_) + " rewrites");
    }

    EdgeSets& sets(HostEdge e) { return r_.edge_sets[e]; }

    VertexSet& side(HostEdge e, HostId end) { return end == e.p ? sets(e).at_p : sets(e).at_q; }

    std::size_t edges_with_empty_interface() {
        std::size_t count = 0;
        for (HostEdge e : r_.host.edges())
            if (side(e, e.p).empty() || side(e, e.q).empty()) ++count;
        return count;
    }

    bool isolated(HostId x) const { return r_.host.degree(x) == 0; }

    std::size_t triples_at_isolated() const {
        std::size_t count = 0;
        for (const auto& [t, s] : r_.triple_sets)
            if (!s.empty() && (isolated(t.a) || isolated(t.b) || isolated(t.c))) ++count;
        return count;
    }

    std::size_t non_triangle_triples() const {
        std::size_t count = 0;
        for (const auto& [t, s] : r_.triple_sets)
            if (!s.empty() && !r_.host.is_triangle(t)) ++count;
        return count;
    }

    HostId add_isolated(VertexSet s) {
        HostId v = r_.host.fresh_id();
        r_.host.add_vertex(v);
        r_.vertex_sets[v] = std::move(s);
        return v;
    }

    void fix_empty_interfaces() {
        for (;;) {
            std::size_t before = edges_with_empty_interface();
            if (before == 0) return;
            HostEdge e{};
            for (HostEdge cand : r_.host.edges())
                if (side(cand, cand.p).empty() || side(cand, cand.q).empty()) {
                    e = cand;
                    break;
                }
            EdgeSets old = sets(e);
            r_.host.remove_edge(e);
            r_.edge_sets.erase(e);
            if (old.at_p.empty() && old.at_q.empty()) {
                add_isolated(std::move(old.all));
                ++stats_.detached_edges;
            } else {
                HostId y = old.at_p.empty() ? e.q : e.p;
                VertexSet at_y = old.at_p.empty() ? old.at_q : old.at_p;
                HostId z = r_.host.fresh_id();
                r_.host.add_edge(z, y);
                HostEdge zy = make_edge(z, y);
                sets(zy).all = old.all;
                side(zy, z) = old.all;
                side(zy, y) = std::move(at_y);
                ++stats_.rehung_edges;
            }
            step();
            if (edges_with_empty_interface() >= before)
                throw Error(ErrorKind::Internal, "empty-interface count did not decrease");
        }
    }

    void flush_isolated_triples() {
        for (;;) {
            std::size_t before = triples_at_isolated();
            if (before == 0) return;
            auto it = std::find_if(r_.triple_sets.begin(), r_.triple_sets.end(), [&](const auto& kv) {
                const HostTriple& t = kv.first;
                return !kv.second.empty() && (isolated(t.a) || isolated(t.b) || isolated(t.c));
            });
            HostTriple t = it->first;
            VertexSet s = std::move(it->second);
            r_.triple_sets.erase(it);
            HostId x = isolated(t.a) ? t.a : isolated(t.b) ? t.b : t.c;
            HostId y = x == t.a ? t.b : t.a;
            HostId z = x == t.c ? t.b : t.c;
            HostEdge yz = make_edge(y, z);
            if (r_.host.has_edge(yz)) {
                sets(yz).all = set_union(sets(yz).all, s);
            } else {
                add_isolated(std::move(s));
            }
            ++stats_.flushed_triples;
            step();
            if (triples_at_isolated() >= before)
                throw Error(ErrorKind::Internal, "isolated-triple count did not decrease");
        }
    }

    void drop_empty_isolated() {
        for (HostId x : r_.host.vertices()) {
            if (!isolated(x)) continue;
            auto it = r_.vertex_sets.find(x);
            if (it != r_.vertex_sets.end() && !it->second.empty()) continue;
            r_.host.remove_vertex(x);
            r_.vertex_sets.erase(x);
            ++stats_.dropped_vertices;
            step();
        }
    }

    const VertexSet& eta(HostId x) {
        return r_.vertex_sets[x];
    }

    Weight full_edge_weight(HostEdge e) {
        Weight total = g_.weight_of(eta(e.p)) + g_.weight_of(eta(e.q)) + g_.weight_of(sets(e).all);
        for (const auto& [t, s] : r_.triple_sets)
            if (t.has(e.p) && t.has(e.q)) total += g_.weight_of(s);
        return total;
    }

    bool touches(const VertexSet& outside_nbrs, HostEdge e) {
        if (!r_.host.has_edge(e)) return false;
        return !set_intersection(outside_nbrs, sets(e).all).empty();
    }

    std::optional<SeparatorResult> eliminate_non_triangles() {
        for (;;) {
            std::size_t before = non_triangle_triples();
            if (before == 0) return std::nullopt;
            auto it = std::find_if(r_.triple_sets.begin(), r_.triple_sets.end(), [&](const auto& kv) {
                return !kv.second.empty() && !r_.host.is_triangle(kv.first);
            });
            HostTriple t = it->first;
            VertexSet s = it->second;

            VertexSet outside = open_neighborhood(g_, s);
            std::vector<HostEdge> touched;
            for (HostEdge e : {HostEdge{t.a, t.b}, HostEdge{t.a, t.c}, HostEdge{t.b, t.c}})
                if (touches(outside, e)) touched.push_back(e);

            if (outside.empty()) {
                r_.triple_sets.erase(t);
                add_isolated(std::move(s));
                ++stats_.isolated_triples;
            } else if (touched.size() == 1) {
                r_.triple_sets.erase(t);
                sets(touched[0]).all = set_union(sets(touched[0]).all, s);
                ++stats_.merged_into_edge;
            } else if (touched.size() == 2) {
                HostEdge e1 = touched[0], e2 = touched[1];
                HostId x = e2.has(e1.p) ? e1.p : e1.q;
                HostId y = e1.other(x), z = e2.other(x);
                r_.triple_sets.erase(t);
                r_.vertex_sets[x] = set_union(eta(x), s);
                ++stats_.merged_into_vertex;
                step();
                if (auto sep = heavy_after_vertex_merge(x, y, z)) return sep;
                if (non_triangle_triples() >= before)
                    throw Error(ErrorKind::Internal, "non-triangle triple count did not decrease");
                continue;
            } else {
                throw Error(ErrorKind::Internal,
                            "triple " + to_string(t) + " touches the outside but no incident host edge set");
            }
            step();
            if (non_triangle_triples() >= before)
                throw Error(ErrorKind::Internal, "non-triangle triple count did not decrease");
        }
    }

    // Only A_x and the full-edge particles at x change when eta(x) grows.
    std::optional<SeparatorResult> heavy_after_vertex_merge(HostId x, HostId y, HostId z) {
        std::optional<HostEdge> heavy;
        for (HostId a : r_.host.neighbors(x)) {
            HostEdge e = make_edge(x, a);
            if (full_edge_weight(e) > w_) {
                heavy = e;
                break;
            }
        }
        if (!heavy) {
            if (g_.weight_of(eta(x)) > w_)
                throw Error(ErrorKind::Internal, "vertex particle exceeds the bound without a heavy full edge");
            return std::nullopt;
        }
        HostId a = heavy->other(x);
        if (a == y || a == z)
            throw Error(ErrorKind::Internal, "heavy full edge " + to_string(*heavy) + " lies on the merged triple");
        if (g_.weight_of(eta(x)) > w_)
            throw Error(ErrorKind::Internal, "vertex particle exceeds the bound");
        const auto& at_p = side(*heavy, heavy->p);
        const auto& at_q = side(*heavy, heavy->q);
        if (at_p.empty() || at_q.empty())
            throw Error(ErrorKind::Internal, "heavy full edge has an empty interface");
        VertexSet sep = normalized({at_p.front(), at_q.front()});
        for (const auto& comp : components_after_removal(g_, sep))
            if (g_.weight_of(comp) > w_)
                throw Error(ErrorKind::Internal, "interface dominators leave a heavy component");
        return SeparatorResult{std::move(sep), *heavy, stats_};
    }
};

}  // namespace

std::size_t make_rigid_step_cap(const Graph& g, const Esd& d) {
    std::size_t size = d.host.vertex_count() + d.host.edge_count() + g.size();
    return 8 * size * size * size;
}

MakeRigidResult make_rigid(const Graph& g, const Esd& d, Weight w) {
    auto report = validate_esd(g, d);
    if (!report.ok()) throw Error(ErrorKind::InvalidEsd, report.summary());
    if (g.total_weight() > 2 * w + 1)
        throw Error(ErrorKind::PreconditionViolated,
                    "bound " + std::to_string(w) + " is below half of the total weight " +
                        std::to_string(g.total_weight()));
    for (const auto& p : particles_unchecked(g, d))
        if (p.weight > w)
            throw Error(ErrorKind::PreconditionViolated,
                        std::string(to_string(p.kind)) + " particle of weight " + std::to_string(p.weight) +
                            " exceeds " + std::to_string(w));
    return Rewriter(g, d, w).run();
}

}  // namespace sttt
