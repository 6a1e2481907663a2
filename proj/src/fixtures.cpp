// Hand-built big-particle instances. Every fixture uses a path Q of
// 3t + 12 vertices, so G' = G - z' and the decomposition handed to the
// oracle backend covers exactly that graph.

#include <map>
#include <set>

#include "sttt/harness.hpp"

namespace sttt {

namespace {

struct Layout {
    int t;
    std::size_t len, q1_len;
    Vertex z_prime;
    // first vertex of the free middle stretch of Q1 (outside N[Y])
    Vertex mid;
};

Layout layout(int t) {
    Layout l;
    l.t = t;
    l.len = 3 * static_cast<std::size_t>(t) + 12;
    l.q1_len = l.len - t - 3;
    l.z_prime = static_cast<Vertex>(l.q1_len);
    l.mid = static_cast<Vertex>(t + 1);
    return l;
}

class Builder {
public:
    explicit Builder(const Layout& l) : l_(l) {
        for (std::size_t i = 0; i < l.len; ++i) weights_.push_back(1);
        for (Vertex i = 0; i + 1 < l.len; ++i) edge(i, i + 1);
    }

    Vertex add(Weight w = 1) {
        weights_.push_back(w);
        return static_cast<Vertex>(weights_.size() - 1);
    }
    void edge(Vertex u, Vertex v) { edges_.insert({std::min(u, v), std::max(u, v)}); }

    void host_edge(HostId a, HostId b) {
        for (HostId x : {a, b})
            if (!d_.host.has_vertex(x)) d_.host.add_vertex(x);
        d_.host.add_edge(a, b);
    }
    // Puts the Q vertices [from, to] on host edge ab, `from` in the
    // interface at a and `to` in the interface at b.
    void strip(HostId a, HostId b, Vertex from, Vertex to) {
        host_edge(a, b);
        HostEdge e = make_edge(a, b);
        EdgeSets& s = d_.edge_sets[e];
        for (Vertex v = from; v <= to; ++v) s.all.push_back(v);
        (e.p == a ? s.at_p : s.at_q).push_back(from);
        (e.p == a ? s.at_q : s.at_p).push_back(to);
    }
    EdgeSets& sets(HostId a, HostId b) { return d_.edge_sets[make_edge(a, b)]; }
    void vertex_set(HostId x, Vertex v) { d_.vertex_sets[x].push_back(v); }
    void triangle_set(HostId a, HostId b, HostId c, Vertex v) { d_.triangle_sets[make_triple(a, b, c)].push_back(v); }

    // Q1 on one host edge, Q2 on another: both untouched by the heavy part.
    void default_q1(HostId xh, HostId yh) { strip(xh, yh, 0, static_cast<Vertex>(l_.q1_len - 1)); }
    void default_q2(HostId zh, HostId r) { strip(zh, r, l_.z_prime + 1, static_cast<Vertex>(l_.len - 1)); }

    BigParticleFixture finish(std::string name, Vertex heavy, std::size_t expected_x, bool corrupt = false) {
        Weight others = 0;
        for (std::size_t v = 0; v < weights_.size(); ++v)
            if (v != heavy) others += weights_[v];
        if (!corrupt) weights_[heavy] = others - 2;
        for (auto& [x, s] : d_.vertex_sets) s = normalized(s);
        for (auto& [t, s] : d_.triangle_sets) s = normalized(s);
        for (auto& [e, s] : d_.edge_sets) s = EdgeSets{normalized(s.all), normalized(s.at_p), normalized(s.at_q)};
        std::vector<std::pair<Vertex, Vertex>> list(edges_.begin(), edges_.end());
        BigParticleFixture f;
        f.name = std::move(name);
        f.graph = Graph(weights_.size(), list, weights_);
        f.t = l_.t;
        for (Vertex v = 0; v < l_.len; ++v) f.q.push_back(v);
        f.esd = d_;
        f.expected_x = expected_x;
        f.corrupt = corrupt;
        return f;
    }

    const Layout& l() const { return l_; }

private:
    Layout l_;
    std::vector<Weight> weights_;
    std::set<std::pair<Vertex, Vertex>> edges_;
    Esd d_;
};

// host ids
constexpr HostId XH = 0, YH = 1, ZH = 2, P = 3, Q = 4, S = 5, R = 6;

// heavy strip on pq: a_p - h - a_q with a_p, a_q the interfaces
struct Heavy {
    Vertex ap, h, aq;
};

Heavy heavy_strip(Builder& b) {
    Heavy s{b.add(), b.add(), b.add()};
    b.edge(s.ap, s.h);
    b.edge(s.h, s.aq);
    b.host_edge(P, Q);
    b.sets(P, Q) = EdgeSets{{s.ap, s.h, s.aq}, {s.ap}, {s.aq}};
    return s;
}

BigParticleFixture pendant_at_p(int t) {
    Builder b(layout(t));
    b.default_q1(XH, YH);
    b.default_q2(ZH, P);
    Heavy s = heavy_strip(b);
    Vertex ell = static_cast<Vertex>(b.l().len - 1);
    b.edge(ell, s.ap);  // interfaces at p are complete to each other
    return b.finish("pendant-at-p t=" + std::to_string(t), s.h, 0);
}

BigParticleFixture through_p(int t) {
    Builder b(layout(t));
    Vertex m = b.l().mid;
    b.strip(XH, P, 0, m + 2);
    b.strip(P, YH, m + 3, static_cast<Vertex>(b.l().q1_len - 1));
    b.default_q2(ZH, R);
    Heavy s = heavy_strip(b);
    b.edge(s.ap, m + 2);
    b.edge(s.ap, m + 3);
    return b.finish("through-p t=" + std::to_string(t), s.h, 2);
}

BigParticleFixture through_p_and_q(int t) {
    Builder b(layout(t));
    Vertex m = b.l().mid;
    b.strip(XH, P, 0, m);
    b.strip(P, S, m + 1, m + 2);
    b.strip(S, Q, m + 3, m + 4);
    b.strip(Q, YH, m + 5, static_cast<Vertex>(b.l().q1_len - 1));
    b.default_q2(ZH, R);
    Heavy s = heavy_strip(b);
    b.edge(s.ap, m);
    b.edge(s.ap, m + 1);
    b.edge(s.aq, m + 4);
    b.edge(s.aq, m + 5);
    return b.finish("through-p-and-q t=" + std::to_string(t), s.h, 4);
}

// The weight sits on a host triangle; the full edge pq absorbs it.
BigParticleFixture triangle(int t) {
    Builder b(layout(t));
    b.default_q1(XH, YH);
    b.default_q2(ZH, P);
    Vertex ell = static_cast<Vertex>(b.l().len - 1);
    Vertex bpq = b.add(), bps = b.add(), bqs = b.add(), d = b.add(), h = b.add();
    b.host_edge(P, Q);
    b.host_edge(P, S);
    b.host_edge(Q, S);
    b.sets(P, Q) = EdgeSets{{bpq}, {bpq}, {bpq}};
    b.sets(P, S) = EdgeSets{{bps}, {bps}, {bps}};
    b.sets(Q, S) = EdgeSets{{bqs}, {bqs}, {bqs}};
    b.vertex_set(P, d);
    b.triangle_set(P, Q, S, h);
    b.edge(bpq, bps);
    b.edge(bpq, bqs);
    b.edge(bps, bqs);
    b.edge(ell, bpq);
    b.edge(ell, bps);
    b.edge(d, bpq);
    b.edge(h, bpq);
    b.edge(h, bqs);
    return b.finish("triangle t=" + std::to_string(t), h, 0);
}

// Q1 runs through the heavy strip itself: the backend answer is a valid
// decomposition but Q cannot come from a minimal path search.
BigParticleFixture corrupt(int t) {
    Builder b(layout(t));
    Vertex m = b.l().mid;
    b.strip(XH, P, 0, m + 1);
    b.strip(P, Q, m + 2, m + 4);
    b.strip(Q, YH, m + 5, static_cast<Vertex>(b.l().q1_len - 1));
    b.default_q2(ZH, R);
    Vertex h = b.add(100);
    b.edge(h, m + 3);
    b.sets(P, Q).all.push_back(h);
    return b.finish("first-claim-violated t=" + std::to_string(t), h, 0, true);
}

}  // namespace

std::vector<BigParticleFixture> big_particle_fixtures() {
    return {pendant_at_p(1), through_p(1), through_p_and_q(1), triangle(1),
            pendant_at_p(2), through_p(2), through_p_and_q(2), triangle(2),
            corrupt(1)};
}

TiatConfig fixture_config(const BigParticleFixture& f) {
    TiatConfig c;
    c.order = {Backend::Oracle};
    Esd esd = f.esd;
    std::size_t n = f.graph.size();
    c.oracle = [esd, n](const TiatQuery& q) -> std::optional<TiatAnswer> {
        std::vector<Vertex> to_local(n, Subgraph::npos);
        for (Vertex i = 0; i < q.to_parent.size(); ++i) to_local[q.to_parent[i]] = i;
        for (const auto& [e, s] : esd.edge_sets)
            for (Vertex v : s.all)
                if (to_local[v] == Subgraph::npos) return TiatAnswer{InconclusiveAnswer{"fixture does not match G'"}};
        return TiatAnswer{DecompositionAnswer{map_vertices(esd, to_local)}};
    };
    return c;
}

}  // namespace sttt
