#include "sttt/gyarfas.hpp"

#include <algorithm>
#include <optional>

namespace sttt {

VertexSet big_component(const Graph& g, std::span<const Vertex> s) {
    VertexSet found;
    for (auto& comp : components_after_removal(g, s)) {
        if (is_small(g.weight_of(comp), g.total_weight())) continue;
        if (!found.empty()) throw Error(ErrorKind::Internal, "two components above half of the total weight");
        found = std::move(comp);
    }
    return found;
}

PathSeq trim_minimal(const Graph& g, const PathSeq& q) {
    if (!is_induced_path(g, q)) throw Error(ErrorKind::PropertyViolated, "path is not induced");
    if (!all_components_small(g, q))
        throw Error(ErrorKind::PropertyViolated, "G - N[Q] has a component above half of the total weight");
    PathSeq out = q;
    while (!out.empty()) {
        std::span<const Vertex> prefix(out.data(), out.size() - 1);
        if (!all_components_small(g, prefix)) break;
        out.pop_back();
    }
    return out;
}

GyarfasResult gyarfas_path(const Graph& g) {
    GyarfasResult result;
    VertexSet region = big_component(g, {});
    if (region.empty()) return result;

    // Invariant: `region` is the heavy component of G - N[path minus last],
    // and the last vertex lies in `region` or has a neighbour there.
    result.path.push_back(region.front());
    for (;;) {
        VertexSet next = big_component(g, result.path);
        if (next.empty()) break;
        if (next.size() >= region.size())
            throw Error(ErrorKind::Internal, "heavy component did not shrink");
        Vertex last = result.path.back();
        std::optional<Vertex> pick;
        for (Vertex u : g.neighbors(last)) {
            if (!contains(region, u) || contains(next, u)) continue;
            auto nbrs = g.neighbors(u);
            bool touches = std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex v) { return contains(next, v); });
            if (touches) {
                pick = u;
                break;
            }
        }
        if (!pick)
            throw Error(ErrorKind::Internal,
                        "no extension vertex between the path end and the heavy component");
        result.path.push_back(*pick);
        result.trace.push_back({*pick, next.size()});
        region = std::move(next);
        if (result.path.size() > g.size()) throw Error(ErrorKind::Internal, "path longer than n");
    }
    result.path = trim_minimal(g, result.path);
    return result;
}

}  // namespace sttt
