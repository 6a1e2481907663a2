#pragma once

#include <vector>

#include "sttt/graph.hpp"

namespace sttt {

struct GyarfasStep {
    Vertex extension;            // vertex appended to the path
    std::size_t big_component;   // size of the heavy component it was chosen against
};

struct GyarfasResult {
    PathSeq path;
    std::vector<GyarfasStep> trace;
};

/// Induced path Q such that every component of G - N[V(Q)] weighs at most
/// half of the total, and dropping the last vertex of Q breaks this.
GyarfasResult gyarfas_path(const Graph& g);

/// Drops trailing vertices while the remaining prefix keeps all components
/// of G - N[prefix] small. Throws PropertyViolated if `q` is not such a path.
PathSeq trim_minimal(const Graph& g, const PathSeq& q);

/// The unique component of G - N[s] with 2 w(C) > W, or empty.
VertexSet big_component(const Graph& g, std::span<const Vertex> s);

}  // namespace sttt
