#pragma once

#include <utility>
#include <vector>

#include "sttt/graph.hpp"

namespace testing {

using sttt::Graph;
using sttt::Vertex;
using sttt::Weight;
using Edges = std::vector<std::pair<Vertex, Vertex>>;

inline Graph make(std::size_t n, const Edges& e, std::vector<Weight> w = {}) { return Graph(n, e, std::move(w)); }

inline Graph path(std::size_t n, std::vector<Weight> w = {}) {
    Edges e;
    for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, e, std::move(w));
}

inline Graph cycle(std::size_t n) {
    Edges e;
    for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    e.push_back({0, static_cast<Vertex>(n - 1)});
    return Graph(n, e);
}

inline Graph complete(std::size_t n) {
    Edges e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph(n, e);
}

// centre 0, leaves 1..k
inline Graph star(std::size_t k) {
    Edges e;
    for (Vertex i = 1; i <= k; ++i) e.push_back({0, i});
    return Graph(k + 1, e);
}

// line graph of `root`, vertex i = i-th root edge in lexicographic order
inline Graph line_graph(const Graph& root) {
    auto es = root.edges();
    Edges out;
    for (Vertex i = 0; i < es.size(); ++i)
        for (Vertex j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) out.push_back({i, j});
        }
    return Graph(es.size(), out);
}

}  // namespace testing
