#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sttt/error.hpp"

namespace sttt {

using Vertex = std::uint32_t;
using Weight = std::uint64_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;
/// Ordered sequence of distinct vertices, consecutive entries adjacent.
using PathSeq = std::vector<Vertex>;

/// Sorts and deduplicates `v` in place and returns it.
VertexSet normalized(VertexSet v);
bool is_normalized(std::span<const Vertex> v);
VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b);
bool contains(std::span<const Vertex> sorted, Vertex v);
bool is_subset(std::span<const Vertex> sub, std::span<const Vertex> super);

/// Simple undirected graph on dense ids 0..n-1 with nonnegative integer
/// vertex weights. Immutable after construction.
class Graph {
public:
    Graph() = default;
    /// Builds a graph; throws Error on self loops, duplicate edges or ids
    /// out of range. Missing weights default to 1.
    Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
          std::vector<Weight> weights = {});

    std::size_t size() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const;
    Weight weight(Vertex v) const { return weights_[v]; }
    std::span<const Weight> weights() const { return weights_; }
    Weight total_weight() const { return total_weight_; }
    Weight weight_of(std::span<const Vertex> set) const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;
    VertexSet all_vertices() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Weight> weights_;
    std::size_t edge_count_ = 0;
    Weight total_weight_ = 0;
};

/// N[S]: S together with all neighbours of S.
VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> s);
/// N(S) = N[S] \ S.
VertexSet open_neighborhood(const Graph& g, std::span<const Vertex> s);
/// Connected components of G[keep], each sorted, ordered by minimum id.
std::vector<VertexSet> components(const Graph& g, std::span<const Vertex> keep);
/// Components of G - N[s].
std::vector<VertexSet> components_after_removal(const Graph& g, std::span<const Vertex> s);
bool is_induced_path(const Graph& g, std::span<const Vertex> q);
/// True iff every component C of G - N[s] satisfies 2 w(C) <= W.
bool all_components_small(const Graph& g, std::span<const Vertex> s);

/// A half-of-total-weight test in integer arithmetic: 2 * w <= total.
inline bool is_small(Weight w, Weight total) { return 2 * w <= total; }

/// Induced subgraph with relabelled vertices. `to_parent[i]` is the parent
/// id of local vertex i; `to_local` maps parent ids back (npos if absent).
struct Subgraph {
    static constexpr Vertex npos = static_cast<Vertex>(-1);

    Graph graph;
    std::vector<Vertex> to_parent;
    std::vector<Vertex> to_local;

    VertexSet lift(std::span<const Vertex> local) const;
    /// Parent ids -> local ids; throws if a vertex is not in the subgraph.
    VertexSet lower(std::span<const Vertex> parent) const;
};

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Parses the line-based graph text format ("p", "w", "e" lines).
Graph parse_graph(std::string_view text);
std::string render_graph(const Graph& g);

}  // namespace sttt
