#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "sttt/graph.hpp"

namespace sttt {

using HostId = std::uint32_t;

/// Host edge with p < q.
struct HostEdge {
    HostId p = 0;
    HostId q = 0;
    auto operator<=>(const HostEdge&) const = default;
    bool has(HostId x) const { return x == p || x == q; }
    HostId other(HostId x) const { return x == p ? q : p; }
};

/// Unordered host vertex triple with a < b < c.
struct HostTriple {
    HostId a = 0;
    HostId b = 0;
    HostId c = 0;
    auto operator<=>(const HostTriple&) const = default;
    bool has(HostId x) const { return x == a || x == b || x == c; }
};

HostEdge make_edge(HostId x, HostId y);
HostTriple make_triple(HostId x, HostId y, HostId z);
std::string to_string(HostEdge e);
std::string to_string(HostTriple t);

/// Simple host graph; triangles are always derived from the edge set.
class HostGraph {
public:
    HostGraph() = default;

    void add_vertex(HostId x);
    void add_edge(HostId x, HostId y);
    void remove_edge(HostEdge e);
    void remove_vertex(HostId x);

    bool has_vertex(HostId x) const { return adjacency_.count(x) != 0; }
    bool has_edge(HostEdge e) const;
    bool is_triangle(HostTriple t) const;
    std::vector<HostId> vertices() const;
    std::vector<HostEdge> edges() const;
    std::vector<HostTriple> triangles() const;
    const std::set<HostId>& neighbors(HostId x) const { return adjacency_.at(x); }
    std::size_t degree(HostId x) const { return adjacency_.at(x).size(); }
    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    /// Smallest id not used by any host vertex.
    HostId fresh_id() const { return adjacency_.empty() ? 0 : adjacency_.rbegin()->first + 1; }

    bool operator==(const HostGraph&) const = default;

private:
    std::map<HostId, std::set<HostId>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// The set assigned to a host edge and its two interfaces.
struct EdgeSets {
    VertexSet all;
    VertexSet at_p;
    VertexSet at_q;
    bool operator==(const EdgeSets&) const = default;
};

/// Extended strip decomposition. Absent map entries are empty sets.
struct Esd {
    HostGraph host;
    std::map<HostId, VertexSet> vertex_sets;
    std::map<HostEdge, EdgeSets> edge_sets;
    std::map<HostTriple, VertexSet> triangle_sets;

    const VertexSet& eta(HostId x) const;
    const VertexSet& eta(HostEdge e) const;
    const VertexSet& eta(HostTriple t) const;
    /// eta(e, end): the interface of e at host vertex `end`.
    const VertexSet& interface(HostEdge e, HostId end) const;

    bool operator==(const Esd&) const = default;
};

/// Like Esd, but triple sets may sit on any 3-subset of host vertices.
struct RelaxedEsd {
    HostGraph host;
    std::map<HostId, VertexSet> vertex_sets;
    std::map<HostEdge, EdgeSets> edge_sets;
    std::map<HostTriple, VertexSet> triple_sets;  // only nonempty sets stored

    static RelaxedEsd from(const Esd& d);
    /// Requires every nonempty triple to be a host triangle.
    Esd to_esd() const;
};

enum class Rule { Partition, Completeness, EdgePattern, Subset, Structure, Rigidity };
const char* to_string(Rule r);

struct Violation {
    Rule rule;
    VertexSet vertices;          // offending G vertices, in witness order
    std::vector<HostId> host;    // offending host vertices, in witness order
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

ValidationReport validate_esd(const Graph& g, const Esd& d);
ValidationReport validate_relaxed_esd(const Graph& g, const RelaxedEsd& d);
ValidationReport is_rigid(const Esd& d);

enum class ParticleKind { Vertex, EdgeInterior, HalfEdge, FullEdge, Triangle };
const char* to_string(ParticleKind k);

struct Particle {
    ParticleKind kind;
    std::variant<HostId, HostEdge, HostTriple> anchor;
    HostId side = 0;  // the host end for half-edge particles
    VertexSet members;
    Weight weight = 0;
};

/// All particles: vertex, then per edge interior / half-edge p / half-edge q /
/// full-edge, then triangles. Throws InvalidEsd if `d` does not validate.
std::vector<Particle> particles(const Graph& g, const Esd& d);
/// Particles without validating `d` first.
std::vector<Particle> particles_unchecked(const Graph& g, const Esd& d);
VertexSet full_edge_particle(const Esd& d, HostEdge e);
Weight max_particle_weight(const Graph& g, const Esd& d);

Esd restrict(const Esd& d, std::span<const Vertex> keep);
VertexSet peripheral_vertices(const Graph& g, const Esd& d);
Esd trivial_esd(const Graph& g);
/// Renames every G vertex through `map` (local -> parent or back).
Esd map_vertices(const Esd& d, std::span<const Vertex> map);
/// Expresses a parent-id decomposition in the ids of `sub`.
Esd lower_esd(const Esd& d, const Subgraph& sub);
Esd lift_esd(const Esd& d, const Subgraph& sub);

/// Two vertices, one from each interface of e, whose neighbourhood covers
/// the neighbourhood of the full-edge particle of e.
VertexSet interface_dominators(const Graph& g, const Esd& d, HostEdge e);

struct MakeRigidStats {
    std::size_t steps = 0;
    std::size_t step_cap = 0;
    std::size_t detached_edges = 0;   // both interfaces empty
    std::size_t rehung_edges = 0;     // one interface empty
    std::size_t flushed_triples = 0;
    std::size_t dropped_vertices = 0;
    std::size_t isolated_triples = 0; // non-triangle triple, no outside neighbours
    std::size_t merged_into_edge = 0;
    std::size_t merged_into_vertex = 0;
};

struct RigidEsdResult {
    Esd esd;
    MakeRigidStats stats;
};

struct SeparatorResult {
    VertexSet separator;
    HostEdge offending;
    MakeRigidStats stats;
};

using MakeRigidResult = std::variant<RigidEsdResult, SeparatorResult>;

/// Rewrites a (possibly non-rigid) decomposition whose particles all weigh at
/// most w into a rigid one with the same bound, or returns at most two
/// vertices whose closed neighbourhood leaves only components of weight <= w.
/// Requires W(G) <= 2w + 1.
MakeRigidResult make_rigid(const Graph& g, const Esd& d, Weight w);
std::size_t make_rigid_step_cap(const Graph& g, const Esd& d);

}  // namespace sttt
