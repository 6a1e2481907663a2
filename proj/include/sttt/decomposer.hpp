#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sttt/esd.hpp"
#include "sttt/graph.hpp"
#include "sttt/tiat.hpp"

namespace sttt {

struct Anchors {
    Vertex x = 0, y = 0, z = 0, z_prime = 0, ell = 0;
    PathSeq q1, q2;
    VertexSet qx, qy, qz;
    VertexSet y_set;
    int t = 0;
};

/// Splits a long path into the anchor pieces. Throws TooShort if
/// |Q| <= 3t + 11.
Anchors mark_anchors(const PathSeq& q, int t);

/// V(G') where G' = G - (N(Y) - V(Q1) - V(Q2)). Throws AssertionFailed if a
/// vertex of Q other than z' is missing or x, y, z do not have degree 1.
VertexSet build_gprime(const Graph& g, const Anchors& a);

/// Splits each isolated host vertex into one per component of its set and
/// drops empty isolated host vertices.
Esd normalize_isolated(const Graph& g, const Esd& d);

/// Lexicographically smallest host edge with a big full-edge particle, or
/// nullopt if every particle satisfies 2 w <= total. Throws
/// ContractViolation on a big isolated-vertex particle.
std::optional<HostEdge> find_big_particle(const Graph& g, const Esd& d, Weight total);

struct BigParticleResult {
    VertexSet s;
    VertexSet x;    // N_{G'}[A] on Q1
    VertexSet x_a;  // interface dominators of A
};

/// `gprime` is G' as an induced subgraph of `g`; `d` is in its local ids.
/// Throws CertificationFailed naming the failed claim.
BigParticleResult big_particle_separator(const Graph& g, const Anchors& a, const Subgraph& gprime, const Esd& d,
                                         HostEdge pq);

struct SeparatorOutcome {
    VertexSet s;
    Esd esd;  // decomposition of G - N[S], in G ids
};

enum class Branch { ShortPath, Sttt, Rigid, RigidSeparator, BigParticle };
const char* to_string(Branch b);

struct DecomposeTrace {
    PathSeq q;
    std::optional<Anchors> anchors;
    VertexSet gprime;
    bool terminal_degrees_ok = false;
    std::optional<HostEdge> big_edge;
    VertexSet x, x_a;
    std::optional<MakeRigidStats> rigid_stats;
};

struct Outcome {
    std::variant<StttCopy, SeparatorOutcome> result;
    Branch branch = Branch::ShortPath;
    DecomposeTrace trace;
    std::vector<std::pair<std::string, bool>> checks;
};

/// Independent re-check of an outcome; one named entry per property.
std::vector<std::pair<std::string, bool>> verify_outcome(const Graph& g, int t, const Outcome& out);

/// Either an induced S_{t,t,t} or a set S of at most 3t + 11 vertices with
/// a rigid decomposition of G - N[S] whose particles are all small.
/// Throws Inconclusive if the backend cannot answer, CertificationFailed if
/// a runtime check fails.
Outcome decompose(const Graph& g, int t, const TiatConfig& config);

/// Same as decompose, starting from a caller-supplied induced path Q whose
/// removal leaves only small components.
Outcome decompose_from_path(const Graph& g, int t, const PathSeq& q, const TiatConfig& config);

}  // namespace sttt
