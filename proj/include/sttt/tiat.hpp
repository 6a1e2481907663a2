#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sttt/esd.hpp"
#include "sttt/graph.hpp"

namespace sttt {

/// An induced S_{t,t,t}: a center and three arms of exactly t vertices, each
/// arm listed outward from the center.
struct StttCopy {
    Vertex center = 0;
    std::vector<Vertex> arms[3];
    int t = 0;

    VertexSet vertices() const;
};

/// Certifies that a graph is the line graph of `root`: `edge_map[i]` is the
/// root edge represented by G-vertex i.
struct LineGraphCert {
    Graph root;
    std::vector<std::pair<Vertex, Vertex>> edge_map;
};

/// Checks that `edge_map` is a bijection from V(g) onto E(root) and that
/// adjacency in g is exactly the shared-endpoint relation.
bool check_line_graph_cert(const Graph& g, const LineGraphCert& cert, std::string* why = nullptr);
LineGraphCert parse_line_graph_cert(std::string_view text);
std::string render_line_graph_cert(const LineGraphCert& cert);

struct TreeAnswer {
    VertexSet tree;
};
struct DecompositionAnswer {
    Esd esd;
};
struct InconclusiveAnswer {
    std::string reason;
};
using TiatAnswer = std::variant<TreeAnswer, DecompositionAnswer, InconclusiveAnswer>;

/// One three-in-a-tree query. `graph` may be an induced subgraph of a larger
/// graph; `to_parent` then maps its vertices to the parent ids.
struct TiatQuery {
    const Graph& graph;
    VertexSet terminals;
    std::span<const Vertex> to_parent;
};

enum class Backend { Certificate, Exhaustive, Separation, Oracle };
const char* to_string(Backend b);

struct TiatConfig {
    std::vector<Backend> order{Backend::Oracle, Backend::Certificate, Backend::Separation,
                               Backend::Exhaustive};
    /// Line-graph certificate of the parent graph, if known.
    std::optional<LineGraphCert> certificate;
    const Graph* certificate_graph = nullptr;
    std::size_t tree_budget = 64;
    /// Untrusted external answer source; returns nullopt to pass.
    std::function<std::optional<TiatAnswer>(const TiatQuery&)> oracle;
};

/// Checks the Tree side of the three-in-a-tree contract.
bool is_terminal_tree(const Graph& g, std::span<const Vertex> tree, std::span<const Vertex> terminals);
/// Checks the Decomposition side: valid, rigid, terminals peripheral.
bool is_terminal_decomposition(const Graph& g, const Esd& d, std::span<const Vertex> terminals,
                               std::string* why = nullptr);

/// Dispatches to the configured backends in order and re-verifies every
/// answer. Throws CertificationFailed if a backend returns a bad answer.
TiatAnswer three_in_a_tree(const TiatQuery& query, const TiatConfig& config);
TiatAnswer three_in_a_tree(const Graph& g, const VertexSet& terminals, const TiatConfig& config);

struct NoTreeProven {};
struct BudgetExceeded {};
using TreeSearchResult = std::variant<TreeAnswer, NoTreeProven, BudgetExceeded>;

/// Enumerates induced subtrees (up to `budget` vertices) looking for one that
/// contains at least three terminals.
TreeSearchResult exhaustive_tree_search(const Graph& g, const VertexSet& terminals, std::size_t budget);

/// Canonical decomposition of G[keep] from a line-graph certificate of G:
/// host = root graph on the kept edges, every host edge carries its G-vertex
/// in both interfaces.
Esd line_graph_esd(const Graph& g, const LineGraphCert& cert, const VertexSet& keep,
                   const VertexSet& terminals);

/// Rigid decomposition of (G, Z) available when no component holds more than
/// two terminals: one host edge per terminal-carrying component.
std::optional<Esd> separation_esd(const Graph& g, const VertexSet& terminals);

StttCopy extract_sttt(const Graph& g, const VertexSet& tree, const VertexSet& terminals, int t);
bool verify_sttt(const Graph& g, const StttCopy& copy);

struct NoneProven {};
using StttSearchResult = std::variant<StttCopy, NoneProven, BudgetExceeded>;

/// Complete search for an induced S_{t,t,t}; `budget` caps search nodes.
StttSearchResult find_sttt_exhaustive(const Graph& g, int t, std::size_t budget);

}  // namespace sttt
