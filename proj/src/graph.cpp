#include "sttt/graph.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

namespace sttt {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Syntax: return "SyntaxError";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::NegativeWeight: return "NegativeWeight";
        case ErrorKind::InvalidEsd: return "InvalidEsd";
        case ErrorKind::NotRigid: return "NotRigid";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::StepBudgetExceeded: return "StepBudgetExceeded";
        case ErrorKind::PropertyViolated: return "PropertyViolated";
        case ErrorKind::NotPeripheral: return "NotPeripheral";
        case ErrorKind::BadCertificate: return "BadCertificate";
        case ErrorKind::InvalidTreeShape: return "InvalidTreeShape";
        case ErrorKind::ArmTooShort: return "ArmTooShort";
        case ErrorKind::TooShort: return "TooShort";
        case ErrorKind::AssertionFailed: return "AssertionFailed";
        case ErrorKind::ContractViolation: return "ContractViolation";
        case ErrorKind::CertificationFailed: return "CertificationFailed";
        case ErrorKind::Inconclusive: return "Inconclusive";
        case ErrorKind::Internal: return "InternalError";
    }
    return "Error";
}

VertexSet normalized(VertexSet v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool is_normalized(std::span<const Vertex> v) {
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool contains(std::span<const Vertex> sorted, Vertex v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

bool is_subset(std::span<const Vertex> sub, std::span<const Vertex> super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
             std::vector<Weight> weights)
    : adjacency_(n), weights_(std::move(weights)) {
    if (weights_.empty()) weights_.assign(n, 1);
    if (weights_.size() != n)
        throw Error(ErrorKind::OutOfRange, "weight vector size differs from vertex count");
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw Error(ErrorKind::OutOfRange,
                        "edge " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw Error(ErrorKind::Syntax, "self loop at " + std::to_string(u));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& adj = adjacency_[v];
        std::sort(adj.begin(), adj.end());
        auto dup = std::adjacent_find(adj.begin(), adj.end());
        if (dup != adj.end())
            throw Error(ErrorKind::DuplicateEdge,
                        "edge " + std::to_string(v) + " " + std::to_string(*dup));
        edge_count_ += adj.size();
        total_weight_ += weights_[v];
    }
    edge_count_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& a = adjacency_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

Weight Graph::weight_of(std::span<const Vertex> set) const {
    Weight total = 0;
    for (Vertex v : set) total += weights_[v];
    return total;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::all_vertices() const {
    VertexSet out(size());
    for (Vertex v = 0; v < size(); ++v) out[v] = v;
    return out;
}

namespace {

void check_ids(const Graph& g, std::span<const Vertex> s) {
    for (Vertex v : s)
        if (v >= g.size()) throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v));
}

}  // namespace

VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> s) {
    check_ids(g, s);
    std::vector<char> mark(g.size(), 0);
    for (Vertex v : s) {
        mark[v] = 1;
        for (Vertex u : g.neighbors(v)) mark[u] = 1;
    }
    VertexSet out;
    for (Vertex v = 0; v < g.size(); ++v)
        if (mark[v]) out.push_back(v);
    return out;
}

VertexSet open_neighborhood(const Graph& g, std::span<const Vertex> s) {
    return set_difference(closed_neighborhood(g, s), normalized({s.begin(), s.end()}));
}

std::vector<VertexSet> components(const Graph& g, std::span<const Vertex> keep) {
    check_ids(g, keep);
    std::vector<char> in(g.size(), 0), seen(g.size(), 0);
    for (Vertex v : keep) in[v] = 1;
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < g.size(); ++root) {
        if (!in[root] || seen[root]) continue;
        VertexSet comp;
        seen[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex u : g.neighbors(v)) {
                if (in[u] && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexSet> components_after_removal(const Graph& g, std::span<const Vertex> s) {
    return components(g, set_difference(g.all_vertices(), closed_neighborhood(g, s)));
}

bool is_induced_path(const Graph& g, std::span<const Vertex> q) {
    for (Vertex v : q)
        if (v >= g.size()) return false;
    VertexSet sorted = normalized({q.begin(), q.end()});
    if (sorted.size() != q.size()) return false;
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j)
            if (g.adjacent(q[i], q[j]) != (j == i + 1)) return false;
    return true;
}

bool all_components_small(const Graph& g, std::span<const Vertex> s) {
    for (const auto& comp : components_after_removal(g, s))
        if (!is_small(g.weight_of(comp), g.total_weight())) return false;
    return true;
}

VertexSet Subgraph::lift(std::span<const Vertex> local) const {
    VertexSet out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(to_parent.at(v));
    return normalized(std::move(out));
}

VertexSet Subgraph::lower(std::span<const Vertex> parent) const {
    VertexSet out;
    out.reserve(parent.size());
    for (Vertex v : parent) {
        if (v >= to_local.size() || to_local[v] == npos)
            throw Error(ErrorKind::OutOfRange,
                        "vertex " + std::to_string(v) + " is not in the subgraph");
        out.push_back(to_local[v]);
    }
    return normalized(std::move(out));
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    check_ids(g, keep);
    Subgraph sub;
    sub.to_parent = normalized({keep.begin(), keep.end()});
    sub.to_local.assign(g.size(), Subgraph::npos);
    for (Vertex i = 0; i < sub.to_parent.size(); ++i) sub.to_local[sub.to_parent[i]] = i;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Weight> weights;
    for (Vertex i = 0; i < sub.to_parent.size(); ++i) {
        Vertex v = sub.to_parent[i];
        weights.push_back(g.weight(v));
        for (Vertex u : g.neighbors(v))
            if (sub.to_local[u] != Subgraph::npos && sub.to_local[u] > i)
                edges.emplace_back(i, sub.to_local[u]);
    }
    sub.graph = Graph(sub.to_parent.size(), edges, std::move(weights));
    return sub;
}

// ---------------------------------------------------------------- text format

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

[[noreturn]] void syntax(std::size_t line_no, const std::string& what) {
    throw Error(ErrorKind::Syntax, "line " + std::to_string(line_no) + ": " + what);
}

std::uint64_t number(std::string_view tok, std::size_t line_no) {
    if (!tok.empty() && tok.front() == '-')
        throw Error(ErrorKind::NegativeWeight,
                    "line " + std::to_string(line_no) + ": negative value " + std::string(tok));
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        syntax(line_no, "expected a nonnegative integer, got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::optional<std::size_t> n;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::pair<Vertex, Weight>> weight_lines;
    std::vector<std::size_t> edge_lines;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tok = tokens(line);
        if (tok.empty() || tok[0].front() == '#') continue;
        if (tok[0] == "p") {
            if (tok.size() != 2) syntax(line_no, "header must be 'p <n>'");
            if (n) syntax(line_no, "duplicate header");
            n = number(tok[1], line_no);
        } else if (tok[0] == "w") {
            if (tok.size() != 3) syntax(line_no, "weight line must be 'w <v> <weight>'");
            if (!n) syntax(line_no, "weight line before header");
            auto v = number(tok[1], line_no);
            if (v >= *n) throw Error(ErrorKind::OutOfRange, "line " + std::to_string(line_no) + ": vertex " + std::to_string(v));
            weight_lines.emplace_back(static_cast<Vertex>(v), number(tok[2], line_no));
        } else if (tok[0] == "e") {
            if (tok.size() != 3) syntax(line_no, "edge line must be 'e <u> <v>'");
            if (!n) syntax(line_no, "edge line before header");
            auto u = number(tok[1], line_no);
            auto v = number(tok[2], line_no);
            if (u >= *n || v >= *n)
                throw Error(ErrorKind::OutOfRange, "line " + std::to_string(line_no) + ": edge " +
                                                       std::to_string(u) + " " + std::to_string(v));
            if (u == v) syntax(line_no, "self loop");
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            edge_lines.push_back(line_no);
        } else {
            syntax(line_no, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!n) throw Error(ErrorKind::Syntax, "missing header 'p <n>'");

    std::vector<Weight> weights(*n, 1);
    std::vector<char> weight_set(*n, 0);
    for (auto [v, w] : weight_lines) {
        if (weight_set[v]) throw Error(ErrorKind::Syntax, "duplicate weight for vertex " + std::to_string(v));
        weight_set[v] = 1;
        weights[v] = w;
    }
    // Report the line of the second occurrence of a duplicated pair.
    std::vector<std::pair<std::pair<Vertex, Vertex>, std::size_t>> keyed;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        keyed.push_back({{std::min(u, v), std::max(u, v)}, edge_lines[i]});
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 1; i < keyed.size(); ++i)
        if (keyed[i].first == keyed[i - 1].first)
            throw Error(ErrorKind::DuplicateEdge,
                        "line " + std::to_string(keyed[i].second) + ": edge " +
                            std::to_string(keyed[i].first.first) + " " +
                            std::to_string(keyed[i].first.second));
    return Graph(*n, edges, std::move(weights));
}

std::string render_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.size() << '\n';
    for (Vertex v = 0; v < g.size(); ++v)
        if (g.weight(v) != 1) out << "w " << v << ' ' << g.weight(v) << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace sttt
