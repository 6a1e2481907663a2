#include "sttt/tiat.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace sttt {

VertexSet StttCopy::vertices() const {
    VertexSet out{center};
    for (const auto& arm : arms) out.insert(out.end(), arm.begin(), arm.end());
    return normalized(std::move(out));
}

const char* to_string(Backend b) {
    switch (b) {
        case Backend::Certificate: return "certificate";
        case Backend::Exhaustive: return "exhaustive";
        case Backend::Separation: return "separation";
        case Backend::Oracle: return "oracle";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// line-graph certificates

bool check_line_graph_cert(const Graph& g, const LineGraphCert& cert, std::string* why) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    if (cert.edge_map.size() != g.size())
        return fail("certificate maps " + std::to_string(cert.edge_map.size()) + " vertices, graph has " +
                    std::to_string(g.size()));
    if (cert.root.edge_count() != g.size()) return fail("root edge count differs from vertex count");
    std::set<std::pair<Vertex, Vertex>> seen;
    std::vector<std::vector<Vertex>> incident(cert.root.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        auto [a, b] = cert.edge_map[v];
        if (a > b) std::swap(a, b);
        if (b >= cert.root.size() || !cert.root.adjacent(a, b))
            return fail("vertex " + std::to_string(v) + " maps to a non-edge of the root");
        if (!seen.insert({a, b}).second) return fail("root edge mapped twice");
        incident[a].push_back(v);
        incident[b].push_back(v);
    }
    // Two distinct root edges share at most one endpoint, so the cliques
    // below cover every line-graph edge exactly once.
    std::size_t expected = 0;
    for (const auto& inc : incident) {
        expected += inc.size() * (inc.size() - 1) / 2;
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                if (!g.adjacent(inc[i], inc[j]))
                    return fail("vertices " + std::to_string(inc[i]) + " and " + std::to_string(inc[j]) +
                                " share a root endpoint but are not adjacent");
    }
    if (expected != g.edge_count()) return fail("graph has edges between disjoint root edges");
    return true;
}

LineGraphCert parse_line_graph_cert(std::string_view text) {
    std::string graph_part;
    std::vector<std::pair<std::size_t, std::string>> map_lines;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] == 'm') {
            map_lines.emplace_back(lineno, std::string(line.substr(first + 1)));
            graph_part += "#\n";  // keeps line numbers aligned for graph errors
        } else {
            graph_part.append(line);
            graph_part += '\n';
        }
        if (end == text.size()) break;
        pos = end + 1;
    }
    LineGraphCert cert{parse_graph(graph_part), {}};
    std::map<Vertex, std::pair<Vertex, Vertex>> entries;
    for (const auto& [ln, rest] : map_lines) {
        std::istringstream in(rest);
        long long u, v, x;
        std::string extra;
        if (!(in >> u >> v >> x) || (in >> extra) || u < 0 || v < 0 || x < 0)
            throw Error(ErrorKind::Syntax, "line " + std::to_string(ln) + ": expected 'm <rootU> <rootV> <gVertex>'");
        if (static_cast<std::size_t>(u) >= cert.root.size() || static_cast<std::size_t>(v) >= cert.root.size())
            throw Error(ErrorKind::OutOfRange, "line " + std::to_string(ln) + ": root vertex out of range");
        if (!entries.emplace(static_cast<Vertex>(x), std::pair{static_cast<Vertex>(u), static_cast<Vertex>(v)}).second)
            throw Error(ErrorKind::Syntax, "line " + std::to_string(ln) + ": vertex " + std::to_string(x) + " mapped twice");
    }
    for (const auto& [x, e] : entries) {
        if (x != cert.edge_map.size())
            throw Error(ErrorKind::OutOfRange, "mapped vertices are not 0.." + std::to_string(entries.size() - 1));
        cert.edge_map.push_back(e);
    }
    return cert;
}

std::string render_line_graph_cert(const LineGraphCert& cert) {
    std::string out = render_graph(cert.root);
    for (Vertex v = 0; v < cert.edge_map.size(); ++v) {
        auto [a, b] = cert.edge_map[v];
        out += "m " + std::to_string(std::min(a, b)) + " " + std::to_string(std::max(a, b)) + " " +
               std::to_string(v) + "\n";
    }
    return out;
}

Esd line_graph_esd(const Graph& g, const LineGraphCert& cert, const VertexSet& keep, const VertexSet& terminals) {
    std::string why;
    if (!check_line_graph_cert(g, cert, &why)) throw Error(ErrorKind::BadCertificate, why);
    // z is peripheral iff its root edge has an end of degree 1 among kept edges
    std::map<Vertex, std::size_t> root_degree;
    for (Vertex v : keep) {
        ++root_degree[cert.edge_map[v].first];
        ++root_degree[cert.edge_map[v].second];
    }
    for (Vertex z : terminals) {
        if (!contains(keep, z)) throw Error(ErrorKind::PreconditionViolated, "terminal outside the kept set");
        auto [a, b] = cert.edge_map[z];
        if (root_degree[a] != 1 && root_degree[b] != 1)
            throw Error(ErrorKind::NotPeripheral, "terminal " + std::to_string(z) + " sits on root edge " +
                                                      std::to_string(a) + "-" + std::to_string(b) +
                                                      " with no end of degree 1");
    }
    Esd d;
    for (Vertex v : keep) {
        auto [a, b] = cert.edge_map[v];
        if (!d.host.has_vertex(a)) d.host.add_vertex(a);
        if (!d.host.has_vertex(b)) d.host.add_vertex(b);
        d.host.add_edge(a, b);
        d.edge_sets[make_edge(a, b)] = EdgeSets{{v}, {v}, {v}};
    }
    return d;
}

// ---------------------------------------------------------------------------
// answer checks

bool is_terminal_tree(const Graph& g, std::span<const Vertex> tree, std::span<const Vertex> terminals) {
    if (tree.empty() || !is_normalized(tree) || tree.back() >= g.size()) return false;
    std::size_t edges = 0;
    for (Vertex v : tree)
        for (Vertex u : g.neighbors(v))
            if (u > v && contains(tree, u)) ++edges;
    if (edges + 1 != tree.size()) return false;
    if (components(g, tree).size() != 1) return false;
    std::size_t hits = 0;
    for (Vertex z : terminals)
        if (contains(tree, z)) ++hits;
    return hits >= 3;
}

bool is_terminal_decomposition(const Graph& g, const Esd& d, std::span<const Vertex> terminals, std::string* why) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    auto report = validate_esd(g, d);
    if (!report.ok()) return fail("invalid: " + report.summary());
    auto rigid = is_rigid(d);
    if (!rigid.ok()) return fail("not rigid: " + rigid.summary());
    VertexSet periph = peripheral_vertices(g, d);
    for (Vertex z : terminals)
        if (!contains(periph, z)) return fail("terminal " + std::to_string(z) + " is not peripheral");
    return true;
}

// ---------------------------------------------------------------------------
// exhaustive induced-subtree search

namespace {

class TreeSearch {
public:
    TreeSearch(const Graph& g, const VertexSet& z, std::size_t budget)
        : g_(g), budget_(budget), is_terminal_(g.size(), false), state_(g.size(), Free), in_count_(g.size(), 0) {
        for (Vertex v : z) is_terminal_[v] = true;
    }

    TreeSearchResult run() {
        if (budget_ == 0) return g_.size() == 0 ? TreeSearchResult{NoTreeProven{}} : TreeSearchResult{BudgetExceeded{}};
        for (Vertex r = 0; r < g_.size(); ++r) {
            // trees whose minimum vertex is r
            std::fill(state_.begin(), state_.end(), Free);
            std::fill(in_count_.begin(), in_count_.end(), 0);
            for (Vertex v = 0; v < r; ++v) state_[v] = Out;
            tree_.clear();
            terminals_in_ = 0;
            add(r);
            if (grow()) return TreeAnswer{normalized(tree_)};
        }
        if (hit_limit_) return BudgetExceeded{};
        return NoTreeProven{};
    }

private:
    enum State : std::uint8_t { Free, In, Out };

    const Graph& g_;
    std::size_t budget_;
    std::vector<bool> is_terminal_;
    std::vector<State> state_;
    std::vector<std::uint32_t> in_count_;  // neighbours inside the current tree
    std::vector<Vertex> tree_;
    std::size_t terminals_in_ = 0;
    bool hit_limit_ = false;

    void add(Vertex v) {
        state_[v] = In;
        tree_.push_back(v);
        if (is_terminal_[v]) ++terminals_in_;
        for (Vertex u : g_.neighbors(v)) ++in_count_[u];
    }

    void remove(Vertex v) {
        state_[v] = Free;
        tree_.pop_back();
        if (is_terminal_[v]) --terminals_in_;
        for (Vertex u : g_.neighbors(v)) --in_count_[u];
    }

    // Terminals that could still join: reachable through free vertices that
    // currently have exactly one tree neighbour or none.
    std::size_t reachable_terminals() {
        std::vector<Vertex> stack;
        std::vector<bool> seen(g_.size(), false);
        for (Vertex v : tree_)
            for (Vertex u : g_.neighbors(v))
                if (state_[u] == Free && in_count_[u] == 1 && !seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
        std::size_t count = 0;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            if (is_terminal_[v]) ++count;
            for (Vertex u : g_.neighbors(v))
                if (state_[u] == Free && in_count_[u] <= 1 && !seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
        }
        return count;
    }

    bool grow() {
        if (terminals_in_ >= 3) return true;
        if (terminals_in_ + reachable_terminals() < 3) return false;

        // min-id free frontier vertex with exactly one tree neighbour
        std::optional<Vertex> cand;
        for (Vertex v : tree_)
            for (Vertex u : g_.neighbors(v))
                if (state_[u] == Free && in_count_[u] == 1 && (!cand || u < *cand)) cand = u;
        if (!cand) return false;
        Vertex v = *cand;

        if (tree_.size() < budget_) {
            add(v);
            bool found = grow();
            if (found) return true;
            remove(v);
        } else {
            hit_limit_ = true;
        }
        state_[v] = Out;
        bool found = grow();
        state_[v] = Free;
        return found;
    }
};

}  // namespace

TreeSearchResult exhaustive_tree_search(const Graph& g, const VertexSet& terminals, std::size_t budget) {
    for (Vertex z : terminals)
        if (z >= g.size()) throw Error(ErrorKind::OutOfRange, "terminal " + std::to_string(z));
    if (terminals.size() < 3) return NoTreeProven{};
    return TreeSearch(g, normalized(terminals), budget).run();
}

// ---------------------------------------------------------------------------
// separation backend

std::optional<Esd> separation_esd(const Graph& g, const VertexSet& terminals) {
    Esd d;
    HostId next = 0;
    for (const auto& comp : components(g, g.all_vertices())) {
        VertexSet here = set_intersection(comp, terminals);
        if (here.size() >= 3) return std::nullopt;
        if (here.empty()) {
            d.host.add_vertex(next);
            d.vertex_sets[next] = comp;
            ++next;
            continue;
        }
        HostId p = next++, q = next++;
        d.host.add_vertex(p);
        d.host.add_vertex(q);
        d.host.add_edge(p, q);
        Vertex a = here.front(), b = here.back();
        d.edge_sets[make_edge(p, q)] = EdgeSets{comp, {a}, {b}};
    }
    return d;
}

// ---------------------------------------------------------------------------
// dispatch

TiatAnswer three_in_a_tree(const TiatQuery& query, const TiatConfig& config) {
    const Graph& g = query.graph;
    VertexSet z = normalized(query.terminals);
    if (z.size() < 2) throw Error(ErrorKind::PreconditionViolated, "need at least two terminals");
    if (z.back() >= g.size()) throw Error(ErrorKind::OutOfRange, "terminal outside the graph");

    auto certify = [&](TiatAnswer answer, Backend from) -> TiatAnswer {
        if (auto* t = std::get_if<TreeAnswer>(&answer)) {
            if (!is_terminal_tree(g, t->tree, z))
                throw Error(ErrorKind::CertificationFailed,
                            std::string(to_string(from)) + " backend returned a set that is not an induced tree on three terminals");
        } else if (auto* d = std::get_if<DecompositionAnswer>(&answer)) {
            std::string why;
            if (!is_terminal_decomposition(g, d->esd, z, &why))
                throw Error(ErrorKind::CertificationFailed,
                            std::string(to_string(from)) + " backend returned a bad decomposition: " + why);
        }
        return answer;
    };

    std::vector<std::string> reasons;
    for (Backend b : config.order) {
        switch (b) {
            case Backend::Oracle: {
                if (!config.oracle) break;
                auto answer = config.oracle(TiatQuery{g, z, query.to_parent});
                if (!answer) {
                    reasons.push_back("oracle passed");
                    break;
                }
                if (auto* inc = std::get_if<InconclusiveAnswer>(&*answer)) {
                    reasons.push_back("oracle: " + inc->reason);
                    break;
                }
                return certify(std::move(*answer), b);
            }
            case Backend::Certificate: {
                if (!config.certificate) break;
                const Graph& parent = config.certificate_graph ? *config.certificate_graph : g;
                VertexSet keep = query.to_parent.empty() ? g.all_vertices()
                                                         : normalized({query.to_parent.begin(), query.to_parent.end()});
                VertexSet zp = z;
                if (!query.to_parent.empty())
                    for (auto& v : zp) v = query.to_parent[v];
                zp = normalized(std::move(zp));
                Esd d;
                try {
                    d = line_graph_esd(parent, *config.certificate, keep, zp);
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::NotPeripheral) throw;
                    reasons.push_back(std::string("certificate: ") + e.what());
                    break;
                }
                if (!query.to_parent.empty()) {
                    std::vector<Vertex> to_local(parent.size(), Subgraph::npos);
                    for (Vertex i = 0; i < query.to_parent.size(); ++i) to_local[query.to_parent[i]] = i;
                    d = map_vertices(d, to_local);
                }
                return certify(DecompositionAnswer{std::move(d)}, b);
            }
            case Backend::Separation: {
                if (auto d = separation_esd(g, z)) return certify(DecompositionAnswer{std::move(*d)}, b);
                reasons.push_back("separation: some component holds three terminals");
                break;
            }
            case Backend::Exhaustive: {
                auto r = exhaustive_tree_search(g, z, config.tree_budget);
                if (auto* t = std::get_if<TreeAnswer>(&r)) return certify(std::move(*t), b);
                if (std::holds_alternative<NoTreeProven>(r))
                    reasons.push_back("exhaustive: no induced tree on three terminals exists");
                else
                    reasons.push_back("exhaustive: budget " + std::to_string(config.tree_budget) + " exceeded");
                break;
            }
        }
    }
    std::string reason;
    for (const auto& r : reasons) reason += (reason.empty() ? "" : "; ") + r;
    return InconclusiveAnswer{reason.empty() ? "no backend configured" : reason};
}

TiatAnswer three_in_a_tree(const Graph& g, const VertexSet& terminals, const TiatConfig& config) {
    return three_in_a_tree(TiatQuery{g, terminals, {}}, config);
}

// ---------------------------------------------------------------------------
// S_{t,t,t}

bool verify_sttt(const Graph& g, const StttCopy& copy) {
    if (copy.t < 1) return false;
    std::vector<Vertex> all{copy.center};
    for (const auto& arm : copy.arms) {
        if (arm.size() != static_cast<std::size_t>(copy.t)) return false;
        all.insert(all.end(), arm.begin(), arm.end());
    }
    for (Vertex v : all)
        if (v >= g.size()) return false;
    VertexSet set = normalized(all);
    if (set.size() != all.size()) return false;
    for (const auto& arm : copy.arms) {
        Vertex prev = copy.center;
        for (Vertex v : arm) {
            if (!g.adjacent(prev, v)) return false;
            prev = v;
        }
    }
    std::size_t edges = 0;
    for (Vertex v : set)
        for (Vertex u : g.neighbors(v))
            if (u > v && contains(set, u)) ++edges;
    return edges == 3 * static_cast<std::size_t>(copy.t);
}

namespace {

std::vector<std::size_t> tree_distances(const Graph& g, const VertexSet& tree, Vertex from,
                                        std::vector<Vertex>* parent) {
    constexpr std::size_t inf = static_cast<std::size_t>(-1);
    std::vector<std::size_t> dist(g.size(), inf);
    if (parent) parent->assign(g.size(), Subgraph::npos);
    std::vector<Vertex> queue{from};
    dist[from] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Vertex v = queue[i];
        for (Vertex u : g.neighbors(v))
            if (dist[u] == inf && contains(tree, u)) {
                dist[u] = dist[v] + 1;
                if (parent) (*parent)[u] = v;
                queue.push_back(u);
            }
    }
    return dist;
}

}  // namespace

StttCopy extract_sttt(const Graph& g, const VertexSet& tree, const VertexSet& terminals, int t) {
    if (t < 1) throw Error(ErrorKind::PreconditionViolated, "t must be positive");
    VertexSet z = normalized(terminals);
    if (z.size() != 3) throw Error(ErrorKind::PreconditionViolated, "need exactly three terminals");
    if (!is_terminal_tree(g, tree, z)) throw Error(ErrorKind::PreconditionViolated, "not an induced tree on the terminals");

    std::vector<std::size_t> d[3];
    for (int i = 0; i < 3; ++i) d[i] = tree_distances(g, tree, z[i], nullptr);
    Vertex center = tree.front();
    std::size_t best = static_cast<std::size_t>(-1);
    for (Vertex v : tree) {
        std::size_t s = d[0][v] + d[1][v] + d[2][v];
        if (s < best) {
            best = s;
            center = v;
        }
    }
    if (contains(z, center))
        throw Error(ErrorKind::InvalidTreeShape,
                    "terminal " + std::to_string(center) + " lies on the tree path between the other two");

    std::vector<Vertex> parent;
    tree_distances(g, tree, center, &parent);
    StttCopy copy;
    copy.center = center;
    copy.t = t;
    for (int i = 0; i < 3; ++i) {
        std::vector<Vertex> path;  // terminal back to the center, exclusive
        for (Vertex v = z[i]; v != center; v = parent[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        if (path.size() < static_cast<std::size_t>(t))
            throw Error(ErrorKind::ArmTooShort, "branch to terminal " + std::to_string(z[i]) + " has " +
                                                    std::to_string(path.size()) + " vertices, need " + std::to_string(t));
        copy.arms[i].assign(path.begin(), path.begin() + t);
    }
    if (!verify_sttt(g, copy)) throw Error(ErrorKind::Internal, "extracted copy does not verify");
    return copy;
}

namespace {

class SpiderSearch {
public:
    SpiderSearch(const Graph& g, int t, std::size_t budget) : g_(g), t_(t), budget_(budget), used_(g.size(), false) {}

    StttSearchResult run() {
        try {
            for (Vertex c = 0; c < g_.size(); ++c) {
                if (g_.degree(c) < 3) continue;
                copy_ = StttCopy{};
                copy_.center = c;
                copy_.t = t_;
                used_[c] = true;
                chosen_ = {c};
                bool found = extend(0);
                used_[c] = false;
                if (found) return copy_;
            }
        } catch (const Exhausted&) {
            return BudgetExceeded{};
        }
        return NoneProven{};
    }

private:
    struct Exhausted {};

    const Graph& g_;
    int t_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::vector<bool> used_;
    std::vector<Vertex> chosen_;
    StttCopy copy_;

    // v may join if it touches no chosen vertex except `tail`
    bool free_of_others(Vertex v, Vertex tail) const {
        for (Vertex u : g_.neighbors(v))
            if (used_[u] && u != tail) return false;
        return true;
    }

    bool extend(int arm) {
        if (++nodes_ > budget_) throw Exhausted{};
        if (arm == 3) return true;
        auto& cur = copy_.arms[arm];
        if (cur.size() == static_cast<std::size_t>(t_)) return extend(arm + 1);
        Vertex tail = cur.empty() ? copy_.center : cur.back();
        for (Vertex v : g_.neighbors(tail)) {
            if (used_[v] || !free_of_others(v, tail)) continue;
            // symmetric arms: first vertices in increasing order
            if (cur.empty() && arm > 0 && v < copy_.arms[arm - 1].front()) continue;
            used_[v] = true;
            cur.push_back(v);
            if (extend(arm)) return true;
            cur.pop_back();
            used_[v] = false;
        }
        return false;
    }
};

}  // namespace

StttSearchResult find_sttt_exhaustive(const Graph& g, int t, std::size_t budget) {
    if (t < 1) throw Error(ErrorKind::PreconditionViolated, "t must be positive");
    return SpiderSearch(g, t, budget).run();
}

}  // namespace sttt
