#include "sttt/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sttt {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::Syntax, "esd: " + msg); }

std::vector<std::uint32_t> split_ids(const std::string& key, std::size_t expect) {
    std::vector<std::uint32_t> ids;
    std::size_t pos = 0;
    while (pos <= key.size()) {
        std::size_t dash = key.find('-', pos);
        if (dash == std::string::npos) dash = key.size();
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(key.data() + pos, key.data() + dash, v);
        if (ec != std::errc{} || ptr != key.data() + dash || dash == pos) bad("bad key '" + key + "'");
        ids.push_back(v);
        pos = dash + 1;
    }
    if (ids.size() != expect) bad("key '" + key + "' should have " + std::to_string(expect) + " ids");
    for (std::size_t i = 1; i < ids.size(); ++i)
        if (ids[i - 1] >= ids[i]) bad("key '" + key + "' is not increasing");
    return ids;
}

VertexSet read_set(const json& j, const std::string& where) {
    if (!j.is_array()) bad(where + " is not an array");
    VertexSet out;
    for (const auto& v : j) {
        if (!v.is_number_unsigned()) bad(where + " holds a non-id");
        out.push_back(v.get<Vertex>());
    }
    VertexSet n = normalized(out);
    if (n.size() != out.size()) bad(where + " repeats a vertex");
    return n;
}

void only_keys(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
    if (!j.is_object()) bad(where + " is not an object");
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const char* allowed : keys) known = known || k == allowed;
        if (!known) bad("unknown key '" + k + "' in " + where);
    }
}

}  // namespace

std::string render_esd(const Esd& d) {
    json host;
    host["vertices"] = d.host.vertices();
    json edges = json::array();
    for (HostEdge e : d.host.edges()) edges.push_back({e.p, e.q});
    host["edges"] = edges;

    json vertex = json::object(), edge = json::object(), triangle = json::object();
    for (const auto& [x, s] : d.vertex_sets)
        if (!s.empty()) vertex[std::to_string(x)] = s;
    for (const auto& [e, s] : d.edge_sets) {
        if (s.all.empty() && s.at_p.empty() && s.at_q.empty()) continue;
        json entry;
        if (!s.all.empty()) entry["all"] = s.all;
        if (!s.at_p.empty()) entry["at_p"] = s.at_p;
        if (!s.at_q.empty()) entry["at_q"] = s.at_q;
        edge[std::to_string(e.p) + "-" + std::to_string(e.q)] = entry;
    }
    for (const auto& [t, s] : d.triangle_sets)
        if (!s.empty()) triangle[std::to_string(t.a) + "-" + std::to_string(t.b) + "-" + std::to_string(t.c)] = s;

    json doc;
    doc["host"] = host;
    json eta = json::object();
    if (!vertex.empty()) eta["vertex"] = vertex;
    if (!edge.empty()) eta["edge"] = edge;
    if (!triangle.empty()) eta["triangle"] = triangle;
    doc["eta"] = eta;
    return doc.dump(2) + "\n";
}

Esd parse_esd(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        bad(e.what());
    }
    only_keys(doc, {"host", "eta"}, "document");
    if (!doc.contains("host")) bad("missing 'host'");
    const json& host = doc["host"];
    only_keys(host, {"vertices", "edges"}, "host");

    Esd d;
    if (host.contains("vertices"))
        for (Vertex x : read_set(host["vertices"], "host.vertices")) d.host.add_vertex(x);
    if (host.contains("edges")) {
        if (!host["edges"].is_array()) bad("host.edges is not an array");
        for (const auto& e : host["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
                bad("host edge must be [p, q]");
            HostId p = e[0].get<HostId>(), q = e[1].get<HostId>();
            if (p >= q) bad("host edge [" + std::to_string(p) + ", " + std::to_string(q) + "] must have p < q");
            if (!d.host.has_vertex(p) || !d.host.has_vertex(q)) bad("host edge on an undeclared vertex");
            if (d.host.has_edge(make_edge(p, q))) bad("duplicate host edge");
            d.host.add_edge(p, q);
        }
    }
    if (!doc.contains("eta")) return d;
    const json& eta = doc["eta"];
    only_keys(eta, {"vertex", "edge", "triangle"}, "eta");
    if (eta.contains("vertex") && !eta["vertex"].is_object()) bad("eta.vertex is not an object");
    if (eta.contains("vertex"))
        for (const auto& [k, v] : eta["vertex"].items()) {
            HostId x = split_ids(k, 1)[0];
            if (!d.host.has_vertex(x)) bad("set on unknown host vertex " + k);
            d.vertex_sets[x] = read_set(v, "eta.vertex." + k);
        }
    if (eta.contains("edge")) {
        if (!eta["edge"].is_object()) bad("eta.edge is not an object");
        for (const auto& [k, v] : eta["edge"].items()) {
            auto ids = split_ids(k, 2);
            HostEdge e{ids[0], ids[1]};
            if (!d.host.has_edge(e)) bad("set on unknown host edge " + k);
            only_keys(v, {"all", "at_p", "at_q"}, "eta.edge." + k);
            EdgeSets s;
            if (v.contains("all")) s.all = read_set(v["all"], k + ".all");
            if (v.contains("at_p")) s.at_p = read_set(v["at_p"], k + ".at_p");
            if (v.contains("at_q")) s.at_q = read_set(v["at_q"], k + ".at_q");
            d.edge_sets[e] = std::move(s);
        }
    }
    if (eta.contains("triangle")) {
        if (!eta["triangle"].is_object()) bad("eta.triangle is not an object");
        for (const auto& [k, v] : eta["triangle"].items()) {
            auto ids = split_ids(k, 3);
            HostTriple t{ids[0], ids[1], ids[2]};
            if (!d.host.is_triangle(t)) bad("set on non-triangle " + k);
            d.triangle_sets[t] = read_set(v, "eta.triangle." + k);
        }
    }
    return d;
}

std::string render_outcome_report(const Outcome& out, const std::string& esd_file) {
    json doc;
    bool sttt = std::holds_alternative<StttCopy>(out.result);
    doc["branch"] = sttt ? "sttt" : "separator";
    if (sttt) {
        const auto& c = std::get<StttCopy>(out.result);
        doc["S"] = json::array();
        doc["copy"] = {{"center", c.center}, {"arms", {c.arms[0], c.arms[1], c.arms[2]}}, {"t", c.t}};
    } else {
        doc["S"] = std::get<SeparatorOutcome>(out.result).s;
        if (!esd_file.empty()) doc["esd_file"] = esd_file;
    }
    json checks = json::object();
    for (const auto& [name, ok] : out.checks) checks[name] = ok ? "pass" : "fail";
    doc["checks"] = checks;
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Syntax, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Syntax, "cannot write " + path);
    out << text;
}

}  // namespace sttt
