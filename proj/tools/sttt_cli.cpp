#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sttt/decomposer.hpp"
#include "sttt/gyarfas.hpp"
#include "sttt/harness.hpp"
#include "sttt/io.hpp"

using namespace sttt;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kUsage = 1, kInconclusive = 2, kCertification = 3;

json copy_json(const StttCopy& c) {
    return {{"center", c.center}, {"arms", {c.arms[0], c.arms[1], c.arms[2]}}, {"t", c.t}};
}

int run_decompose(int t, const std::string& input, const std::string& cert_file, std::size_t budget,
                  const std::string& out_path) {
    Graph g = parse_graph(read_file(input));
    TiatConfig config;
    config.tree_budget = budget;
    if (!cert_file.empty()) config.certificate = parse_line_graph_cert(read_file(cert_file));
    Outcome out = decompose(g, t, config);
    std::string esd_file;
    if (auto* sep = std::get_if<SeparatorOutcome>(&out.result)) {
        esd_file = out_path + ".esd.json";
        write_file(esd_file, render_esd(sep->esd));
    }
    std::string report = render_outcome_report(out, esd_file);
    write_file(out_path, report);
    std::cout << report << "\n";
    for (const auto& [name, ok] : out.checks)
        if (!ok) return kCertification;
    return kOk;
}

int run_validate(const std::string& graph_file, const std::string& esd_file, const std::string& report_file) {
    Graph g = parse_graph(read_file(graph_file));
    Esd d = parse_esd(read_file(esd_file));
    // a decompose report: the decomposition covers G - N[S] in G ids
    if (!report_file.empty()) {
        json report = json::parse(read_file(report_file));
        VertexSet s = normalized(report.at("S").get<VertexSet>());
        for (Vertex v : s)
            if (v >= g.size()) throw Error(ErrorKind::OutOfRange, "S names vertex " + std::to_string(v));
        Subgraph rest = induced_subgraph(g, set_difference(g.all_vertices(), closed_neighborhood(g, s)));
        d = lower_esd(d, rest);
        g = rest.graph;
    }
    auto report = validate_esd(g, d);
    auto rigid = is_rigid(d);
    json out{{"valid", report.ok()}, {"rigid", rigid.ok()}, {"violations", json::array()}};
    for (const auto* r : {&report, &rigid})
        for (const auto& v : r->violations)
            out["violations"].push_back({{"rule", to_string(v.rule)},
                                         {"vertices", v.vertices},
                                         {"host", v.host},
                                         {"message", v.message}});
    if (report.ok()) out["max_particle_weight"] = max_particle_weight(g, d);
    std::cout << out.dump(2) << "\n";
    return report.ok() ? kOk : kCertification;
}

int run_gyarfas(const std::string& input) {
    Graph g = parse_graph(read_file(input));
    auto res = gyarfas_path(g);
    json steps = json::array();
    for (const auto& s : res.trace) steps.push_back({{"extension", s.extension}, {"big_component", s.big_component}});
    std::cout << json{{"path", res.path}, {"trace", steps}}.dump(2) << "\n";
    return kOk;
}

int run_find_sttt(int t, const std::string& input, std::size_t budget) {
    Graph g = parse_graph(read_file(input));
    auto res = find_sttt_exhaustive(g, t, budget);
    if (auto* c = std::get_if<StttCopy>(&res)) {
        std::cout << json{{"result", "found"}, {"copy", copy_json(*c)}}.dump(2) << "\n";
        return kOk;
    }
    if (std::holds_alternative<NoneProven>(res)) {
        std::cout << json{{"result", "none"}}.dump(2) << "\n";
        return kOk;
    }
    std::cout << json{{"result", "budget-exceeded"}}.dump(2) << "\n";
    return kInconclusive;
}

int run_generate(const GenParams& p, const std::string& prefix) {
    PlantedInstance inst = generate(p);
    write_file(prefix + ".graph", render_graph(inst.graph));
    std::vector<std::string> written{prefix + ".graph"};
    if (inst.esd) {
        write_file(prefix + ".esd.json", render_esd(*inst.esd));
        written.push_back(prefix + ".esd.json");
    }
    if (inst.cert) {
        write_file(prefix + ".cert", render_line_graph_cert(*inst.cert));
        written.push_back(prefix + ".cert");
    }
    if (inst.copy) {
        write_file(prefix + ".sttt.json", copy_json(*inst.copy).dump(2) + "\n");
        written.push_back(prefix + ".sttt.json");
    }
    for (const auto& f : written) std::cout << f << "\n";
    return kOk;
}

int run_selftest(const std::string& suite) {
    std::vector<std::string> which;
    if (suite == "all")
        which = suite_names();
    else
        which = {suite};
    bool ok = true;
    for (const auto& s : which) {
        SuiteResult r = run_suite(s);
        std::cout << format_result(r) << std::endl;
        ok = ok && r.pass;
    }
    return ok ? kOk : kCertification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"S_{t,t,t}-free decomposition toolkit"};
    app.require_subcommand(1);

    int t = 1;
    std::string input, cert_file, out_path, graph_file, esd_file, report_file, suite = "all", prefix, family;
    std::size_t tree_budget = 64, budget = 1000000;

    auto* dec = app.add_subcommand("decompose", "Separator or induced S_{t,t,t}");
    dec->add_option("--t", t)->required()->check(CLI::PositiveNumber);
    dec->add_option("--input", input)->required();
    dec->add_option("--linegraph-cert", cert_file);
    dec->add_option("--tree-budget", tree_budget);
    dec->add_option("--out", out_path)->required();

    auto* val = app.add_subcommand("validate-esd", "Check a decomposition against a graph");
    val->add_option("--graph", graph_file)->required();
    val->add_option("--esd", esd_file)->required();
    val->add_option("--report", report_file, "decompose report; validate against G - N[S]");

    auto* gy = app.add_subcommand("gyarfas", "Minimal balanced induced path");
    gy->add_option("--input", input)->required();

    auto* fs = app.add_subcommand("find-sttt", "Exhaustive induced S_{t,t,t} search");
    fs->add_option("--t", t)->required()->check(CLI::PositiveNumber);
    fs->add_option("--input", input)->required();
    fs->add_option("--budget", budget);

    GenParams p;
    auto* gen = app.add_subcommand("generate", "Write a reproducible instance");
    gen->add_option("--family", family)->required();
    gen->add_option("--seed", p.seed)->required();
    gen->add_option("--n", p.n);
    gen->add_option("--host-n", p.host_n);
    gen->add_option("--density", p.density);
    gen->add_option("--t", p.t);
    gen->add_option("--wmin", p.wmin);
    gen->add_option("--wmax", p.wmax);
    gen->add_option("--root", p.root);
    gen->add_flag("--backbone", p.backbone);
    gen->add_flag("--degrade", p.degrade);
    gen->add_option("--out-prefix", prefix)->required();

    auto* self = app.add_subcommand("selftest", "Run acceptance suites");
    self->add_option("--suite", suite, "name, number or 'all'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*dec) return run_decompose(t, input, cert_file, tree_budget, out_path);
        if (*val) return run_validate(graph_file, esd_file, report_file);
        if (*gy) return run_gyarfas(input);
        if (*fs) return run_find_sttt(t, input, budget);
        if (*gen) {
            p.family = parse_family(family);
            return run_generate(p, prefix);
        }
        if (*self) return run_selftest(suite);
    } catch (const json::exception& e) {
        std::cerr << "json: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::Inconclusive: return kInconclusive;
            case ErrorKind::CertificationFailed:
            case ErrorKind::AssertionFailed: return kCertification;
            default: return kUsage;
        }
    }
    return kUsage;
}
