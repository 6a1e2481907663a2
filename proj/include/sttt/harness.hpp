#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sttt/decomposer.hpp"
#include "sttt/esd.hpp"
#include "sttt/graph.hpp"
#include "sttt/tiat.hpp"

namespace sttt {

enum class Family { PlantedEsd, LineGraph, PlantedSttt, Random };
const char* to_string(Family f);
Family parse_family(const std::string& name);

struct GenParams {
    Family family = Family::Random;
    std::size_t n = 20;          // vertices; root vertices for line graphs
    std::size_t host_n = 4;      // core host vertices (planted-esd)
    double density = 0.1;
    int t = 1;                   // planted-sttt
    Weight wmin = 1;
    Weight wmax = 1;
    std::uint64_t seed = 1;
    bool backbone = false;       // planted-sttt: long path with a planted spider
    bool degrade = false;        // planted-esd: empty interfaces, populated triangles
    std::string root = "random"; // line-graph: random | tree | cycle
};

struct PlantedInstance {
    Graph graph;
    std::optional<Esd> esd;
    std::pair<Vertex, Vertex> peripheral{0, 0};
    std::optional<LineGraphCert> cert;
    std::optional<StttCopy> copy;
};

PlantedInstance generate(const GenParams& p);
PlantedInstance gen_planted_esd(const GenParams& p);
PlantedInstance gen_line_graph(const GenParams& p);
PlantedInstance gen_planted_sttt(const GenParams& p);
PlantedInstance gen_random(const GenParams& p);

/// True iff every component of G - N[S] satisfies 2 w <= W.
bool check_separator(const Graph& g, const VertexSet& s);

/// Brute-force checks that share no code with the library's validators.
namespace oracle {

struct Matrix {
    explicit Matrix(const Graph& g);
    std::size_t n;
    std::vector<char> adj;
    bool operator()(Vertex u, Vertex v) const { return adj[u * n + v] != 0; }
};

/// Components of G - N[S] via union-find; each sorted.
std::vector<VertexSet> components_after_removal(const Graph& g, const VertexSet& s);
bool check_separator(const Graph& g, const VertexSet& s);
bool is_induced_path(const Graph& g, const PathSeq& q);
bool esd_valid(const Graph& g, const Esd& d);
bool esd_rigid(const Esd& d);
/// Largest particle weight, computed from the definitions.
Weight max_particle_weight(const Graph& g, const Esd& d);
VertexSet peripheral(const Esd& d);
bool verify_sttt(const Graph& g, const StttCopy& c);
/// True iff the violation's witness exhibits the rule it names.
bool witness_holds(const Graph& g, const Esd& d, const Violation& v);

}  // namespace oracle

/// Induced u-v paths: all of them when `exhaustive`, else up to `samples`
/// found by randomized depth-first search.
std::vector<PathSeq> induced_paths(const Graph& g, Vertex u, Vertex v, bool exhaustive, std::size_t samples,
                                   std::uint64_t seed);

struct PathInvariantCounts {
    std::size_t paths = 0;
    std::size_t violations[4] = {0, 0, 0, 0};
};

/// Checks the four path invariants on one induced path between peripheral
/// vertices of `d`.
void check_path_invariants(const Graph& g, const Esd& d, const PathSeq& path, PathInvariantCounts& counts);

/// Hand-built instance for the big-particle branch with an untrusted
/// decomposition supplied through the oracle backend.
struct BigParticleFixture {
    std::string name;
    Graph graph;
    int t = 1;
    PathSeq q;
    Esd esd;                    // decomposition of G', in G ids
    std::size_t expected_x = 0;
    bool corrupt = false;       // violates the first claim
};

std::vector<BigParticleFixture> big_particle_fixtures();
/// Backend config answering with the fixture's decomposition.
TiatConfig fixture_config(const BigParticleFixture& f);

struct SuiteResult {
    int criterion = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double limit = 0;
};

std::vector<std::string> suite_names();
/// Runs one acceptance criterion by number (1-9) or name.
SuiteResult run_suite(const std::string& which);
std::string format_result(const SuiteResult& r);

}  // namespace sttt
