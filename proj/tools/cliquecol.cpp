// cliquecol: generate graphs, clique-colour them, verify colourings,
// compare against exact oracles, and run benchmark sweeps.
//
// Exit codes: 0 success / pass, 1 verification failure, 2 usage or input
// error, 3 internal invariant breach.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliquecol/bench.hpp"
#include "cliquecol/colouring.hpp"
#include "cliquecol/fix.hpp"
#include "cliquecol/generators.hpp"
#include "cliquecol/graph.hpp"
#include "cliquecol/graph_io.hpp"
#include "cliquecol/oracle.hpp"
#include "cliquecol/peel.hpp"

namespace fs = std::filesystem;
using namespace cliquecol;

namespace {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, invariant_breach = 3 };

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

std::string join(const VertexSet& vertices)
{
    std::string out = "{";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        out += (i ? "," : "") + std::to_string(vertices[i]);
    }
    return out + "}";
}

std::string describe(Violation violation)
{
    switch (violation) {
    case Violation::none: return "none";
    case Violation::blank_vertex: return "blank_vertex";
    case Violation::monochromatic_clique: return "monochromatic_clique";
    case Violation::size_mismatch: return "size_mismatch";
    }
    return "unknown";
}

struct GenOptions {
    std::size_t n = 0;
    double p = 0.0;
    std::size_t left = 0;
    std::size_t right = 0;
    std::string kind;
    std::vector<std::size_t> sizes;
    std::uint64_t seed = 0;
    std::string out;
};

struct ColourOptions {
    std::string graph;
    double epsilon = 1.0;
    std::uint64_t seed = 0;
    std::string mode = "theorem";
    std::string out;
    std::string stats;
    bool debug_checks = false;
};

int run_colour(const ColourOptions& o)
{
    const Graph g = read_graph_file(o.graph);
    Params params = make_params(max_degree(g), o.epsilon, o.seed);
    params.debug_checks = o.debug_checks;
    const Pipeline pipeline = parse_pipeline(o.mode);
    const ColourResult result = pipeline == Pipeline::theorem ? clique_colour(g, params) : colour_sqrt(g, params);

    const auto report = verify_full(g, result.colouring);
    if (!report.ok) {
        std::cerr << "internal error: produced colouring fails verification\n";
        return invariant_breach;
    }
    emit(serialize_colouring(result.colouring), o.out);

    auto stats = stats_to_json(result.stats);
    stats["mode"] = std::string(to_string(pipeline));
    stats["n"] = g.vertex_count();
    stats["delta"] = params.delta;
    stats["epsilon"] = params.epsilon;
    stats["q"] = params.palette_size;
    const std::string text = stats.dump(2) + "\n";
    if (!o.stats.empty()) {
        write_text_file(o.stats, text);
    } else if (!o.out.empty()) {
        std::cout << text;
    } else {
        std::cerr << text;
    }
    return ok;
}

int run_verify(const std::string& graph_path, const std::string& colouring_path, bool json)
{
    const Graph g = read_graph_file(graph_path);
    const Colouring colouring = parse_colouring(read_text_file(colouring_path));
    if (colouring.size() != g.vertex_count()) {
        std::cerr << "size mismatch: graph has " << g.vertex_count() << " vertices, colouring has "
                  << colouring.size() << "\n";
        return usage_error;
    }
    const auto report = verify_full(g, colouring);
    if (json) {
        std::cout << nlohmann::json{{"pass", report.ok},
                                    {"violation", describe(report.violation)},
                                    {"witness", report.witness},
                                    {"colours_used", report.colours_used}}
                         .dump(2)
                  << "\n";
    } else if (report.ok) {
        std::cout << "PASS colours_used=" << report.colours_used << "\n";
    } else {
        std::cout << "FAIL " << describe(report.violation) << " witness=" << join(report.witness) << "\n";
    }
    return report.ok ? ok : verification_failed;
}

void print_oracle(const std::string& name, const OracleReport& report, bool json)
{
    if (json) {
        nlohmann::json out{{name, report.value}, {"searched", report.searched}};
        if (report.colouring) {
            nlohmann::json colours = nlohmann::json::array();
            for (Colour c : *report.colouring) {
                colours.push_back(c.index());
            }
            out["witness"] = colours;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << name << "=" << report.value << " searched=" << report.searched << "\n";
        if (report.colouring) {
            std::cout << serialize_colouring(*report.colouring);
        }
    }
}

int run_peel(const std::string& graph_path, bool json)
{
    const Graph g = read_graph_file(graph_path);
    const auto decomposition = peel(g);
    if (json) {
        std::cout << peel_to_json(decomposition).dump(2) << "\n";
        return ok;
    }
    std::cout << "k                    " << decomposition.centers.size() << "\n"
              << "threshold            " << decomposition.threshold << "\n"
              << "residual_vertices    " << decomposition.residual.vertex_count() << "\n"
              << "residual_max_degree  " << max_degree(decomposition.residual) << "\n"
              << "center  class_size\n";
    for (std::size_t i = 0; i < decomposition.centers.size(); ++i) {
        std::cout << decomposition.centers[i] << "  " << decomposition.classes[i].size() << "\n";
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Clique colouring via randomized neighbourhood recolouring"};
    app.require_subcommand(1);

    // gen
    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph in edge-list format");
    gen_cmd->require_subcommand(1);
    auto* gen_gnp_cmd = gen_cmd->add_subcommand("gnp", "Erdos-Renyi G(n, p)");
    gen_gnp_cmd->add_option("n", gen.n, "vertex count")->required();
    gen_gnp_cmd->add_option("p", gen.p, "edge probability")->required();
    auto* gen_bip_cmd = gen_cmd->add_subcommand("bipartite", "random bipartite G(a, b, p)");
    gen_bip_cmd->add_option("a", gen.left, "left side size")->required();
    gen_bip_cmd->add_option("b", gen.right, "right side size")->required();
    gen_bip_cmd->add_option("p", gen.p, "edge probability")->required();
    auto* gen_named_cmd = gen_cmd->add_subcommand("named", "complete|cycle|path|star|petersen|complete_bipartite");
    gen_named_cmd->add_option("kind", gen.kind, "graph family")->required();
    gen_named_cmd->add_option("sizes", gen.sizes, "size parameters");
    for (auto* sub : {gen_gnp_cmd, gen_bip_cmd, gen_named_cmd}) {
        sub->add_option("--seed", gen.seed, "generator seed");
        sub->add_option("-o,--out", gen.out, "output path (stdout if omitted)");
    }

    // colour
    ColourOptions colour;
    auto* colour_cmd = app.add_subcommand("colour", "clique-colour a graph");
    colour_cmd->alias("color");
    colour_cmd->add_option("graph", colour.graph, "edge-list or .col file")->required();
    colour_cmd->add_option("-e,--epsilon", colour.epsilon, "epsilon > 0");
    colour_cmd->add_option("--seed", colour.seed, "random seed");
    colour_cmd->add_option("--mode", colour.mode, "theorem or sqrt");
    colour_cmd->add_option("-o,--out", colour.out, "colouring output path (stdout if omitted)");
    colour_cmd->add_option("--stats", colour.stats, "stats JSON path");
    colour_cmd->add_flag("--debug-checks", colour.debug_checks, "verify invariants after every step");

    // verify
    std::string verify_graph;
    std::string verify_colouring;
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "check a clique colouring");
    verify_cmd->add_option("graph", verify_graph)->required();
    verify_cmd->add_option("colouring", verify_colouring)->required();
    verify_cmd->add_flag("--json", verify_json);

    // exact
    std::string exact_graph;
    std::size_t limit = default_oracle_limit;
    bool oracle_json = false;
    auto* exact_cmd = app.add_subcommand("exact", "exact clique chromatic number (small graphs)");
    exact_cmd->add_option("graph", exact_graph)->required();
    exact_cmd->add_option("--limit", limit, "vertex limit for exhaustive search");
    exact_cmd->add_flag("--json", oracle_json);

    // divisible
    std::string divisible_graph;
    std::size_t divisible_k = 2;
    auto* divisible_cmd = app.add_subcommand("divisible", "k-divisibility by exhaustive search");
    divisible_cmd->add_option("graph", divisible_graph)->required();
    divisible_cmd->add_option("k", divisible_k)->required();
    divisible_cmd->add_option("--limit", limit, "vertex limit for exhaustive search");
    divisible_cmd->add_flag("--json", oracle_json);

    // peel
    std::string peel_graph;
    bool peel_json = false;
    auto* peel_cmd = app.add_subcommand("peel", "high-degree peeling decomposition");
    peel_cmd->add_option("graph", peel_graph)->required();
    peel_cmd->add_flag("--json", peel_json);

    // bench
    BenchSpec bench;
    std::string bench_sizes;
    std::string bench_probabilities = "0.1";
    std::string bench_epsilons = "1.0";
    std::string bench_seeds;
    std::string bench_mode = "theorem";
    std::string bench_out;
    auto* bench_cmd = app.add_subcommand("bench", "benchmark sweep to CSV");
    bench_cmd->add_option("family", bench.family, "gnp|bipartite|complete|cycle|path|star")->required();
    bench_cmd->add_option("--n", bench_sizes, "vertex counts, e.g. 100,200")->required();
    bench_cmd->add_option("--p", bench_probabilities, "edge probabilities");
    bench_cmd->add_option("--eps", bench_epsilons, "epsilons");
    bench_cmd->add_option("--seeds", bench_seeds, "seeds, e.g. 1..5")->required();
    bench_cmd->add_option("--mode", bench_mode, "theorem or sqrt");
    bench_cmd->add_option("-o,--out", bench_out, "CSV path (stdout if omitted)");
    bench_cmd->add_flag("--timing", bench.timing, "record wall_ms (otherwise 0)");
    bench_cmd->add_option("-j,--jobs", bench.jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage_error;
    }

    try {
        if (gen_cmd->parsed()) {
            Graph g;
            if (gen_gnp_cmd->parsed()) {
                g = gen_gnp(gen.n, gen.p, gen.seed);
            } else if (gen_bip_cmd->parsed()) {
                g = gen_bipartite_gnp(gen.left, gen.right, gen.p, gen.seed);
            } else {
                g = gen_named(parse_named_kind(gen.kind), gen.sizes);
            }
            emit(serialize_edge_list(g), gen.out);
            return ok;
        }
        if (colour_cmd->parsed()) {
            return run_colour(colour);
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify_graph, verify_colouring, verify_json);
        }
        if (exact_cmd->parsed()) {
            print_oracle("clique_chromatic", exact_clique_chromatic(read_graph_file(exact_graph), limit), oracle_json);
            return ok;
        }
        if (divisible_cmd->parsed()) {
            print_oracle("divisible", is_k_divisible(read_graph_file(divisible_graph), divisible_k, limit),
                         oracle_json);
            return ok;
        }
        if (peel_cmd->parsed()) {
            return run_peel(peel_graph, peel_json);
        }
        if (bench_cmd->parsed()) {
            for (auto n : parse_integer_list(bench_sizes)) {
                bench.sizes.push_back(static_cast<std::size_t>(n));
            }
            bench.probabilities = parse_real_list(bench_probabilities);
            bench.epsilons = parse_real_list(bench_epsilons);
            bench.seeds = parse_integer_list(bench_seeds);
            bench.pipeline = parse_pipeline(bench_mode);
            emit(bench_to_csv(run_bench(bench)), bench_out);
            return ok;
        }
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return invariant_breach;
    } catch (const RunFailure& e) {
        std::cerr << "engine failure: " << e.what() << "\n";
        return invariant_breach;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage_error;
    }
    return usage_error;
}
