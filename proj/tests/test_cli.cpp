#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>

#include "cliquecol/colouring.hpp"
#include "cliquecol/generators.hpp"
#include "cliquecol/graph_io.hpp"
#include "json.hpp"

using namespace cliquecol;
namespace fs = std::filesystem;

namespace {

struct Run {
    int status;
    std::string out;
};

Run cli(const std::string& args)
{
    const std::string command = std::string(CLIQUECOL_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    while (const std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, got);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

struct TempDir {
    TempDir() : path(fs::temp_directory_path() / "cliquecol_test_cli") { fs::create_directories(path); }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
    fs::path path;
};

}  // namespace

TEST_CASE("gen")
{
    TempDir dir;
    CHECK(cli("gen gnp 50 0.1 --seed 7 -o " + dir / "g.txt").status == 0);
    const Graph g = read_graph_file(dir / "g.txt");
    CHECK(g.vertex_count() == 50);
    CHECK(g == gen_gnp(50, 0.1, 7));

    CHECK(cli("gen named cycle 5 -o " + dir / "c5.txt").status == 0);
    CHECK(read_graph_file(dir / "c5.txt") == cycle_graph(5));
    CHECK(cli("gen named petersen").out == serialize_edge_list(petersen_graph()));
    CHECK(cli("gen bipartite 3 4 1.0").out == serialize_edge_list(complete_bipartite_graph(3, 4)));

    CHECK(cli("gen gnp 10 1.5").status == 2);
    CHECK(cli("gen named wheel 5").status == 2);
    CHECK(cli("gen").status == 2);
    CHECK(cli("frobnicate").status == 2);
    CHECK(cli("--help").status == 0);
}

TEST_CASE("colour and verify")
{
    TempDir dir;
    write_text_file(dir / "c5.txt", serialize_edge_list(cycle_graph(5)));
    const Run run = cli("colour " + dir / "c5.txt" + " --mode theorem -o " + dir / "c5.col");
    REQUIRE(run.status == 0);
    const auto stats = nlohmann::json::parse(run.out);
    CHECK(stats["n"] == 5);
    CHECK(stats["mode"] == "theorem");
    CHECK(stats.contains("recolour_steps"));
    CHECK(verify_full(cycle_graph(5), parse_colouring(read_text_file(dir / "c5.col"))).ok);
    CHECK(cli("verify " + dir / "c5.txt " + dir / "c5.col").status == 0);

    write_text_file(dir / "k100.txt", serialize_edge_list(complete_graph(100)));
    REQUIRE(cli("color " + dir / "k100.txt --mode sqrt --seed 3 -o " + dir / "k100.col --stats " + dir / "s.json")
                .status == 0);
    const auto k100 = nlohmann::json::parse(read_text_file(dir / "s.json"));
    CHECK(k100["colours_used"] == 2);
    CHECK(k100["mode"] == "sqrt");

    CHECK(cli("colour " + dir / "missing.txt").status == 2);
    CHECK(cli("colour " + dir / "c5.txt --epsilon 0").status == 2);
    CHECK(cli("colour " + dir / "c5.txt --mode fast").status == 2);

    write_text_file(dir / "tri.txt", "3 3\n0 1\n1 2\n0 2\n");
    write_text_file(dir / "mono.col", "0 1\n1 1\n2 1\n");
    const Run fail = cli("verify " + dir / "tri.txt " + dir / "mono.col");
    CHECK(fail.status == 1);
    CHECK(fail.out.find("{0,1,2}") != std::string::npos);
    const Run fail_json = cli("verify " + dir / "tri.txt " + dir / "mono.col --json");
    CHECK(fail_json.status == 1);
    CHECK(nlohmann::json::parse(fail_json.out)["witness"] == nlohmann::json({0, 1, 2}));

    write_text_file(dir / "ok.col", "0 1\n1 1\n2 2\n");
    CHECK(cli("verify " + dir / "tri.txt " + dir / "ok.col").status == 0);

    write_text_file(dir / "k2.txt", "2 1\n0 1\n");
    CHECK(cli("verify " + dir / "k2.txt " + dir / "ok.col").status == 2);
    write_text_file(dir / "bad.col", "0 1\n0 2\n");
    CHECK(cli("verify " + dir / "k2.txt " + dir / "bad.col").status == 2);
}

TEST_CASE("colour output is byte-identical across runs")
{
    TempDir dir;
    write_text_file(dir / "g.txt", serialize_edge_list(gen_gnp(120, 0.03, 5)));
    for (const char* mode : {"theorem", "sqrt"}) {
        const std::string base = "colour " + dir / "g.txt" + " --seed 11 --mode " + mode;
        REQUIRE(cli(base + " -o " + dir / "a.col --stats " + dir / "a.json").status == 0);
        REQUIRE(cli(base + " -o " + dir / "b.col --stats " + dir / "b.json").status == 0);
        CHECK(read_text_file(dir / "a.col") == read_text_file(dir / "b.col"));
        CHECK(read_text_file(dir / "a.json") == read_text_file(dir / "b.json"));
    }
}

TEST_CASE("exact, divisible and peel")
{
    TempDir dir;
    write_text_file(dir / "p.txt", serialize_edge_list(petersen_graph()));
    const Run exact = cli("exact " + dir / "p.txt --json");
    REQUIRE(exact.status == 0);
    CHECK(nlohmann::json::parse(exact.out)["clique_chromatic"] == 3);
    CHECK(cli("exact " + dir / "p.txt --limit 5").status == 2);

    write_text_file(dir / "c5.txt", serialize_edge_list(cycle_graph(5)));
    CHECK(cli("divisible " + dir / "c5.txt 2").out.find("divisible=0") != std::string::npos);
    CHECK(cli("divisible " + dir / "c5.txt 3").out.find("divisible=1") != std::string::npos);

    write_text_file(dir / "k100.txt", serialize_edge_list(complete_graph(100)));
    const Run peel = cli("peel " + dir / "k100.txt --json");
    REQUIRE(peel.status == 0);
    const auto j = nlohmann::json::parse(peel.out);
    CHECK(j["k"] == 1);
    CHECK(j["class_sizes"] == nlohmann::json({99}));
    CHECK(cli("peel " + dir / "k100.txt").out.find("threshold") != std::string::npos);
}

TEST_CASE("bench")
{
    TempDir dir;
    const std::string args = "bench gnp --n 100,200 --p 0.2 --eps 1.0 --seeds 1..5 -o ";
    REQUIRE(cli(args + dir / "a.csv").status == 0);
    REQUIRE(cli(args + dir / "b.csv").status == 0);
    const std::string csv = read_text_file(dir / "a.csv");
    CHECK(csv == read_text_file(dir / "b.csv"));
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);

    CHECK(cli("bench gnp --n 10 --seeds \"\"").status == 2);
    CHECK(cli("bench gnp --n 10 --seeds 1 --mode nope").status == 2);
}
