#include "doctest.h"

#include "cliquecol/generators.hpp"
#include "cliquecol/oracle.hpp"
#include "cliquecol/random.hpp"
#include "oracles.hpp"

using namespace cliquecol;

namespace {

// k-colouring by brute force with no monochromatic maximum clique.
bool naive_divisible(const Graph& g, std::size_t k)
{
    const std::size_t omega = oracles::naive_omega(g);
    if (omega < 2) return true;
    std::vector<VertexSet> maximum;
    for (const auto& c : oracles::naive_maximal_cliques(g)) {
        if (c.size() == omega) maximum.push_back(c);
    }
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> col(n, 0);
    for (;;) {
        bool ok = true;
        for (const auto& c : maximum) {
            if (std::all_of(c.begin(), c.end(), [&](Vertex v) { return col[v] == col[c.front()]; })) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
        std::size_t i = 0;
        while (i < n && ++col[i] == k) col[i++] = 0;
        if (i == n) return false;
    }
}

void check_witness(const Graph& g, const OracleReport& r)
{
    REQUIRE(r.colouring.has_value());
    const auto report = verify_full(g, *r.colouring);
    REQUIRE(report.ok);
    REQUIRE(static_cast<std::int64_t>(report.colours_used) == r.value);
}

}  // namespace

TEST_CASE("exact_clique_chromatic fixtures")
{
    for (std::size_t n = 2; n <= 9; ++n) CHECK(exact_clique_chromatic(complete_graph(n)).value == 2);
    CHECK(exact_clique_chromatic(cycle_graph(5)).value == 3);
    CHECK(exact_clique_chromatic(path_graph(3)).value == 2);
    CHECK(exact_clique_chromatic(complete_bipartite_graph(3, 3)).value == 2);
    CHECK(exact_clique_chromatic(petersen_graph()).value == 3);
    CHECK(exact_clique_chromatic(build_graph(4, {})).value == 1);
    CHECK(exact_clique_chromatic(build_graph(1, {})).value == 1);
    CHECK(exact_clique_chromatic(build_graph(0, {})).value == 0);
    check_witness(petersen_graph(), exact_clique_chromatic(petersen_graph()));
    check_witness(cycle_graph(7), exact_clique_chromatic(cycle_graph(7)));

    CHECK_THROWS_AS(exact_clique_chromatic(cycle_graph(13)), OracleRefusal);
    CHECK(exact_clique_chromatic(cycle_graph(13), 13).value == 3);
    CHECK_THROWS_AS(exact_chromatic_number(cycle_graph(13)), OracleRefusal);
    CHECK_THROWS_AS(is_k_divisible(cycle_graph(13), 2), OracleRefusal);
}

TEST_CASE("searched counts are reproducible")
{
    const auto a = exact_clique_chromatic(petersen_graph());
    const auto b = exact_clique_chromatic(petersen_graph());
    CHECK(a.searched == b.searched);
    CHECK(a.searched > 0);
    CHECK(a.colouring == b.colouring);
}

TEST_CASE("exact searches agree with assignment enumeration")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        oracles::for_each_labelled_graph(n, [](const Graph& g) {
            const auto cc = exact_clique_chromatic(g);
            REQUIRE(cc.value == static_cast<std::int64_t>(oracles::naive_clique_chromatic(g)));
            check_witness(g, cc);
            REQUIRE(exact_chromatic_number(g).value == static_cast<std::int64_t>(oracles::naive_chromatic(g)));
        });
    }
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const Graph g = gen_gnp(7, 0.2 + 0.01 * seed, seed);
        REQUIRE(exact_clique_chromatic(g).value == static_cast<std::int64_t>(oracles::naive_clique_chromatic(g)));
        REQUIRE(exact_chromatic_number(g).value == static_cast<std::int64_t>(oracles::naive_chromatic(g)));
    }
}

TEST_CASE("triangle-free graphs: clique chromatic equals chromatic")
{
    std::size_t seen = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        oracles::for_each_labelled_graph(n, [&](const Graph& g) {
            if (!is_triangle_free(g)) return;
            ++seen;
            REQUIRE(exact_clique_chromatic(g).value == exact_chromatic_number(g).value);
        });
    }
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = gen_bipartite_gnp(5, 6, 0.4, seed);
        CHECK(exact_clique_chromatic(g).value == exact_chromatic_number(g).value);
    }
    CHECK(exact_chromatic_number(petersen_graph()).value == 3);
    CHECK(seen > 1000);
}

TEST_CASE("greedy_clique_colouring")
{
    const auto k4 = greedy_clique_colouring(complete_graph(4));
    CHECK(verify_full(complete_graph(4), k4).colours_used == 4);
    const auto c5 = greedy_clique_colouring(cycle_graph(5));
    CHECK(c5 == Colouring{Colour::of(1), Colour::of(2), Colour::of(1), Colour::of(2), Colour::of(3)});
    CHECK(verify_full(build_graph(5, {}), greedy_clique_colouring(build_graph(5, {}))).colours_used == 1);

    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const Graph g = gen_gnp(60, 0.02 * seed, seed);
        const auto c = greedy_clique_colouring(g);
        REQUIRE(verify_full(g, c).ok);
        for (const auto& [u, v] : g.edges()) REQUIRE(c[u] != c[v]);
    }
}

TEST_CASE("is_k_divisible fixtures")
{
    CHECK(is_k_divisible(cycle_graph(5), 2).value == 0);
    CHECK(is_k_divisible(cycle_graph(7), 2).value == 0);
    CHECK(is_k_divisible(cycle_graph(5), 3).value == 1);
    CHECK(is_k_divisible(complete_graph(3), 2).value == 1);
    CHECK(is_k_divisible(cycle_graph(6), 2).value == 1);
    CHECK(is_k_divisible(build_graph(4, {}), 2).value == 1);
    CHECK(is_k_divisible(petersen_graph(), 2).value == 0);
}

TEST_CASE("is_k_divisible agrees with brute force and is monotone in k")
{
    for (std::size_t n = 1; n <= 6; ++n) {
        oracles::for_each_labelled_graph(n, [](const Graph& g) {
            bool previous = false;
            for (std::size_t k = 1; k <= 3; ++k) {
                const auto r = is_k_divisible(g, k);
                const bool yes = r.value == 1;
                REQUIRE(yes == naive_divisible(g, k));
                if (previous) REQUIRE(yes);
                previous = yes;
                if (yes && clique_number(g) >= 2) {
                    REQUIRE(r.colouring.has_value());
                    for (const auto& c : maximal_cliques(g)) {
                        if (c.size() != clique_number(g)) continue;
                        const Colour first = (*r.colouring)[c.front()];
                        REQUIRE_FALSE(
                            std::all_of(c.begin(), c.end(), [&](Vertex v) { return (*r.colouring)[v] == first; }));
                    }
                }
            }
        });
    }
}
