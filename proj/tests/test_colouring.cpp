#include "doctest.h"

#include <cmath>

#include "cliquecol/colouring.hpp"
#include "cliquecol/generators.hpp"
#include "cliquecol/random.hpp"
#include "oracles.hpp"

using namespace cliquecol;

namespace {

Colour col(int c) { return Colour::of(c); }

Params manual(std::size_t q, double threshold)
{
    Params p;
    p.palette_size = q;
    p.list_threshold = threshold;
    return p;
}

Colouring random_partial(std::size_t n, std::size_t q, double blank_rate, Rng& rng)
{
    Colouring sigma(n);
    for (auto& c : sigma) {
        c = rng.bernoulli(blank_rate) ? Blank : col(static_cast<int>(1 + rng.uniform_index(q)));
    }
    return sigma;
}

ColourList from_snapshot(const oracles::FlawSnapshot& s, Vertex v)
{
    ColourList out{Blank};
    for (std::size_t c = 1; c < s.list[v].size(); ++c) {
        if (s.list[v][c]) out.push_back(col(static_cast<int>(c)));
    }
    return out;
}

}  // namespace

TEST_CASE("Colour")
{
    CHECK(Blank.is_blank());
    CHECK_FALSE(col(0).is_blank());
    CHECK(Blank < col(0));
    CHECK(col(1) < col(2));
    CHECK(colours_used({Blank, col(3), col(1), col(3)}) == 2);
    CHECK(to_string(Flaw{FlawKind::B, 3}) == "B_3");
    CHECK(to_string(Flaw{FlawKind::Z, 0}) == "Z_0");
    CHECK(Flaw{FlawKind::B, 9} < Flaw{FlawKind::Z, 0});
    CHECK(Flaw{FlawKind::Z, 1} < Flaw{FlawKind::Z, 2});
}

TEST_CASE("make_params")
{
    const Params big = make_params(1000, 0.5, 0);
    CHECK(big.palette_size == 217);
    CHECK(big.list_threshold == doctest::Approx(std::pow(1000.0, 0.25)));

    CHECK(make_params(256, 0.5, 0).list_threshold == 4.0);
    CHECK(make_params(2, 1.0, 0).palette_size == 2);
    CHECK(make_params(0, 1.0, 0).palette_size == 2);
    CHECK(make_params(3, 1.0, 9).seed == 9);
    CHECK_THROWS_AS(make_params(10, 0.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_params(10, -1.0, 0), std::invalid_argument);

    for (std::size_t delta = 3; delta < 2000; delta += 7) {
        for (double eps : {0.25, 0.5, 1.0, 2.0}) {
            const Params p = make_params(delta, eps, 0);
            const auto expected = static_cast<std::size_t>(std::floor((1 + eps) * delta / std::log(delta)));
            CHECK(p.palette_size == std::max<std::size_t>(expected, 2));
            CHECK(p.list_threshold == doctest::Approx(std::pow(delta, eps / 2)));
            CHECK(p.delta == delta);
        }
    }

    const Params moved = with_delta(make_params(1000, 0.5, 4), 256);
    CHECK(moved.list_threshold == 4.0);
    CHECK(moved.seed == 4);
}

TEST_CASE("available_list")
{
    const Graph tri = complete_graph(3);
    const Params q3 = manual(3, 1);
    CHECK(available_list(tri, all_blank(3), q3, 1) == ColourList{Blank, col(1), col(2), col(3)});
    CHECK(available_list(tri, {Blank, col(2), Blank}, q3, 0) == ColourList{Blank, col(1), col(3)});

    const Graph star = star_graph(4);
    const Colouring leaves{Blank, col(1), col(2), col(3), col(4)};
    CHECK(available_list(star, leaves, manual(4, 1), 0) == ColourList{Blank});
}

TEST_CASE("blank_support")
{
    const Graph tri = complete_graph(3);
    CHECK(blank_support(tri, all_blank(3), manual(2, 1), 0, col(1)) == VertexSet{1, 2});
    CHECK(blank_support(tri, all_blank(3), manual(2, 1), 0, Blank).empty());
    // vertex 1 is coloured; vertex 2 sees colour 1 on vertex 1, so 1 is not in L_2
    CHECK(blank_support(tri, {Blank, col(1), Blank}, manual(2, 1), 0, col(1)).empty());
    // on the path 0-1-2 vertex 2 does not see the colour on vertex 0
    CHECK(blank_support(path_graph(3), {col(1), Blank, Blank}, manual(2, 1), 1, col(1)) == VertexSet{2});
    CHECK(blank_support(star_graph(2), {Blank, col(1), Blank}, manual(2, 1), 0, col(2)) == VertexSet{2});
}

TEST_CASE("ignoring_list")
{
    const Graph tri = complete_graph(3);
    const Params q3 = manual(3, 1);
    CHECK(ignoring_list(tri, {col(1), Blank, col(2)}, q3, 0, 1) == ColourList{Blank, col(2), col(3)});
    CHECK(ignoring_list(tri, all_blank(3), q3, 0, 2) == ColourList{Blank, col(1), col(2), col(3)});
    CHECK_THROWS_AS(ignoring_list(path_graph(3), all_blank(3), q3, 0, 2), std::invalid_argument);
}

TEST_CASE("list properties on random inputs")
{
    Rng rng(5);
    for (int round = 0; round < 200; ++round) {
        const bool tf = round % 2 == 0;
        const Graph g = tf ? gen_bipartite_gnp(8, 9, 0.4, round) : gen_gnp(16, 0.35, round);
        const std::size_t q = 2 + rng.uniform_index(5);
        const Params p = manual(q, 1.0 + rng.unit() * 4);
        const Colouring sigma = random_partial(g.vertex_count(), q, 0.5, rng);
        const auto snap = oracles::snapshot(g, sigma, q, p.list_threshold);

        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            const ColourList lv = available_list(g, sigma, p, v);
            REQUIRE(lv == from_snapshot(snap, v));
            REQUIRE(lv.front() == Blank);
            REQUIRE(blank_mass(g, sigma, p, v) == snap.mass[v]);
            REQUIRE(blank_support(g, sigma, p, v, Blank).empty());

            std::size_t sum = 0;
            for (Colour c : lv) sum += blank_support(g, sigma, p, v, c).size();
            REQUIRE(sum == snap.mass[v]);

            for (Vertex u : g.neighbours(v)) {
                const ColourList lu = available_list(g, sigma, p, u);
                const ColourList ignoring = ignoring_list(g, sigma, p, v, u);
                REQUIRE(std::includes(ignoring.begin(), ignoring.end(), lu.begin(), lu.end()));
                if (tf) REQUIRE(ignoring == lu);
            }
        }

        std::set<std::pair<int, Vertex>> found;
        for (const Flaw& f : find_flaws(g, sigma, p)) found.insert({f.kind == FlawKind::B ? 0 : 1, f.vertex});
        REQUIRE(found == snap.flaws);
    }
}

TEST_CASE("flaw_holds")
{
    const Params p = manual(10, 4);
    const Graph isolated = build_graph(1, {});
    CHECK_FALSE(flaw_holds(isolated, all_blank(1), p, {FlawKind::B, 0}));
    CHECK_FALSE(flaw_holds(isolated, all_blank(1), p, {FlawKind::Z, 0}));

    const Graph star = star_graph(20);
    CHECK(blank_mass(star, all_blank(21), p, 0) == 200);
    CHECK(flaw_holds(star, all_blank(21), p, {FlawKind::Z, 0}));
    CHECK_FALSE(flaw_holds(star, all_blank(21), p, {FlawKind::B, 0}));

    const Graph small_star = star_graph(3);
    const Colouring exhausted{Blank, col(1), col(2), col(3)};
    CHECK(flaw_holds(small_star, exhausted, manual(3, 1.5), {FlawKind::B, 0}));
    CHECK_FALSE(flaw_holds(small_star, exhausted, manual(3, 1.0), {FlawKind::B, 0}));
}

TEST_CASE("find_flaws")
{
    const Graph star = star_graph(50);
    const auto flaws = find_flaws(star, all_blank(51), manual(5, 3));
    CHECK(std::find(flaws.begin(), flaws.end(), Flaw{FlawKind::Z, 0}) != flaws.end());
    CHECK(std::is_sorted(flaws.begin(), flaws.end()));

    CHECK(find_flaws(build_graph(5, {}), all_blank(5), manual(5, 3)).empty());

    SUBCASE("scoped scan is the radius-filtered global scan")
    {
        Rng rng(8);
        for (int round = 0; round < 30; ++round) {
            const Graph g = gen_gnp(40, 0.06, 100 + round);
            const Params p = manual(3, 2.0);
            const Colouring sigma = random_partial(40, 3, 0.6, rng);
            const auto global = find_flaws(g, sigma, p);
            for (Vertex center = 0; center < 40; center += 5) {
                std::vector<Flaw> expected;
                const auto b_ball = oracles::closure(g, center, 2);
                const auto z_ball = oracles::closure(g, center, 3);
                for (const Flaw& f : global) {
                    const auto& ball = f.kind == FlawKind::B ? b_ball : z_ball;
                    if (std::binary_search(ball.begin(), ball.end(), f.vertex)) expected.push_back(f);
                }
                REQUIRE(find_flaws(g, sigma, p, FlawScope{center}) == expected);
            }
        }
    }
}

TEST_CASE("verify_partial and verify_full fixtures")
{
    const Graph tri = complete_graph(3);
    CHECK(verify_partial(tri, all_blank(3)).ok);

    const auto mono = verify_partial(tri, {col(1), col(1), col(1)});
    CHECK_FALSE(mono.ok);
    CHECK(mono.violation == Violation::monochromatic_clique);
    CHECK(mono.witness == VertexSet{0, 1, 2});

    CHECK(verify_partial(tri, {col(1), col(1), Blank}).ok);

    const auto k2 = verify_full(complete_graph(2), {col(1), col(2)});
    CHECK(k2.ok);
    CHECK(k2.colours_used == 2);

    CHECK(verify_full(cycle_graph(5), {col(1), col(2), col(1), col(2), col(3)}).ok);
    CHECK_FALSE(verify_full(path_graph(4), Colouring(4, col(1))).ok);

    const auto blank = verify_full(tri, {col(1), Blank, col(2)});
    CHECK(blank.violation == Violation::blank_vertex);
    CHECK(blank.witness == VertexSet{1});

    CHECK(verify_full(tri, {col(1)}).violation == Violation::size_mismatch);
    CHECK(verify_partial(tri, {col(1)}).violation == Violation::size_mismatch);

    // {0,1} extends to the triangle, so colouring it alike is fine
    CHECK(verify_full(tri, {col(1), col(1), col(2)}).ok);
    CHECK(verify_full(build_graph(3, {}), {col(1), col(1), col(1)}).ok);
}

TEST_CASE("verifiers agree with the subset-enumeration verifier")
{
    Rng rng(21);
    for (std::size_t n = 1; n <= 5; ++n) {
        oracles::for_each_labelled_graph(n, [&](const Graph& g) {
            for (int k = 0; k < 4; ++k) {
                const Colouring sigma = random_partial(n, 2, k == 0 ? 0.0 : 0.3, rng);
                const auto partial = verify_partial(g, sigma);
                const auto full = verify_full(g, sigma);
                REQUIRE(partial.ok == oracles::naive_partial_ok(g, sigma));
                REQUIRE(full.ok == oracles::naive_full_ok(g, sigma));
                if (full.ok) REQUIRE(partial.ok);
            }
        });
    }
    for (int round = 0; round < 3000; ++round) {
        const std::size_t n = 6 + rng.uniform_index(3);
        const Graph g = gen_gnp(n, 0.2 + 0.7 * rng.unit(), round);
        const Colouring sigma = random_partial(n, 2 + rng.uniform_index(2), round % 3 == 0 ? 0.0 : 0.25, rng);
        const auto partial = verify_partial(g, sigma);
        const auto full = verify_full(g, sigma);
        REQUIRE(partial.ok == oracles::naive_partial_ok(g, sigma));
        REQUIRE(full.ok == oracles::naive_full_ok(g, sigma));
        if (full.ok) REQUIRE(partial.ok);
        if (partial.violation == Violation::monochromatic_clique) {
            const auto cliques = oracles::naive_maximal_cliques(g);
            REQUIRE(std::find(cliques.begin(), cliques.end(), partial.witness) != cliques.end());
        }
    }
}
