#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qturan/chromatic.hpp"
#include "qturan/families.hpp"
#include "qturan/search.hpp"

using namespace qturan;

TEST_CASE("chromatic numbers of named graphs")
{
    CHECK(chromatic_number(wheel(1, 5)) == 4);
    CHECK(chromatic_number(wheel(2, 4)) == 4);
    CHECK(chromatic_number(wheel(1, 4)) == 3);
    CHECK(chromatic_number(petersen_graph()) == 3);
    CHECK(chromatic_number(turan(11, 4)) == 4);
    CHECK(chromatic_number(cycle_graph(9)) == 3);
    CHECK(chromatic_number(empty_graph(4)) == 1);
    CHECK(chromatic_number(Graph(0)) == 0);
    CHECK(is_r_partite(turan(9, 3), 3));
    CHECK_FALSE(is_r_partite(turan(9, 3), 2));
}

TEST_CASE("colourings are proper")
{
    const Graph g = petersen_graph();
    const auto c = find_coloring(g, 3);
    REQUIRE(c);
    for (const Edge& e : g.edges())
        CHECK((*c)[e.first] != (*c)[e.second]);
    CHECK_FALSE(find_coloring(g, 2));
}

TEST_CASE("chromatic number agrees with brute force up to order 7")
{
    for (std::size_t n = 1; n <= 7; ++n)
        for (const Graph& g : *enumerate_graphs(n))
            REQUIRE(chromatic_number(g) == oracle::brute_force_chromatic(g));
}

TEST_CASE("colour-critical graphs")
{
    CHECK(is_color_critical(complete_graph(4)).critical);
    CHECK(is_color_critical(cycle_graph(5)).critical);
    CHECK(is_color_critical(generalized_book(3, 2)).critical);
    CHECK_FALSE(is_color_critical(cycle_graph(6)).critical);
    CHECK_FALSE(is_color_critical(petersen_graph()).critical);
    CHECK_THROWS_AS(is_color_critical(empty_graph(3)), InputError);

    const auto w = is_color_critical(wheel(1, 5));
    REQUIRE(w.critical);
    REQUIRE(w.witness);
    CHECK(w.witness->chi_before == 4);
    CHECK(w.witness->chi_after == 3);
}

TEST_CASE("k-critical examples")
{
    CHECK(is_color_k_critical(disjoint_cliques(2, 3), 2).critical);
    CHECK(is_color_k_critical(complete_graph(4), 1).critical);
    CHECK_FALSE(is_color_k_critical(complete_bipartite(3, 3), 1).critical);
}

TEST_CASE("induced matchings")
{
    auto brute = [](const Graph& g, std::size_t k) {
        const auto edges = g.edges();
        std::size_t count = 0;
        const std::size_t m = edges.size();
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
            if (static_cast<std::size_t>(__builtin_popcountll(s)) != k)
                continue;
            std::vector<Vertex> used;
            for (std::size_t i = 0; i < m; ++i)
                if ((s >> i) & 1U) {
                    used.push_back(edges[i].first);
                    used.push_back(edges[i].second);
                }
            bool ok = true;
            for (std::size_t i = 0; i < used.size() && ok; ++i)
                for (std::size_t j = i + 1; j < used.size() && ok; ++j) {
                    if (used[i] == used[j])
                        ok = false;
                    // Endpoints of the same edge sit at 2t, 2t+1.
                    else if (i / 2 != j / 2 && g.adjacent(used[i], used[j]))
                        ok = false;
                }
            count += ok;
        }
        return count;
    };
    CHECK(enumerate_induced_matchings(cycle_graph(6), 2).size() == brute(cycle_graph(6), 2));
    CHECK(enumerate_induced_matchings(cycle_graph(6), 2).size() == 3);
    CHECK(enumerate_induced_matchings(complete_graph(4), 2).empty());
    CHECK(enumerate_induced_matchings(disjoint_cliques(2, 2), 2).size() == 1);
    for (const Graph& g : {petersen_graph(), cycle_graph(9), kst_plus(3, 3)})
        for (std::size_t k = 1; k <= 3; ++k)
            CHECK(enumerate_induced_matchings(g, k).size() == brute(g, k));
}

TEST_CASE("petersen k-criticality agrees with a brute-force check")
{
    const Graph p = petersen_graph();
    const std::size_t chi = oracle::brute_force_chromatic(p);
    REQUIRE(chi == 3);
    for (std::size_t k = 1; k <= 5; ++k) {
        bool lowers = false;
        for (const auto& m : enumerate_induced_matchings(p, k)) {
            const Graph h = delete_edges(p, m);
            lowers = lowers || oracle::brute_force_colorable(h, chi - 1);
        }
        bool stable = true;
        // Every (k-1)-subset of vertices.
        for (std::uint32_t s = 0; s < (1U << 10); ++s) {
            if (static_cast<std::size_t>(__builtin_popcount(s)) != k - 1)
                continue;
            std::vector<Vertex> drop;
            for (Vertex v = 0; v < 10; ++v)
                if ((s >> v) & 1U)
                    drop.push_back(v);
            stable = stable && !oracle::brute_force_colorable(delete_vertices(p, drop), chi - 1);
        }
        INFO("k = " << k);
        CHECK(is_color_k_critical(p, k).critical == (lowers && stable));
        CHECK(is_color_k_critical(p, k).critical == (k == 3));
    }
}
