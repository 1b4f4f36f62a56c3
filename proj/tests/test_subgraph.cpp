#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "qturan/families.hpp"
#include "qturan/search.hpp"
#include "qturan/subgraph.hpp"

using namespace qturan;

namespace {

bool valid_embedding(const Graph& host, const Graph& pattern, const Embedding& e)
{
    if (e.size() != pattern.order())
        return false;
    std::vector<Vertex> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (const Edge& edge : pattern.edges())
        if (!host.adjacent(e[edge.first], e[edge.second]))
            return false;
    return true;
}

} // namespace

TEST_CASE("clique search")
{
    CHECK(clique_number(turan(10, 4)) == 4);
    CHECK(clique_number(petersen_graph()) == 2);
    CHECK(clique_number(empty_graph(3)) == 1);
    CHECK(clique_number(Graph(0)) == 0);
    const auto c = find_clique(wheel(2, 5), 4);
    REQUIRE(c);
    CHECK(std::is_sorted(c->begin(), c->end()));
    CHECK_FALSE(find_clique(wheel(1, 6), 4));
}

TEST_CASE("named containment examples")
{
    CHECK(is_free(wheel(1, 6), complete_graph(4)));
    CHECK(contains_subgraph(complete_graph(5), wheel(1, 4)));
    CHECK(is_free(turan(9, 3), complete_graph(4)));
    CHECK(contains_subgraph(turan(9, 3), generalized_book(2, 3)));
}

TEST_CASE("split graphs avoid odd cycles of length 2k+1")
{
    for (std::size_t k = 1; k <= 4; ++k)
        for (std::size_t n = k + 1; n <= 12; ++n) {
            CHECK(is_free(split(n, k), cycle_graph(2 * k + 1)));
            if (k >= 2 && n >= 2 * k)
                CHECK(contains_subgraph(split(n, k), cycle_graph(2 * k)));
        }
}

TEST_CASE("embeddings are valid and agree with brute force")
{
    std::mt19937_64 rng(13);
    const std::vector<Graph> patterns = {cycle_graph(4), path_graph(4), complete_graph(3), star_graph(4),
                                         kst_plus(2, 2), cycle_graph(5)};
    for (std::size_t n = 4; n <= 7; ++n) {
        const std::size_t pairs = n * (n - 1) / 2;
        std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << pairs) - 1);
        for (int trial = 0; trial < 25; ++trial) {
            const Graph host = oracle::from_mask(n, mask(rng));
            for (const Graph& p : patterns) {
                const auto e = find_subgraph(host, p);
                CHECK(e.has_value() == oracle::brute_force_contains(host, p));
                if (e)
                    CHECK(valid_embedding(host, p, *e));
            }
        }
    }
}

TEST_CASE("clique number agrees with brute force up to order 7")
{
    for (std::size_t n = 1; n <= 7; ++n)
        for (const Graph& g : *enumerate_graphs(n))
            CHECK(clique_number(g) == oracle::brute_force_clique_number(g));
}
