#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qturan/canonical.hpp"
#include "qturan/families.hpp"
#include "qturan/subgraph.hpp"

using namespace qturan;

TEST_CASE("turan graphs: part sizes and exact edge counts")
{
    for (std::size_t n = 1; n <= 30; ++n) {
        for (std::size_t r = 1; r <= 6 && r <= n; ++r) {
            const auto parts = oracle::balanced_parts(n, r);
            CHECK(turan_edges(n, r) == oracle::multipartite_edges(parts));
            const Graph t = turan(n, r);
            CHECK(t.edge_count() == turan_edges(n, r));
            auto sizes = turan_part_sizes(n, r);
            CHECK(std::is_sorted(sizes.rbegin(), sizes.rend()));
            CHECK(sizes.front() - sizes.back() <= 1);
        }
    }
    CHECK(turan_edges(7, 3) == 16);
    CHECK(turan_edges(20, 3) == 133);
}

TEST_CASE("small named families")
{
    CHECK(star_graph(5).degree(0) == 4);
    CHECK(complete_bipartite(3, 4).edge_count() == 12);
    CHECK(split(6, 2).edge_count() == 1 + 2 * 4);
    CHECK(generalized_book(3, 2).edge_count() == 3 + 6);
    CHECK(wheel(1, 5).edge_count() == 10);
    CHECK(is_isomorphic(wheel(1, 3), complete_graph(4)));
    CHECK(disjoint_cliques(2, 3).edge_count() == 6);
}

TEST_CASE("petersen graph")
{
    const Graph p = petersen_graph();
    CHECK(p.order() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(is_regular(p));
    CHECK(p.degree(0) == 3);
    CHECK(triangle_count(p) == 0);
    CHECK(is_free(p, cycle_graph(4)));
}

TEST_CASE("kst_plus")
{
    const Graph k22 = kst_plus(2, 2);
    CHECK(k22.order() == 4);
    CHECK(k22.edge_count() == 5);
    CHECK(k22.adjacent(0, 1));
    CHECK(kst_plus(3, 3).edge_count() == 10);
}

TEST_CASE("h_graph")
{
    CHECK(h_graph(7, 2, 2).edge_count() == 15);
    CHECK(h_graph(8, 3, 2).edge_count() == 23);
    CHECK(is_isomorphic(h_graph(6, 3, 1), turan(6, 3)));
}

TEST_CASE("regular triangle-free constructions")
{
    auto built = [](std::size_t n, std::size_t d) {
        const Construction c = regular_triangle_free(n, d);
        REQUIRE(c.found());
        return *c.graph;
    };
    CHECK(is_isomorphic(built(5, 2), cycle_graph(5)));
    CHECK(is_isomorphic(built(6, 3), complete_bipartite(3, 3)));
    CHECK(is_isomorphic(built(7, 2), cycle_graph(7)));

    for (std::size_t n = 2; n <= 14; ++n) {
        for (std::size_t d = 1; d <= n / 2; ++d) {
            const Construction c = regular_triangle_free(n, d);
            if (!c.found())
                continue;
            const Graph& g = *c.graph;
            CHECK(g.order() == n);
            CHECK(triangle_count(g) == 0);
            std::size_t off = 0;
            for (Vertex v = 0; v < n; ++v)
                off += g.degree(v) != d;
            CHECK(off == ((n * d) % 2 == 1 ? 1u : 0u));
        }
    }

    const Construction too_dense = regular_triangle_free(5, 3);
    CHECK(too_dense.status == ConstructionStatus::infeasible);
    CHECK_FALSE(too_dense.reason.empty());
}

TEST_CASE("L and Y family samples")
{
    const Construction l1 = family_L_sample(8, 2, 3);
    REQUIRE(l1.found());
    CHECK(is_isomorphic(*l1.graph, join(complete_graph(1), cycle_graph(7))));
    const Construction l2 = family_L_sample(9, 3, 3);
    REQUIRE(l2.found());
    CHECK(is_isomorphic(*l2.graph, join(complete_graph(2), cycle_graph(7))));

    const Construction y = family_Y_sample(8, 3);
    REQUIRE(y.found());
    CHECK(is_isomorphic(*y.graph, join(empty_graph(2), cycle_graph(6))));
    CHECK(y.graph->order() == 8);
}

TEST_CASE("family spec parsing")
{
    const auto t = parse_family_spec("turan:7,3");
    REQUIRE(t);
    CHECK(t->kind == FamilyKind::turan);
    CHECK(to_string(*t) == "turan:7,3");
    CHECK(build_family(*t) == turan(7, 3));
    CHECK(build_family(parse_family_spec_or_throw("petersen")).edge_count() == 15);
    CHECK(build_family(parse_family_spec_or_throw("book:3,2")).edge_count() == 9);

    CHECK_FALSE(parse_family_spec("turan:7"));
    CHECK_FALSE(parse_family_spec("turan:7,x"));
    CHECK_FALSE(parse_family_spec("nonsense:1"));
    try {
        (void)parse_family_spec_or_throw("nonsense:1");
        FAIL("accepted");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("turan") != std::string::npos);
    }
    CHECK_THROWS_AS(build_family(parse_family_spec_or_throw("Y:5,4")), InputError);
}
