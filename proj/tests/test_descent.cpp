#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "qturan/descent.hpp"
#include "qturan/families.hpp"
#include "qturan/search.hpp"

using namespace qturan;
using Catch::Matchers::WithinAbs;

TEST_CASE("a turan graph exits on minimum degree at once")
{
    const DescentTrace t = descent_run(turan(12, 3), CriterionParams{});
    CHECK(t.stop_reason == StopReason::min_degree_exceeded);
    CHECK(t.deletions() == 0);
    REQUIRE(t.steps.size() == 1);
    CHECK_THAT(t.steps[0].q, WithinAbs(16.0, 1e-9));
    CHECK(t.steps[0].min_degree == 8);
    CHECK(t.steps[0].lemma32_slack >= -1e-9);
    CHECK_FALSE(t.steps[0].deleted);
}

TEST_CASE("a star is peeled leaf by leaf to the floor")
{
    DescentOptions opts;
    opts.keep_graphs = true;
    const DescentTrace t = descent_run(star_graph(10), CriterionParams{}, opts);
    CHECK(t.stop_reason == StopReason::order_floor);
    CHECK(t.deletions() == 9);
    REQUIRE(t.steps.size() == 10);
    CHECK(t.steps[0].min_entry_vertex == 1);
    CHECK(t.steps[0].original_vertex == 1);
    CHECK(t.steps[0].tie_set.size() == 9);
    CHECK(t.steps[1].original_vertex == 2);
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        CHECK(t.steps[i].order == 10 - i);
        CHECK(t.steps[i].lemma32_slack >= -1e-9);
        REQUIRE(t.steps[i].graph6);
    }
    CHECK(*t.steps.back().graph6 == "@");
}

TEST_CASE("optional stop when q falls below the reference")
{
    DescentOptions opts;
    opts.stop_below_reference = true;
    const DescentTrace t = descent_run(star_graph(10), CriterionParams{}, opts);
    CHECK(t.stop_reason == StopReason::q_dropped_below_reference);
    CHECK(t.deletions() == 0);

    opts.reference_q = [](std::size_t) { return 0.0; };
    const DescentTrace u = descent_run(star_graph(10), CriterionParams{}, opts);
    CHECK(u.stop_reason == StopReason::order_floor);
}

TEST_CASE("descent input validation")
{
    CriterionParams bad;
    bad.sigma = 0.01;
    CHECK_THROWS_AS(descent_run(turan(12, 3), bad), InputError);
    DescentOptions opts;
    opts.floor = 5;
    CHECK_THROWS_AS(descent_run(complete_graph(5), CriterionParams{}, opts), InputError);
    opts.floor = 0;
    CHECK_THROWS_AS(descent_run(complete_graph(5), CriterionParams{}, opts), InputError);
}

TEST_CASE("descent is deterministic and serialises")
{
    const Graph g = join(complete_graph(1), disjoint_union(cycle_graph(5), path_graph(4)));
    const auto a = to_json(descent_run(g, CriterionParams{}));
    const auto b = to_json(descent_run(g, CriterionParams{}));
    CHECK(a == b);
    CHECK(a.contains("stopReason"));
    CHECK(a["steps"].size() == a["deletions"].get<std::size_t>() + 1);
    for (const char* key : {"order", "q", "minEntry", "minEntryVertex", "tieSet", "lemma32Slack", "deleted"})
        CHECK(a["steps"][0].contains(key));
}

TEST_CASE("min-entry inequality against the oracle eigenvalue")
{
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const Graph& g : *enumerate_graphs(n)) {
            const double slack = lemma_min_check(g);
            CHECK(slack >= -1e-9);
        }
    }
    // Regular graphs: x = 1/sqrt(n), q = 2d, so the slack is d - (4d^2 - 4d^2 + nd)/n = 0.
    CHECK_THAT(lemma_min_check(petersen_graph()), WithinAbs(0.0, 1e-9));
    CHECK_THAT(lemma_min_check(complete_graph(6)), WithinAbs(0.0, 1e-9));
}

TEST_CASE("min-entry inequality on random larger graphs")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> order(8, 40);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = order(rng);
        const double p = unit(rng);
        GraphBuilder b(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (unit(rng) < p)
                    b.add_edge(u, v);
        CHECK(lemma_min_check(std::move(b).build()) >= -1e-9);
    }
}

TEST_CASE("turan reference q")
{
    CHECK_THAT(turan_reference_q(7, 3), WithinAbs(oracle::multipartite_q(oracle::balanced_parts(7, 3)), 1e-9));
}
