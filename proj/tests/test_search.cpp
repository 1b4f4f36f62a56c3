#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "qturan/canonical.hpp"
#include "qturan/families.hpp"
#include "qturan/graph6.hpp"
#include "qturan/search.hpp"

using namespace qturan;
using Catch::Matchers::WithinAbs;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& body)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path;
}

} // namespace

TEST_CASE("enumeration counts match the brute-force oracle")
{
    for (std::size_t n = 0; n <= 6; ++n)
        CHECK(enumerate_graphs(n)->size() == (n == 0 ? 1 : oracle::brute_force_class_count(n)));
    for (std::size_t n = 1; n <= 8; ++n)
        CHECK(enumerate_graphs(n)->size() == oracle::burnside_class_count(n));
    CHECK_THROWS_AS(enumerate_graphs(enumeration_max_order + 1), InputError);
}

TEST_CASE("enumerated graphs are canonical and pairwise distinct")
{
    const auto graphs = enumerate_graphs(7);
    std::set<std::string> seen;
    for (const Graph& g : *graphs) {
        CHECK(canonical_form(g) == g);
        seen.insert(to_graph6(g));
    }
    CHECK(seen.size() == graphs->size());
}

TEST_CASE("enumeration does not depend on the job count")
{
    // The cache is keyed by n only, so compare against a fresh labelled oracle.
    std::set<std::string> a;
    for (const Graph& g : *enumerate_graphs(6, 1))
        a.insert(canonical_graph6(g));
    std::set<std::string> b;
    for (std::uint64_t mask = 0; mask < (1U << 15); ++mask)
        b.insert(canonical_graph6(oracle::from_mask(6, mask)));
    CHECK(a == b);
}

TEST_CASE("extremal edges for cliques")
{
    const auto k3 = extremal_edges(5, complete_graph(3));
    CHECK(k3.ex_edges == 6);
    REQUIRE(k3.extremal_graphs.size() == 1);
    CHECK(is_isomorphic(parse_graph6(k3.extremal_graphs[0]), complete_bipartite(3, 2)));

    const auto k4 = extremal_edges(7, complete_graph(4));
    CHECK(k4.ex_edges == 16);
    REQUIRE(k4.extremal_graphs.size() == 1);
    CHECK(is_isomorphic(parse_graph6(k4.extremal_graphs[0]), turan(7, 3)));
    CHECK(k4.scanned == 1044);
}

TEST_CASE("extremal q")
{
    const auto k3 = extremal_q(8, complete_graph(3));
    CHECK_THAT(k3.max_q, WithinAbs(8.0, 1e-9));
    CHECK(k3.extremal_graphs.size() == 4);
    for (const auto& code : k3.extremal_graphs) {
        const Graph g = parse_graph6(code);
        bool bip = false;
        for (std::size_t a = 1; a <= 4; ++a)
            bip = bip || is_isomorphic(g, complete_bipartite(a, 8 - a));
        CHECK(bip);
    }
    const auto k4 = extremal_q(7, complete_graph(4));
    CHECK_THAT(k4.max_q, WithinAbs(9.274917217635373, 1e-9));
    REQUIRE(k4.extremal_graphs.size() == 1);
    CHECK(is_isomorphic(parse_graph6(k4.extremal_graphs[0]), turan(7, 3)));
}

TEST_CASE("search results do not depend on the job count")
{
    SearchOptions one;
    one.jobs = 1;
    SearchOptions four;
    four.jobs = 4;
    const auto a = extremal_q(7, wheel(1, 5), one);
    const auto b = extremal_q(7, wheel(1, 5), four);
    CHECK(a.max_q == b.max_q);
    CHECK(a.extremal_graphs == b.extremal_graphs);
    CHECK(extremal_edges(7, wheel(1, 5), one).extremal_graphs ==
          extremal_edges(7, wheel(1, 5), four).extremal_graphs);
}

TEST_CASE("density estimates")
{
    const auto d = turan_density_estimate(complete_graph(3), 8);
    CHECK(d.non_increasing);
    CHECK_THAT(d.limit_hint, WithinAbs(0.5, 1e-12));
    for (const auto& p : d.points)
        CHECK(p.ex == p.n * p.n / 4);
    CHECK_THAT(turan_density_estimate(wheel(1, 5), 7).limit_hint, WithinAbs(2.0 / 3.0, 1e-12));
}

TEST_CASE("corpus ingestion")
{
    const auto good = write_temp("qturan_good.g6", "Bw\n\nBW\n");
    const Corpus c = ingest_corpus(good);
    CHECK(c.graphs.size() == 2);
    CHECK(c.errors.empty());

    const auto bad = write_temp("qturan_bad.g6", "Bw\nB\nBW\n");
    const Corpus lenient = ingest_corpus(bad);
    CHECK(lenient.graphs.size() == 2);
    REQUIRE(lenient.errors.size() == 1);
    CHECK(lenient.errors[0].line == 2);
    CHECK_THROWS_WITH(ingest_corpus(bad, true), Catch::Matchers::ContainsSubstring(":2:"));
    CHECK_THROWS_AS(ingest_corpus("/nonexistent/qturan.g6"), InputError);
}

TEST_CASE("corpus replaces the built-in enumeration")
{
    std::string body;
    for (const Graph& g : *enumerate_graphs(5))
        body += to_graph6(g) + "\n";
    SearchOptions opts;
    opts.corpus = write_temp("qturan_five.g6", body);
    const auto r = extremal_edges(5, complete_graph(3), opts);
    CHECK(r.ex_edges == 6);
    CHECK(r.scanned == 34);
}

TEST_CASE("beyond the built-in cap without a corpus")
{
    ::unsetenv("QTURAN_CORPUS_DIR");
    CHECK_THROWS_AS(graphs_of_order(10, SearchOptions{}), InputError);
}

TEST_CASE("family membership tests")
{
    CHECK(in_family_L(join(complete_graph(1), cycle_graph(7)), 2, 3));
    CHECK_FALSE(in_family_L(turan(8, 2), 2, 3));
    CHECK(in_family_Y(join(empty_graph(2), cycle_graph(6)), 3));
}

TEST_CASE("kst exploration is report-only")
{
    const auto e = explore_kst_conjecture(7, 2, 2);
    CHECK(e.maxima.report_only);
    CHECK(e.maximiser_in_L.size() == e.maxima.extremal_graphs.size());
    const auto j = to_json(e);
    CHECK(j.contains("notes"));
}

TEST_CASE("minimum-degree families")
{
    const auto k4 = min_degree_family(7, complete_graph(4), 0.1);
    CHECK(k4.extra["turanInFamily"] == true);
    CHECK(k4.extra["turanAttainsMax"] == true);
    CHECK_THAT(k4.max_q, WithinAbs(9.274917217635373, 1e-9));

    const auto k3 = min_degree_family(6, complete_graph(3), 0.1);
    CHECK_THAT(k3.max_q, WithinAbs(6.0, 1e-9));
}
