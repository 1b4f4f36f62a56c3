#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "qturan/families.hpp"
#include "qturan/search.hpp"
#include "qturan/spectral.hpp"

using namespace qturan;
using Catch::Matchers::WithinAbs;

TEST_CASE("q of small families")
{
    CHECK_THAT(q_radius(complete_graph(5)).radius, WithinAbs(8.0, 1e-9));
    CHECK_THAT(q_radius(cycle_graph(7)).radius, WithinAbs(4.0, 1e-9));
    CHECK_THAT(q_radius(complete_bipartite(2, 5)).radius, WithinAbs(7.0, 1e-9));
    CHECK_THAT(q_radius(star_graph(6)).radius, WithinAbs(6.0, 1e-9));
    CHECK_THAT(q_radius(path_graph(4)).radius, WithinAbs(3.414213562373094, 1e-9));
    CHECK_THAT(adjacency_radius(path_graph(4)).radius, WithinAbs(1.618033988749893, 1e-9));
    CHECK(q_radius(empty_graph(4)).radius == 0.0);
    CHECK_THROWS_AS(q_radius(Graph(0)), InputError);
}

TEST_CASE("q of turan graphs against the quotient-matrix oracle")
{
    for (std::size_t n = 2; n <= 24; ++n) {
        for (std::size_t r = 2; r <= 5 && r <= n; ++r) {
            const double expected = oracle::multipartite_q(oracle::balanced_parts(n, r));
            CHECK_THAT(q_radius(turan(n, r)).radius, WithinAbs(expected, 1e-8));
        }
    }
    CHECK_THAT(q_radius(turan(7, 3)).radius, WithinAbs(9.274917217635373, 1e-9));
    CHECK_THAT(q_radius(turan(20, 3)).radius, WithinAbs(26.643650760992955, 1e-9));
    CHECK_THAT(q_radius(generalized_book(3, 2)).radius, WithinAbs(7.372281323269014, 1e-9));
}

TEST_CASE("eigenvector is unit, nonnegative and satisfies the eigen-equation")
{
    for (const Graph& g : {petersen_graph(), wheel(2, 7), kst_plus(3, 5), turan(15, 4)}) {
        const SpectralResult r = q_radius(g);
        double norm = 0.0;
        for (double x : r.vector) {
            CHECK(x >= 0.0);
            norm += x * x;
        }
        CHECK_THAT(norm, WithinAbs(1.0, 1e-9));
        CHECK(eigen_residual(g, r) <= 1e-8);
        CHECK_THAT(rayleigh_q(g, r.vector), WithinAbs(r.radius, 1e-8));
    }
}

TEST_CASE("power iteration and dense agree with the Jacobi oracle for n <= 7")
{
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const Graph& g : *enumerate_graphs(n)) {
            const double reference = oracle::q_index(g);
            CHECK_THAT(q_radius(g).radius, WithinAbs(reference, 1e-8));
            CHECK_THAT(q_radius_dense(g).radius, WithinAbs(reference, 1e-8));
            CHECK_THAT(adjacency_radius(g).radius, WithinAbs(oracle::lambda_index(g), 1e-8));
        }
    }
}

TEST_CASE("rayleigh quotient never exceeds q")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    const Graph g = wheel(1, 8);
    const double q = q_radius(g).radius;
    for (int i = 0; i < 100; ++i) {
        std::vector<double> x(g.order());
        double norm = 0.0;
        for (double& v : x) {
            v = coord(rng);
            norm += v * v;
        }
        for (double& v : x)
            v /= std::sqrt(norm);
        CHECK(rayleigh_q(g, x) <= q + 1e-9);
    }
}

TEST_CASE("deleting a vertex never raises q")
{
    for (std::size_t n = 2; n <= 6; ++n)
        for (const Graph& g : *enumerate_graphs(n)) {
            const double q = q_radius(g).radius;
            for (Vertex u = 0; u < n; ++u)
                CHECK(q_radius(delete_vertex(g, u)).radius <= q + 1e-9);
        }
}

TEST_CASE("disconnected graphs take the largest component")
{
    const Graph g = disjoint_union(cycle_graph(5), complete_graph(4));
    const SpectralResult r = q_radius(g);
    CHECK_THAT(r.radius, WithinAbs(6.0, 1e-9));
    for (Vertex v = 0; v < 5; ++v)
        CHECK(r.vector[v] == 0.0);
}

TEST_CASE("degree powers")
{
    CHECK(degree_power(complete_graph(4), 2.0) == 36.0);
    CHECK(degree_power(path_graph(4), 3.0) == 18.0);
}

TEST_CASE("tolerance validation")
{
    Tolerance t;
    t.eig_tol = -1.0;
    CHECK_THROWS_AS(t.validate(), InputError);
}
