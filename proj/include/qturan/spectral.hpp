#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qturan/graph.hpp"

namespace qturan {

struct Tolerance {
    /// Convergence threshold on the eigen-equation residual.
    double eig_tol = 1e-10;
    /// Slack below which an inequality is classified as equality.
    double cmp_tol = 1e-9;
    std::uint64_t max_iterations = 1'000'000;

    void validate() const;
};

enum class SpectralMethod { power, dense };

struct SpectralResult {
    double radius = 0.0;
    /// Unit-norm, entrywise nonnegative. For disconnected graphs this is the
    /// dominant component's Perron vector, zero elsewhere.
    std::vector<double> vector;
    double residual = 0.0;
    std::uint64_t iterations = 0;
    SpectralMethod method = SpectralMethod::power;
};

/// Largest eigenvalue of Q = D + A with a nonnegative unit eigenvector.
/// Power iteration per connected component, dense fallback on stall.
SpectralResult q_radius(const Graph& g, const Tolerance& tol = {});

/// Largest eigenvalue of A with a nonnegative unit eigenvector.
SpectralResult adjacency_radius(const Graph& g, const Tolerance& tol = {});

/// Dense route only: tridiagonalisation plus implicit QL on Q (or A).
SpectralResult q_radius_dense(const Graph& g);
SpectralResult adjacency_radius_dense(const Graph& g);

/// Sum over edges of (x_i + x_j)^2, i.e. x^T Q x.
double rayleigh_q(const Graph& g, std::span<const double> x);

/// max_u |(q - d(u)) x_u - sum_{j in N(u)} x_j| for the Q eigen-equation.
double eigen_residual(const Graph& g, const SpectralResult& result);
/// Same for the adjacency eigen-equation lambda x_u = sum_{j in N(u)} x_j.
double adjacency_residual(const Graph& g, const SpectralResult& result);

/// Sum of d(v)^p over all vertices.
double degree_power(const Graph& g, double p);

/// Eigen-decomposition of a dense symmetric matrix (row-major n*n).
/// Eigenvalues ascending; eigenvectors stored column-wise in `vectors`.
struct SymmetricEigen {
    std::vector<double> values;
    std::vector<double> vectors;
};
SymmetricEigen symmetric_eigen(std::span<const double> matrix, std::size_t n);

/// Dense Q = D + A and A, row-major.
std::vector<double> signless_laplacian_matrix(const Graph& g);
std::vector<double> adjacency_matrix(const Graph& g);

} // namespace qturan
