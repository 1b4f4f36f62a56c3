#include "qturan/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace qturan {

void Tolerance::validate() const
{
    if (!(eig_tol > 0.0) || !(cmp_tol > 0.0))
        throw InputError("tolerances must be strictly positive");
    if (max_iterations == 0)
        throw InputError("iteration cap must be positive");
}

namespace {

enum class Operator { signless_laplacian, adjacency };

using Adjacency = std::vector<std::vector<std::uint32_t>>;

Adjacency adjacency_lists(const Graph& g)
{
    Adjacency out(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w : g.neighbors(v))
            out[v].push_back(static_cast<std::uint32_t>(w));
    return out;
}

// y = M x for M = Q or A.
void apply(Operator op, const Adjacency& adj, std::span<const double> x, std::span<double> y)
{
    for (std::size_t u = 0; u < adj.size(); ++u) {
        double s = op == Operator::signless_laplacian ? static_cast<double>(adj[u].size()) * x[u] : 0.0;
        for (auto w : adj[u])
            s += x[w];
        y[u] = s;
    }
}

double residual_of(Operator op, const Adjacency& adj, double radius, std::span<const double> x)
{
    std::vector<double> y(x.size());
    apply(op, adj, x, y);
    double worst = 0.0;
    for (std::size_t u = 0; u < x.size(); ++u)
        worst = std::max(worst, std::abs(radius * x[u] - y[u]));
    return worst;
}

void normalise(std::vector<double>& x)
{
    const double norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
    for (auto& v : x)
        v /= norm;
}

struct ComponentResult {
    double radius = 0.0;
    std::vector<double> vector;
    double residual = 0.0;
    std::uint64_t iterations = 0;
    bool converged = false;
};

// Power iteration on a connected graph. The adjacency operator is shifted by
// the identity so that -lambda of a bipartite graph cannot tie the top.
ComponentResult power_iteration(Operator op, const Graph& g, const Tolerance& tol)
{
    const std::size_t n = g.order();
    const auto adj = adjacency_lists(g);
    const double shift = op == Operator::adjacency ? 1.0 : 0.0;

    ComponentResult out;
    std::vector<double> x(n);
    for (std::size_t v = 0; v < n; ++v)
        x[v] = static_cast<double>(g.degree(v)) + 1e-3;
    normalise(x);
    std::vector<double> y(n);
    for (std::uint64_t it = 1; it <= tol.max_iterations; ++it) {
        apply(op, adj, x, y);
        const double radius = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
        double worst = 0.0;
        for (std::size_t u = 0; u < n; ++u)
            worst = std::max(worst, std::abs(y[u] - radius * x[u]));
        if (worst <= tol.eig_tol) {
            out.radius = radius;
            out.vector = x;
            out.residual = worst;
            out.iterations = it;
            out.converged = true;
            return out;
        }
        for (std::size_t u = 0; u < n; ++u)
            y[u] += shift * x[u];
        x.swap(y);
        normalise(x);
        out.iterations = it;
    }
    return out;
}

ComponentResult dense_solve(Operator op, const Graph& g)
{
    const std::size_t n = g.order();
    const auto matrix = op == Operator::signless_laplacian ? signless_laplacian_matrix(g) : adjacency_matrix(g);
    const auto eig = symmetric_eigen(matrix, n);
    ComponentResult out;
    out.radius = eig.values.back();
    out.vector.resize(n);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out.vector[i] = eig.vectors[i * n + (n - 1)];
        sum += out.vector[i];
    }
    for (auto& v : out.vector)
        v = std::max(0.0, sum < 0 ? -v : v);
    normalise(out.vector);
    out.residual = residual_of(op, adjacency_lists(g), out.radius, out.vector);
    out.converged = true;
    return out;
}

SpectralResult solve(Operator op, const Graph& g, const Tolerance& tol, bool dense_only)
{
    tol.validate();
    if (g.order() == 0)
        throw InputError("spectral radius of the null graph is undefined");

    SpectralResult result;
    result.method = dense_only ? SpectralMethod::dense : SpectralMethod::power;
    result.vector.assign(g.order(), 0.0);

    bool have_best = false;
    for (const auto& comp : connected_components(g)) {
        ComponentResult cr;
        if (comp.size() == 1) {
            cr.radius = 0.0;
            cr.vector = {1.0};
            cr.converged = true;
        } else {
            const Graph sub = induced_subgraph(g, comp);
            if (!dense_only)
                cr = power_iteration(op, sub, tol);
            if (!cr.converged) {
                const auto spent = cr.iterations;
                cr = dense_solve(op, sub);
                cr.iterations += spent;
                result.method = SpectralMethod::dense;
                if (!dense_only && cr.residual > tol.eig_tol)
                    throw ComputationError("dense eigensolver residual " + std::to_string(cr.residual) +
                                           " above tolerance");
            }
        }
        result.iterations += cr.iterations;
        if (!have_best || cr.radius > result.radius) {
            have_best = true;
            result.radius = cr.radius;
            result.residual = cr.residual;
            std::fill(result.vector.begin(), result.vector.end(), 0.0);
            for (std::size_t i = 0; i < comp.size(); ++i)
                result.vector[comp[i]] = cr.vector[i];
        }
    }
    return result;
}

} // namespace

SpectralResult q_radius(const Graph& g, const Tolerance& tol)
{
    return solve(Operator::signless_laplacian, g, tol, false);
}

SpectralResult adjacency_radius(const Graph& g, const Tolerance& tol)
{
    return solve(Operator::adjacency, g, tol, false);
}

SpectralResult q_radius_dense(const Graph& g) { return solve(Operator::signless_laplacian, g, {}, true); }

SpectralResult adjacency_radius_dense(const Graph& g) { return solve(Operator::adjacency, g, {}, true); }

double rayleigh_q(const Graph& g, std::span<const double> x)
{
    if (x.size() != g.order())
        throw InputError("vector length " + std::to_string(x.size()) + " does not match order " +
                         std::to_string(g.order()));
    const double norm2 = std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
    if (std::abs(norm2 - 1.0) > 1e-9)
        throw InputError("vector is not unit norm");
    double s = 0.0;
    for (auto [i, j] : g.edges())
        s += (x[i] + x[j]) * (x[i] + x[j]);
    return s;
}

double eigen_residual(const Graph& g, const SpectralResult& result)
{
    if (result.vector.size() != g.order())
        throw InputError("result vector length does not match graph order");
    return residual_of(Operator::signless_laplacian, adjacency_lists(g), result.radius, result.vector);
}

double adjacency_residual(const Graph& g, const SpectralResult& result)
{
    if (result.vector.size() != g.order())
        throw InputError("result vector length does not match graph order");
    return residual_of(Operator::adjacency, adjacency_lists(g), result.radius, result.vector);
}

double degree_power(const Graph& g, double p)
{
    if (!(p >= 1.0))
        throw InputError("degree power needs p >= 1");
    double s = 0.0;
    for (auto d : g.degrees())
        s += std::pow(static_cast<double>(d), p);
    return s;
}

std::vector<double> signless_laplacian_matrix(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<double> m(n * n, 0.0);
    for (Vertex u = 0; u < n; ++u) {
        m[u * n + u] = static_cast<double>(g.degree(u));
        for (Vertex v : g.neighbors(u))
            m[u * n + v] = 1.0;
    }
    return m;
}

std::vector<double> adjacency_matrix(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<double> m(n * n, 0.0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u))
            m[u * n + v] = 1.0;
    return m;
}

// Householder reduction to tridiagonal form followed by the implicit QL
// algorithm (the EISPACK tred2/tql2 pair).
SymmetricEigen symmetric_eigen(std::span<const double> matrix, std::size_t n)
{
    if (matrix.size() != n * n)
        throw InputError("matrix size does not match dimension");
    SymmetricEigen out;
    if (n == 0)
        return out;
    std::vector<double> V(matrix.begin(), matrix.end());
    auto at = [&](std::size_t i, std::size_t j) -> double& { return V[i * n + j]; };
    std::vector<double> d(n), e(n);

    for (std::size_t j = 0; j < n; ++j)
        d[j] = at(n - 1, j);

    for (std::size_t i = n - 1; i > 0; --i) {
        double scale = 0.0;
        double h = 0.0;
        for (std::size_t k = 0; k < i; ++k)
            scale += std::abs(d[k]);
        if (scale == 0.0) {
            e[i] = d[i - 1];
            for (std::size_t j = 0; j < i; ++j) {
                d[j] = at(i - 1, j);
                at(i, j) = 0.0;
                at(j, i) = 0.0;
            }
        } else {
            for (std::size_t k = 0; k < i; ++k) {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            double f = d[i - 1];
            double g = std::sqrt(h);
            if (f > 0)
                g = -g;
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for (std::size_t j = 0; j < i; ++j)
                e[j] = 0.0;
            for (std::size_t j = 0; j < i; ++j) {
                f = d[j];
                at(j, i) = f;
                g = e[j] + at(j, j) * f;
                for (std::size_t k = j + 1; k <= i - 1; ++k) {
                    g += at(k, j) * d[k];
                    e[k] += at(k, j) * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for (std::size_t j = 0; j < i; ++j) {
                e[j] /= h;
                f += e[j] * d[j];
            }
            const double hh = f / (h + h);
            for (std::size_t j = 0; j < i; ++j)
                e[j] -= hh * d[j];
            for (std::size_t j = 0; j < i; ++j) {
                f = d[j];
                g = e[j];
                for (std::size_t k = j; k <= i - 1; ++k)
                    at(k, j) -= (f * e[k] + g * d[k]);
                d[j] = at(i - 1, j);
                at(i, j) = 0.0;
            }
        }
        d[i] = h;
    }

    for (std::size_t i = 0; i + 1 < n; ++i) {
        at(n - 1, i) = at(i, i);
        at(i, i) = 1.0;
        const double h = d[i + 1];
        if (h != 0.0) {
            for (std::size_t k = 0; k <= i; ++k)
                d[k] = at(k, i + 1) / h;
            for (std::size_t j = 0; j <= i; ++j) {
                double g = 0.0;
                for (std::size_t k = 0; k <= i; ++k)
                    g += at(k, i + 1) * at(k, j);
                for (std::size_t k = 0; k <= i; ++k)
                    at(k, j) -= g * d[k];
            }
        }
        for (std::size_t k = 0; k <= i; ++k)
            at(k, i + 1) = 0.0;
    }
    for (std::size_t j = 0; j < n; ++j) {
        d[j] = at(n - 1, j);
        at(n - 1, j) = 0.0;
    }
    at(n - 1, n - 1) = 1.0;
    e[0] = 0.0;

    for (std::size_t i = 1; i < n; ++i)
        e[i - 1] = e[i];
    e[n - 1] = 0.0;

    double f = 0.0;
    double tst1 = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();
    for (std::size_t l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        std::size_t m = l;
        while (m < n - 1 && std::abs(e[m]) > eps * tst1)
            ++m;
        if (m > l) {
            int iter = 0;
            do {
                if (++iter > 200)
                    throw ComputationError("implicit QL iteration did not converge");
                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0)
                    r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                const double dl1 = d[l + 1];
                double h = g - d[l];
                for (std::size_t i = l + 2; i < n; ++i)
                    d[i] -= h;
                f += h;

                p = d[m];
                double c = 1.0, c2 = 1.0, c3 = 1.0;
                const double el1 = e[l + 1];
                double s = 0.0, s2 = 0.0;
                for (std::size_t ii = m; ii-- > l;) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[ii];
                    h = c * p;
                    r = std::hypot(p, e[ii]);
                    e[ii + 1] = s * r;
                    s = e[ii] / r;
                    c = p / r;
                    p = c * d[ii] - s * g;
                    d[ii + 1] = h + s * (c * g + s * d[ii]);
                    for (std::size_t k = 0; k < n; ++k) {
                        h = at(k, ii + 1);
                        at(k, ii + 1) = s * at(k, ii) + c * h;
                        at(k, ii) = c * at(k, ii) - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0.0;
    }

    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::size_t k = i;
        double p = d[i];
        for (std::size_t j = i + 1; j < n; ++j)
            if (d[j] < p) {
                k = j;
                p = d[j];
            }
        if (k != i) {
            d[k] = d[i];
            d[i] = p;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(at(j, i), at(j, k));
        }
    }
    out.values = std::move(d);
    out.vectors = std::move(V);
    return out;
}

} // namespace qturan
