#pragma once

// Slow, independent reference implementations used to check the library.
// Nothing here calls into the code under test except Graph accessors.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "qturan/graph.hpp"

namespace oracle {

using qturan::Graph;
using qturan::Vertex;

using Matrix = std::vector<std::vector<double>>;

inline Matrix signless_laplacian(const Graph& g)
{
    const std::size_t n = g.order();
    Matrix m(n, std::vector<double>(n, 0.0));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) {
                m[u][v] = 1.0;
                m[u][u] += 1.0;
            }
    return m;
}

inline Matrix adjacency(const Graph& g)
{
    const std::size_t n = g.order();
    Matrix m(n, std::vector<double>(n, 0.0));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v))
                m[u][v] = 1.0;
    return m;
}

/// Cyclic Jacobi rotations; eigenvalues ascending.
inline std::vector<double> jacobi_eigenvalues(Matrix a)
{
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                off += a[i][j] * a[i][j];
        if (off < 1e-30)
            break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300)
                    continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i)
        values[i] = a[i][i];
    std::sort(values.begin(), values.end());
    return values;
}

inline double largest_eigenvalue(const Matrix& m)
{
    return m.empty() ? 0.0 : jacobi_eigenvalues(m).back();
}

inline double q_index(const Graph& g) { return largest_eigenvalue(signless_laplacian(g)); }
inline double lambda_index(const Graph& g) { return largest_eigenvalue(adjacency(g)); }

/// q of a complete multipartite graph from its part-size quotient matrix:
/// B_ii = n - n_i, B_ij = n_j.
inline double multipartite_q(const std::vector<std::size_t>& parts)
{
    const double n = static_cast<double>(std::accumulate(parts.begin(), parts.end(), std::size_t{0}));
    const std::size_t k = parts.size();
    Matrix b(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            b[i][j] = i == j ? n - static_cast<double>(parts[i]) : static_cast<double>(parts[j]);
    // The quotient is not symmetric; symmetrise by D^{1/2} B D^{-1/2}.
    Matrix s(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            s[i][j] = b[i][j] * std::sqrt(static_cast<double>(parts[i])) / std::sqrt(static_cast<double>(parts[j]));
    return largest_eigenvalue(s);
}

/// Balanced part sizes computed by repeatedly adding to the smallest part.
inline std::vector<std::size_t> balanced_parts(std::size_t n, std::size_t r)
{
    std::vector<std::size_t> parts(r, 0);
    for (std::size_t i = 0; i < n; ++i)
        ++*std::min_element(parts.begin(), parts.end());
    return parts;
}

inline std::uint64_t multipartite_edges(const std::vector<std::size_t>& parts)
{
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            e += parts[i] * parts[j];
    return e;
}

/// Labelled graph on n vertices from a bit mask over pairs (i<j) in
/// column order (0,1),(0,2),(1,2),(0,3),...
inline Graph from_mask(std::size_t n, std::uint64_t mask)
{
    qturan::GraphBuilder b(n);
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1U)
                b.add_edge(i, j);
    return std::move(b).build();
}

/// Smallest pair-mask over all vertex permutations.
inline std::uint64_t min_relabelled_mask(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t mask = 0;
        std::size_t bit = 0;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i, ++bit)
                if (g.adjacent(perm[i], perm[j]))
                    mask |= std::uint64_t{1} << bit;
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Isomorphism classes of order n by exhaustive labelled enumeration and
/// min-over-permutations dedup. Practical for n <= 6.
inline std::size_t brute_force_class_count(std::size_t n)
{
    const std::size_t pairs = n * (n - 1) / 2;
    std::set<std::uint64_t> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
        classes.insert(min_relabelled_mask(from_mask(n, mask)));
    return classes.size();
}

/// Number of unlabelled graphs of order n from Burnside's lemma over the
/// cycle types of S_n acting on vertex pairs.
inline std::uint64_t burnside_class_count(std::size_t n)
{
    using u128 = unsigned __int128;
    u128 total = 0;
    u128 factorial = 1;
    for (std::size_t i = 2; i <= n; ++i)
        factorial *= i;
    std::vector<std::size_t> parts;
    // Enumerate partitions of n as non-increasing part lists.
    auto visit = [&](const std::vector<std::size_t>& p) {
        std::size_t cycles = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            cycles += p[i] / 2;
            for (std::size_t j = i + 1; j < p.size(); ++j)
                cycles += std::gcd(p[i], p[j]);
        }
        // Permutations with this cycle type: n! / prod(k^{m_k} m_k!).
        u128 denom = 1;
        for (std::size_t i = 0; i < p.size();) {
            std::size_t j = i;
            while (j < p.size() && p[j] == p[i])
                ++j;
            const std::size_t m = j - i;
            for (std::size_t t = 0; t < m; ++t)
                denom *= p[i];
            for (std::size_t t = 2; t <= m; ++t)
                denom *= t;
            i = j;
        }
        total += (factorial / denom) * (u128{1} << cycles);
    };
    std::vector<std::size_t> stack;
    auto rec = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
        if (remaining == 0) {
            visit(stack);
            return;
        }
        for (std::size_t k = std::min(remaining, max_part); k >= 1; --k) {
            stack.push_back(k);
            self(self, remaining - k, k);
            stack.pop_back();
        }
    };
    rec(rec, n, n);
    return static_cast<std::uint64_t>(total / factorial);
}

/// Isomorphism by trying every bijection (n <= 8).
inline bool brute_force_isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    const std::size_t n = a.order();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    do {
        bool ok = true;
        for (Vertex u = 0; u < n && ok; ++u)
            for (Vertex v = u + 1; v < n && ok; ++v)
                ok = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Tries all k^n assignments.
inline bool brute_force_colorable(const Graph& g, std::size_t k)
{
    const std::size_t n = g.order();
    if (n == 0)
        return true;
    if (k == 0)
        return false;
    std::vector<std::size_t> c(n, 0);
    while (true) {
        bool proper = true;
        for (Vertex u = 0; u < n && proper; ++u)
            for (Vertex v = u + 1; v < n && proper; ++v)
                proper = !(g.adjacent(u, v) && c[u] == c[v]);
        if (proper)
            return true;
        std::size_t i = 0;
        while (i < n && ++c[i] == k)
            c[i++] = 0;
        if (i == n)
            return false;
    }
}

inline std::size_t brute_force_chromatic(const Graph& g)
{
    std::size_t k = 0;
    while (!brute_force_colorable(g, k))
        ++k;
    return k;
}

/// Largest clique by checking every vertex subset.
inline std::size_t brute_force_clique_number(const Graph& g)
{
    const std::size_t n = g.order();
    std::size_t best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        const std::size_t size = static_cast<std::size_t>(__builtin_popcountll(s));
        if (size <= best)
            continue;
        bool clique = true;
        for (Vertex u = 0; u < n && clique; ++u)
            for (Vertex v = u + 1; v < n && clique; ++v)
                if (((s >> u) & 1U) && ((s >> v) & 1U))
                    clique = g.adjacent(u, v);
        if (clique)
            best = size;
    }
    return best;
}

/// Subgraph containment by trying every injective map (small graphs only).
inline bool brute_force_contains(const Graph& host, const Graph& pattern)
{
    const std::size_t n = host.order(), k = pattern.order();
    if (k > n)
        return false;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    do {
        bool ok = true;
        for (Vertex u = 0; u < k && ok; ++u)
            for (Vertex v = u + 1; v < k && ok; ++v)
                ok = !pattern.adjacent(u, v) || host.adjacent(perm[u], perm[v]);
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// graph6 encoder written directly from the format description, for
/// orders below 63.
inline std::string graph6_encode(const Graph& g)
{
    const std::size_t n = g.order();
    std::string out(1, static_cast<char>(63 + n));
    std::vector<int> bits;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i)
            bits.push_back(g.adjacent(i, j) ? 1 : 0);
    while (bits.size() % 6 != 0)
        bits.push_back(0);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b)
            v = (v << 1) | bits[i + static_cast<std::size_t>(b)];
        out.push_back(static_cast<char>(63 + v));
    }
    return out;
}

} // namespace oracle
