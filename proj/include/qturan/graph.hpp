#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qturan {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown when caller-supplied arguments violate an operation's precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a numerical routine cannot produce a result.
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GraphBuilder;

/// Immutable simple undirected graph. Adjacency is held as one bit row per
/// vertex (64-bit words), so row intersections are word-wise ANDs.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t order);

    /// Build from an edge list. Duplicate and reversed pairs are merged;
    /// loops and out-of-range endpoints throw InputError naming the pair.
    static Graph from_edges(std::size_t order, std::span<const Edge> edges);
    static Graph from_edges(std::size_t order, std::initializer_list<Edge> edges)
    {
        return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
    }

    std::size_t order() const { return n_; }
    std::size_t edge_count() const { return m_; }
    std::size_t words_per_row() const { return words_; }

    bool adjacent(Vertex u, Vertex v) const
    {
        return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
    }
    std::size_t degree(Vertex v) const { return degree_[v]; }
    std::span<const std::uint32_t> degrees() const { return degree_; }
    std::span<const std::uint64_t> row(Vertex v) const
    {
        return {bits_.data() + v * words_, words_};
    }

    std::vector<Vertex> neighbors(Vertex v) const;
    /// All edges (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    Graph with_edge(Vertex u, Vertex v) const;
    Graph without_edge(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    friend class GraphBuilder;

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint32_t> degree_;
};

/// Mutable staging area for building a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t order);
    explicit GraphBuilder(const Graph& g);

    std::size_t order() const { return g_.n_; }
    bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }

    /// Returns false if the edge was already present.
    bool add_edge(Vertex u, Vertex v);
    bool remove_edge(Vertex u, Vertex v);

    Graph build() &&;
    Graph build() const&;

private:
    void check_pair(Vertex u, Vertex v) const;
    void set_bit(Vertex u, Vertex v, bool on);

    Graph g_;
};

struct DegreeProfile {
    std::vector<std::size_t> degrees;
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    std::size_t edge_count = 0;
};

DegreeProfile degree_profile(const Graph& g);

/// Disjoint union plus every edge between the two vertex sets. Vertices of
/// `h` are numbered after those of `g`.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

/// Order n-1; vertices above v shift down by one.
Graph delete_vertex(const Graph& g, Vertex v);
Graph delete_vertices(const Graph& g, std::span<const Vertex> vertices);
Graph delete_edges(const Graph& g, std::span<const Edge> edges);

/// Induced subgraph on `vertices`, renumbered in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Relabel: vertex v of g becomes vertex perm[v] of the result.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Connected components, each sorted ascending; components ordered by their
/// smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_regular(const Graph& g);
std::size_t triangle_count(const Graph& g);

/// Checks symmetry, loop-freeness and degree-sum = 2m from the raw rows.
bool satisfies_graph_invariants(const Graph& g);

} // namespace qturan
