#include "qturan/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace qturan {

namespace {

std::string pair_text(Vertex u, Vertex v)
{
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

} // namespace

Graph::Graph(std::size_t order)
    : n_(order), words_((order + 63) / 64), bits_(order * ((order + 63) / 64), 0), degree_(order, 0)
{
}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges)
{
    GraphBuilder b(order);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

std::vector<Vertex> Graph::neighbors(Vertex v) const
{
    std::vector<Vertex> out;
    out.reserve(degree_[v]);
    auto r = row(v);
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t word = r[w];
        while (word) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return out;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const
{
    GraphBuilder b(*this);
    b.add_edge(u, v);
    return std::move(b).build();
}

Graph Graph::without_edge(Vertex u, Vertex v) const
{
    GraphBuilder b(*this);
    b.remove_edge(u, v);
    return std::move(b).build();
}

GraphBuilder::GraphBuilder(std::size_t order) : g_(order) {}

GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

void GraphBuilder::check_pair(Vertex u, Vertex v) const
{
    if (u >= g_.n_ || v >= g_.n_)
        throw InputError("edge " + pair_text(u, v) + " has an endpoint outside 0.." +
                         std::to_string(g_.n_ == 0 ? 0 : g_.n_ - 1));
    if (u == v)
        throw InputError("edge " + pair_text(u, v) + " is a loop");
}

void GraphBuilder::set_bit(Vertex u, Vertex v, bool on)
{
    std::uint64_t mask = std::uint64_t{1} << (v & 63);
    auto& word = g_.bits_[u * g_.words_ + (v >> 6)];
    word = on ? (word | mask) : (word & ~mask);
}

bool GraphBuilder::add_edge(Vertex u, Vertex v)
{
    check_pair(u, v);
    if (g_.adjacent(u, v))
        return false;
    set_bit(u, v, true);
    set_bit(v, u, true);
    ++g_.degree_[u];
    ++g_.degree_[v];
    ++g_.m_;
    return true;
}

bool GraphBuilder::remove_edge(Vertex u, Vertex v)
{
    check_pair(u, v);
    if (!g_.adjacent(u, v))
        return false;
    set_bit(u, v, false);
    set_bit(v, u, false);
    --g_.degree_[u];
    --g_.degree_[v];
    --g_.m_;
    return true;
}

Graph GraphBuilder::build() && { return std::move(g_); }

Graph GraphBuilder::build() const& { return g_; }

DegreeProfile degree_profile(const Graph& g)
{
    DegreeProfile p;
    p.degrees.assign(g.degrees().begin(), g.degrees().end());
    p.edge_count = g.edge_count();
    if (!p.degrees.empty()) {
        auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
        p.min_degree = *lo;
        p.max_degree = *hi;
    }
    return p;
}

Graph join(const Graph& g, const Graph& h)
{
    const std::size_t a = g.order();
    GraphBuilder b(a + h.order());
    for (auto [u, v] : g.edges())
        b.add_edge(u, v);
    for (auto [u, v] : h.edges())
        b.add_edge(a + u, a + v);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < h.order(); ++v)
            b.add_edge(u, a + v);
    return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    const std::size_t a = g.order();
    GraphBuilder b(a + h.order());
    for (auto [u, v] : g.edges())
        b.add_edge(u, v);
    for (auto [u, v] : h.edges())
        b.add_edge(a + u, a + v);
    return std::move(b).build();
}

Graph complement(const Graph& g)
{
    GraphBuilder b(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                b.add_edge(u, v);
    return std::move(b).build();
}

Graph delete_vertex(const Graph& g, Vertex v)
{
    if (v >= g.order())
        throw InputError("vertex " + std::to_string(v) + " out of range for order " +
                         std::to_string(g.order()));
    const Vertex one[] = {v};
    return delete_vertices(g, one);
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> vertices)
{
    std::vector<bool> drop(g.order(), false);
    for (Vertex v : vertices) {
        if (v >= g.order())
            throw InputError("vertex " + std::to_string(v) + " out of range for order " +
                             std::to_string(g.order()));
        drop[v] = true;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!drop[v])
            keep.push_back(v);
    return induced_subgraph(g, keep);
}

Graph delete_edges(const Graph& g, std::span<const Edge> edges)
{
    GraphBuilder b(g);
    for (auto [u, v] : edges)
        b.remove_edge(u, v);
    return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    GraphBuilder b(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= g.order())
            throw InputError("vertex " + std::to_string(vertices[i]) + " out of range");
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                b.add_edge(i, j);
    }
    return std::move(b).build();
}

Graph relabel(const Graph& g, std::span<const Vertex> perm)
{
    if (perm.size() != g.order())
        throw InputError("permutation length does not match graph order");
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges())
        b.add_edge(perm[u], perm[v]);
    return std::move(b).build();
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g)
{
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (Vertex w : g.neighbors(comp[head]))
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_regular(const Graph& g)
{
    auto d = g.degrees();
    return std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end();
}

std::size_t triangle_count(const Graph& g)
{
    std::size_t count = 0;
    for (auto [u, v] : g.edges()) {
        auto ru = g.row(u);
        auto rv = g.row(v);
        for (std::size_t w = 0; w < g.words_per_row(); ++w) {
            // only count third vertices above v so each triangle is seen once
            std::uint64_t common = ru[w] & rv[w];
            while (common) {
                Vertex x = w * 64 + static_cast<std::size_t>(std::countr_zero(common));
                if (x > v)
                    ++count;
                common &= common - 1;
            }
        }
    }
    return count;
}

bool satisfies_graph_invariants(const Graph& g)
{
    std::size_t degree_sum = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        if (g.adjacent(u, u))
            return false;
        std::size_t d = 0;
        for (auto word : g.row(u))
            d += static_cast<std::size_t>(std::popcount(word));
        if (d != g.degree(u))
            return false;
        degree_sum += d;
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.adjacent(u, v) != g.adjacent(v, u))
                return false;
    }
    return degree_sum == 2 * g.edge_count();
}

} // namespace qturan
