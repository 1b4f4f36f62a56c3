#include "qturan/chromatic.hpp"

#include <algorithm>
#include <bit>

#include "qturan/subgraph.hpp"

namespace qturan {

namespace {

constexpr std::size_t max_colors = 64;

class Colorer {
public:
    Colorer(const Graph& g, std::size_t k)
        : g_(g), n_(g.order()), k_(k), color_(n_, -1), count_(n_ * k, 0), saturation_(n_, 0),
          free_degree_(g.degrees().begin(), g.degrees().end())
    {
    }

    bool backtrack(std::size_t colored, std::size_t used)
    {
        if (colored == n_)
            return true;
        const Vertex v = pick();
        const std::size_t limit = std::min(k_, used + 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (count_[v * k_ + c] != 0)
                continue;
            assign(v, c);
            if (backtrack(colored + 1, std::max(used, c + 1)))
                return true;
            unassign(v, c);
        }
        return false;
    }

    std::size_t greedy()
    {
        std::size_t used = 0;
        for (std::size_t step = 0; step < n_; ++step) {
            const Vertex v = pick();
            std::size_t c = 0;
            while (count_[v * k_ + c] != 0)
                ++c;
            assign(v, c);
            used = std::max(used, c + 1);
        }
        return used;
    }

    std::vector<std::size_t> coloring() const
    {
        return {color_.begin(), color_.end()};
    }

private:
    // Max saturation, then most uncoloured neighbours, then lowest index.
    Vertex pick() const
    {
        Vertex best = n_;
        for (Vertex v = 0; v < n_; ++v) {
            if (color_[v] >= 0)
                continue;
            if (best == n_)
                best = v;
            else {
                const int sv = std::popcount(saturation_[v]);
                const int sb = std::popcount(saturation_[best]);
                if (sv > sb || (sv == sb && free_degree_[v] > free_degree_[best]))
                    best = v;
            }
        }
        return best;
    }

    void assign(Vertex v, std::size_t c)
    {
        color_[v] = static_cast<int>(c);
        for (Vertex w : g_.neighbors(v)) {
            if (count_[w * k_ + c]++ == 0)
                saturation_[w] |= std::uint64_t{1} << c;
            --free_degree_[w];
        }
    }

    void unassign(Vertex v, std::size_t c)
    {
        color_[v] = -1;
        for (Vertex w : g_.neighbors(v)) {
            if (--count_[w * k_ + c] == 0)
                saturation_[w] &= ~(std::uint64_t{1} << c);
            ++free_degree_[w];
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::size_t k_;
    std::vector<int> color_;
    std::vector<std::uint32_t> count_;
    std::vector<std::uint64_t> saturation_;
    std::vector<std::size_t> free_degree_;
};

std::size_t greedy_colors(const Graph& g)
{
    Colorer c(g, std::max<std::size_t>(g.order(), 1));
    return c.greedy();
}

bool colorable(const Graph& g, std::size_t k) { return find_coloring(g, k).has_value(); }

} // namespace

std::optional<std::vector<std::size_t>> find_coloring(const Graph& g, std::size_t k)
{
    const std::size_t n = g.order();
    if (n == 0)
        return std::vector<std::size_t>{};
    if (k >= n) {
        std::vector<std::size_t> distinct(n);
        for (std::size_t v = 0; v < n; ++v)
            distinct[v] = v;
        return distinct;
    }
    if (k == 0)
        return std::nullopt;
    if (k > max_colors)
        throw InputError("colourability search supports at most 64 colours");
    Colorer c(g, k);
    if (c.backtrack(0, 0))
        return c.coloring();
    return std::nullopt;
}

std::size_t chromatic_number(const Graph& g)
{
    if (g.order() == 0)
        return 0;
    const std::size_t lower = clique_number(g);
    const std::size_t upper = greedy_colors(g);
    for (std::size_t k = lower; k < upper; ++k)
        if (colorable(g, k))
            return k;
    return upper;
}

bool is_r_partite(const Graph& g, std::size_t r) { return colorable(g, r); }

CriticalityResult is_color_critical(const Graph& f)
{
    if (f.edge_count() == 0)
        throw InputError("colour-criticality needs at least one edge");
    const std::size_t chi = chromatic_number(f);
    for (const Edge& e : f.edges()) {
        const Graph reduced = f.without_edge(e.first, e.second);
        if (colorable(reduced, chi - 1)) {
            CriticalityWitness w{CriticalityWitness::Kind::edge, {e}, chi, chromatic_number(reduced)};
            return {true, std::move(w)};
        }
    }
    return {false, std::nullopt};
}

void for_each_induced_matching(const Graph& f, std::size_t k,
                               const std::function<bool(const std::vector<Edge>&)>& visit)
{
    const auto edges = f.edges();
    std::vector<Edge> picked;
    auto compatible = [&](const Edge& a, const Edge& b) {
        return a.first != b.first && a.first != b.second && a.second != b.first && a.second != b.second &&
               !f.adjacent(a.first, b.first) && !f.adjacent(a.first, b.second) &&
               !f.adjacent(a.second, b.first) && !f.adjacent(a.second, b.second);
    };
    std::function<bool(std::size_t)> dfs = [&](std::size_t from) {
        if (picked.size() == k)
            return visit(picked);
        for (std::size_t i = from; i < edges.size(); ++i) {
            if (!std::all_of(picked.begin(), picked.end(),
                             [&](const Edge& e) { return compatible(e, edges[i]); }))
                continue;
            picked.push_back(edges[i]);
            if (dfs(i + 1))
                return true;
            picked.pop_back();
        }
        return false;
    };
    if (k == 0) {
        visit(picked);
        return;
    }
    dfs(0);
}

std::vector<std::vector<Edge>> enumerate_induced_matchings(const Graph& f, std::size_t k)
{
    std::vector<std::vector<Edge>> out;
    for_each_induced_matching(f, k, [&](const std::vector<Edge>& m) {
        out.push_back(m);
        return false;
    });
    return out;
}

CriticalityResult is_color_k_critical(const Graph& f, std::size_t k)
{
    if (k == 0)
        throw InputError("colour-k-criticality needs k >= 1");
    if (f.order() == 0)
        return {};
    const std::size_t chi = chromatic_number(f);

    std::optional<CriticalityWitness> witness;
    for_each_induced_matching(f, k, [&](const std::vector<Edge>& matching) {
        const Graph reduced = delete_edges(f, matching);
        if (chi > 0 && colorable(reduced, chi - 1)) {
            witness = CriticalityWitness{CriticalityWitness::Kind::induced_matching, matching, chi,
                                         chromatic_number(reduced)};
            return true;
        }
        return false;
    });
    if (!witness)
        return {false, std::nullopt};

    // Every (k-1)-subset of vertices must leave chi unchanged.
    const std::size_t drop = k - 1;
    if (drop > f.order())
        return {false, witness};
    std::vector<Vertex> subset(drop);
    for (std::size_t i = 0; i < drop; ++i)
        subset[i] = i;
    while (true) {
        const Graph rest = delete_vertices(f, subset);
        if (chi == 0 || colorable(rest, chi - 1))
            return {false, witness};
        std::size_t i = drop;
        while (i > 0 && subset[i - 1] == f.order() - drop + i - 1)
            --i;
        if (i == 0)
            break;
        ++subset[i - 1];
        for (std::size_t j = i; j < drop; ++j)
            subset[j] = subset[j - 1] + 1;
    }
    return {true, witness};
}

} // namespace qturan
