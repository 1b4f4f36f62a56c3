#include "qturan/subgraph.hpp"

#include <algorithm>
#include <bit>

namespace qturan {

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t count(const Bits& b)
{
    std::size_t c = 0;
    for (auto w : b)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

void reset(Bits& b, Vertex v) { b[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
void set(Bits& b, Vertex v) { b[v >> 6] |= std::uint64_t{1} << (v & 63); }

template <class F>
bool for_each_bit(const Bits& b, F&& f)
{
    for (std::size_t w = 0; w < b.size(); ++w)
        for (std::uint64_t word = b[w]; word; word &= word - 1)
            if (f(w * 64 + static_cast<std::size_t>(std::countr_zero(word))))
                return true;
    return false;
}

Bits all_vertices(std::size_t n)
{
    Bits b((n + 63) / 64, 0);
    for (Vertex v = 0; v < n; ++v)
        set(b, v);
    return b;
}

class CliqueSearch {
public:
    CliqueSearch(const Graph& g, std::size_t target) : g_(g), target_(target) {}

    bool find(std::vector<Vertex>& clique, Bits candidates)
    {
        if (clique.size() >= target_)
            return true;
        if (clique.size() + count(candidates) < target_)
            return false;
        for (std::size_t w = 0; w < candidates.size(); ++w) {
            while (candidates[w]) {
                const Vertex v = w * 64 + static_cast<std::size_t>(std::countr_zero(candidates[w]));
                Bits next(candidates.size());
                auto row = g_.row(v);
                for (std::size_t k = 0; k < next.size(); ++k)
                    next[k] = candidates[k] & row[k];
                clique.push_back(v);
                if (find(clique, std::move(next)))
                    return true;
                clique.pop_back();
                reset(candidates, v);
                if (clique.size() + count(candidates) < target_)
                    return false;
            }
        }
        return false;
    }

private:
    const Graph& g_;
    std::size_t target_;
};

class EmbeddingSearch {
public:
    EmbeddingSearch(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern)
    {
        order_pattern();
        const std::size_t words = host.words_per_row();
        used_.assign(words, 0);
        image_.assign(pattern.order(), 0);
        placed_.assign(pattern.order(), false);
        degree_ok_.resize(pattern.order());
        for (std::size_t i = 0; i < order_.size(); ++i) {
            Bits ok(words, 0);
            for (Vertex h = 0; h < host.order(); ++h)
                if (host.degree(h) >= pattern.degree(order_[i]))
                    set(ok, h);
            degree_ok_[i] = std::move(ok);
        }
    }

    std::optional<Embedding> run()
    {
        if (extend(0))
            return image_;
        return std::nullopt;
    }

private:
    // Next pattern vertex: most already-placed neighbours, then highest
    // degree, then lowest index.
    void order_pattern()
    {
        const std::size_t k = pattern_.order();
        std::vector<bool> taken(k, false);
        std::vector<std::size_t> links(k, 0);
        for (std::size_t step = 0; step < k; ++step) {
            Vertex best = k;
            for (Vertex f = 0; f < k; ++f) {
                if (taken[f])
                    continue;
                if (best == k || links[f] > links[best] ||
                    (links[f] == links[best] && pattern_.degree(f) > pattern_.degree(best)))
                    best = f;
            }
            taken[best] = true;
            order_.push_back(best);
            for (Vertex w : pattern_.neighbors(best))
                ++links[w];
        }
    }

    bool extend(std::size_t depth)
    {
        if (depth == order_.size())
            return true;
        const Vertex f = order_[depth];
        Bits cand = degree_ok_[depth];
        std::size_t unplaced_neighbours = 0;
        for (Vertex w : pattern_.neighbors(f)) {
            if (!placed_[w]) {
                ++unplaced_neighbours;
                continue;
            }
            auto row = host_.row(image_[w]);
            for (std::size_t k = 0; k < cand.size(); ++k)
                cand[k] &= row[k];
        }
        for (std::size_t k = 0; k < cand.size(); ++k)
            cand[k] &= ~used_[k];

        return for_each_bit(cand, [&](Vertex h) {
            auto row = host_.row(h);
            std::size_t free_neighbours = 0;
            for (std::size_t k = 0; k < row.size(); ++k)
                free_neighbours += static_cast<std::size_t>(std::popcount(row[k] & ~used_[k]));
            if (free_neighbours < unplaced_neighbours)
                return false;
            image_[f] = h;
            placed_[f] = true;
            set(used_, h);
            if (extend(depth + 1))
                return true;
            reset(used_, h);
            placed_[f] = false;
            return false;
        });
    }

    const Graph& host_;
    const Graph& pattern_;
    std::vector<Vertex> order_;
    std::vector<Bits> degree_ok_;
    Bits used_;
    Embedding image_;
    std::vector<bool> placed_;
};

} // namespace

std::optional<std::vector<Vertex>> find_clique(const Graph& g, std::size_t k)
{
    std::vector<Vertex> clique;
    if (k == 0)
        return clique;
    if (k > g.order())
        return std::nullopt;
    CliqueSearch search(g, k);
    if (search.find(clique, all_vertices(g.order())))
        return clique;
    return std::nullopt;
}

std::size_t clique_number(const Graph& g)
{
    std::size_t best = g.order() == 0 ? 0 : 1;
    while (best < g.order() && find_clique(g, best + 1))
        ++best;
    return best;
}

std::optional<Embedding> find_subgraph(const Graph& host, const Graph& pattern)
{
    const std::size_t k = pattern.order();
    if (k == 0)
        return Embedding{};
    if (k > host.order() || pattern.edge_count() > host.edge_count())
        return std::nullopt;
    if (pattern.edge_count() == k * (k - 1) / 2) {
        auto clique = find_clique(host, k);
        if (!clique)
            return std::nullopt;
        return Embedding(clique->begin(), clique->end());
    }
    return EmbeddingSearch(host, pattern).run();
}

} // namespace qturan
