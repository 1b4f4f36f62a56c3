#include "qturan/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "qturan/graph6.hpp"

namespace qturan {

namespace {

using Row = std::uint64_t;
using Labels = std::array<std::uint8_t, 64>;

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : n_(static_cast<int>(g.order()))
    {
        for (int v = 0; v < n_; ++v)
            adj_[v] = g.row(static_cast<Vertex>(v))[0];
    }

    Labels run()
    {
        std::vector<Row> cells;
        if (n_ > 0)
            cells.push_back(n_ == 64 ? ~Row{0} : ((Row{1} << n_) - 1));
        std::vector<int> path;
        search(std::move(cells), path);
        return best_lab_;
    }

private:
    void refine(std::vector<Row>& cells) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t si = 0; si < cells.size(); ++si) {
                const Row splitter = cells[si];
                for (std::size_t ci = 0; ci < cells.size(); ++ci) {
                    const Row cell = cells[ci];
                    if ((cell & (cell - 1)) == 0)
                        continue;
                    std::array<int, 64> count{};
                    int lo = 65;
                    int hi = -1;
                    for (Row rest = cell; rest; rest &= rest - 1) {
                        const int v = std::countr_zero(rest);
                        count[v] = std::popcount(adj_[v] & splitter);
                        lo = std::min(lo, count[v]);
                        hi = std::max(hi, count[v]);
                    }
                    if (lo == hi)
                        continue;
                    std::vector<Row> parts;
                    for (int c = lo; c <= hi; ++c) {
                        Row part = 0;
                        for (Row rest = cell; rest; rest &= rest - 1) {
                            const int v = std::countr_zero(rest);
                            if (count[v] == c)
                                part |= Row{1} << v;
                        }
                        if (part)
                            parts.push_back(part);
                    }
                    cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
                    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci), parts.begin(),
                                 parts.end());
                    ci += parts.size() - 1;
                    changed = true;
                }
            }
        }
    }

    void search(std::vector<Row> cells, std::vector<int>& path)
    {
        refine(cells);
        if (static_cast<int>(cells.size()) == n_) {
            leaf(cells);
            return;
        }
        std::size_t target = 0;
        while ((cells[target] & (cells[target] - 1)) == 0)
            ++target;
        const Row cell = cells[target];

        std::vector<int> explored;
        std::array<int, 64> orbit{};
        std::size_t autos_seen = static_cast<std::size_t>(-1);
        for (Row rest = cell; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if (!explored.empty()) {
                if (autos_seen != autos_.size()) {
                    stabiliser_orbits(path, orbit);
                    autos_seen = autos_.size();
                }
                const bool redundant = std::any_of(explored.begin(), explored.end(),
                                                   [&](int w) { return orbit[w] == orbit[v]; });
                if (redundant)
                    continue;
            }
            std::vector<Row> child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
            child.push_back(Row{1} << v);
            child.push_back(cell & ~(Row{1} << v));
            child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1,
                         cells.end());
            path.push_back(v);
            search(std::move(child), path);
            path.pop_back();
            explored.push_back(v);
        }
    }

    // Orbits of the group generated by the known automorphisms that fix
    // every vertex on `path`.
    void stabiliser_orbits(const std::vector<int>& path, std::array<int, 64>& orbit) const
    {
        std::iota(orbit.begin(), orbit.begin() + n_, 0);
        auto find = [&](int x) {
            while (orbit[x] != x)
                x = orbit[x] = orbit[orbit[x]];
            return x;
        };
        for (const auto& gamma : autos_) {
            const bool fixes = std::all_of(path.begin(), path.end(),
                                           [&](int p) { return gamma[p] == p; });
            if (!fixes)
                continue;
            for (int v = 0; v < n_; ++v) {
                const int a = find(v);
                const int b = find(gamma[v]);
                if (a != b)
                    orbit[std::max(a, b)] = std::min(a, b);
            }
        }
        for (int v = 0; v < n_; ++v)
            orbit[v] = find(v);
    }

    void leaf(const std::vector<Row>& cells)
    {
        Labels lab{};
        Labels inv{};
        for (int k = 0; k < n_; ++k) {
            lab[k] = static_cast<std::uint8_t>(std::countr_zero(cells[k]));
            inv[lab[k]] = static_cast<std::uint8_t>(k);
        }
        std::array<Row, 64> code{};
        for (int k = 0; k < n_; ++k) {
            Row r = 0;
            for (Row rest = adj_[lab[k]]; rest; rest &= rest - 1)
                r |= Row{1} << inv[std::countr_zero(rest)];
            code[k] = r;
        }
        auto cmp = [&](const std::array<Row, 64>& other) {
            for (int k = 0; k < n_; ++k)
                if (code[k] != other[k])
                    return code[k] < other[k] ? -1 : 1;
            return 0;
        };
        if (!have_best_) {
            have_best_ = true;
            best_code_ = first_code_ = code;
            best_lab_ = first_lab_ = lab;
            return;
        }
        if (cmp(first_code_) == 0)
            record_automorphism(first_lab_, lab);
        const int c = cmp(best_code_);
        if (c > 0) {
            best_code_ = code;
            best_lab_ = lab;
        } else if (c == 0) {
            record_automorphism(best_lab_, lab);
        }
    }

    void record_automorphism(const Labels& from, const Labels& to)
    {
        Labels gamma{};
        bool identity = true;
        for (int k = 0; k < n_; ++k) {
            gamma[from[k]] = to[k];
            identity = identity && from[k] == to[k];
        }
        if (!identity)
            autos_.push_back(gamma);
    }

    int n_;
    std::array<Row, 64> adj_{};
    bool have_best_ = false;
    std::array<Row, 64> best_code_{};
    std::array<Row, 64> first_code_{};
    Labels best_lab_{};
    Labels first_lab_{};
    std::vector<Labels> autos_;
};

} // namespace

std::vector<Vertex> canonical_labeling(const Graph& g)
{
    if (g.order() > canonical_max_order)
        throw InputError("canonical labelling supports order <= 64, got " +
                         std::to_string(g.order()));
    const Labels lab = Canonizer(g).run();
    std::vector<Vertex> out(g.order());
    for (std::size_t k = 0; k < g.order(); ++k)
        out[k] = lab[k];
    return out;
}

Graph canonical_form(const Graph& g)
{
    const auto lab = canonical_labeling(g);
    std::vector<Vertex> perm(g.order());
    for (std::size_t k = 0; k < lab.size(); ++k)
        perm[lab[k]] = k;
    return relabel(g, perm);
}

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

std::uint64_t canonical_key(const Graph& g)
{
    if (g.order() > 11)
        throw InputError("canonical_key is limited to order <= 11");
    const Graph c = canonical_form(g);
    std::uint64_t key = 0;
    for (std::size_t j = 1; j < c.order(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            key = (key << 1) | (c.adjacent(i, j) ? 1U : 0U);
    return key | (static_cast<std::uint64_t>(g.order()) << 56);
}

bool is_isomorphic(const Graph& g, const Graph& h)
{
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return false;
    auto dg = std::vector<std::uint32_t>(g.degrees().begin(), g.degrees().end());
    auto dh = std::vector<std::uint32_t>(h.degrees().begin(), h.degrees().end());
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh)
        return false;
    return canonical_form(g) == canonical_form(h);
}

} // namespace qturan
