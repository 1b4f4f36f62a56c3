#include "qturan/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>

namespace qturan {

namespace {

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw InputError(message);
}

} // namespace

Graph complete_graph(std::size_t n)
{
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return std::move(b).build();
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph cycle_graph(std::size_t n)
{
    require(n >= 3, "cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return std::move(b).build();
}

Graph path_graph(std::size_t n)
{
    require(n >= 1, "path needs at least 1 vertex");
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    return std::move(b).build();
}

Graph star_graph(std::size_t n)
{
    require(n >= 1, "star needs at least 1 vertex");
    GraphBuilder b(n);
    for (Vertex v = 1; v < n; ++v)
        b.add_edge(0, v);
    return std::move(b).build();
}

Graph complete_bipartite(std::size_t a, std::size_t b)
{
    const std::size_t parts[] = {a, b};
    return complete_multipartite(parts);
}

Graph complete_multipartite(std::span<const std::size_t> parts)
{
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p)
        part_of.insert(part_of.end(), parts[p], p);
    GraphBuilder b(part_of.size());
    for (Vertex u = 0; u < part_of.size(); ++u)
        for (Vertex v = u + 1; v < part_of.size(); ++v)
            if (part_of[u] != part_of[v])
                b.add_edge(u, v);
    return std::move(b).build();
}

std::vector<std::size_t> turan_part_sizes(std::size_t n, std::size_t r)
{
    require(r >= 1 && r <= n, "turan(n,r) needs 1 <= r <= n");
    std::vector<std::size_t> sizes(r);
    for (std::size_t i = 0; i < r; ++i)
        sizes[i] = (n - i + r - 1) / r;
    return sizes;
}

Graph turan(std::size_t n, std::size_t r)
{
    const auto sizes = turan_part_sizes(n, r);
    return complete_multipartite(sizes);
}

std::uint64_t turan_edges(std::size_t n, std::size_t r)
{
    std::uint64_t inside = 0;
    for (auto s : turan_part_sizes(n, r))
        inside += static_cast<std::uint64_t>(s) * (s - (s > 0 ? 1 : 0)) / 2;
    return static_cast<std::uint64_t>(n) * (n - (n > 0 ? 1 : 0)) / 2 - inside;
}

Graph split(std::size_t n, std::size_t k)
{
    require(k <= n, "split(n,k) needs k <= n");
    return join(complete_graph(k), empty_graph(n - k));
}

Graph generalized_book(std::size_t r, std::size_t k)
{
    require(r >= 1 && k >= 1, "book(r,k) needs r >= 1 and k >= 1");
    return join(complete_graph(r), empty_graph(k));
}

Graph wheel(std::size_t r, std::size_t k)
{
    require(r >= 1 && k >= 3, "wheel(r,k) needs r >= 1 and k >= 3");
    return join(complete_graph(r), cycle_graph(k));
}

Graph kst_plus(std::size_t s, std::size_t t)
{
    require(s >= 2 && s <= t, "kstplus(s,t) needs 2 <= s <= t");
    return complete_bipartite(s, t).with_edge(0, 1);
}

Graph h_graph(std::size_t n, std::size_t r, std::size_t k)
{
    require(k >= 1 && r >= 2 && n + 1 >= k + r, "h(n,r,k) needs k >= 1, r >= 2, n >= k-1+r");
    return join(complete_graph(k - 1), turan(n - k + 1, r));
}

Graph petersen_graph()
{
    std::vector<std::array<int, 2>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            pairs.push_back({a, b});
    GraphBuilder g(pairs.size());
    for (Vertex u = 0; u < pairs.size(); ++u)
        for (Vertex v = u + 1; v < pairs.size(); ++v) {
            const auto& p = pairs[u];
            const auto& q = pairs[v];
            if (p[0] != q[0] && p[0] != q[1] && p[1] != q[0] && p[1] != q[1])
                g.add_edge(u, v);
        }
    return std::move(g).build();
}

Graph disjoint_cliques(std::size_t copies, std::size_t size)
{
    Graph out;
    for (std::size_t c = 0; c < copies; ++c)
        out = disjoint_union(out, complete_graph(size));
    return out;
}

// ---------------------------------------------------------------------------
// (nearly) regular triangle-free graphs

namespace {

constexpr std::uint64_t backtrack_budget = 4'000'000;

// Symmetric sum-free subset of Z_n of size d, searched depth-first over the
// generators 1..n/2 (each contributes {g, n-g}, or just {n/2}).
std::optional<std::vector<std::size_t>> sum_free_connection_set(std::size_t n, std::size_t d)
{
    std::vector<bool> in(n, false);
    std::uint64_t nodes = 0;

    // A circulant is triangle-free iff its connection set is sum-free.
    auto sum_free = [&]() {
        std::vector<std::size_t> members;
        for (std::size_t a = 1; a < n; ++a)
            if (in[a])
                members.push_back(a);
        for (auto a : members)
            for (auto b : members)
                if (in[(a + b) % n])
                    return false;
        return true;
    };

    std::function<bool(std::size_t, std::size_t)> dfs = [&](std::size_t g, std::size_t size) {
        if (size == d)
            return true;
        if (g > n / 2 || ++nodes > backtrack_budget)
            return false;
        const std::size_t mate = n - g;
        const std::size_t add = (mate == g) ? 1 : 2;
        if (size + add <= d) {
            in[g] = true;
            in[mate] = true;
            if (sum_free()) {
                if (dfs(g + 1, size + add))
                    return true;
            }
            in[g] = false;
            in[mate] = false;
        }
        return dfs(g + 1, size);
    };

    if (!dfs(1, 0))
        return std::nullopt;
    std::vector<std::size_t> set;
    for (std::size_t a = 1; a < n; ++a)
        if (in[a])
            set.push_back(a);
    return set;
}

Graph circulant(std::size_t n, const std::vector<std::size_t>& connection)
{
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v)
        for (auto a : connection)
            b.add_edge(v, (v + a) % n);
    return std::move(b).build();
}

// Induced matching of the requested size, first in lexicographic edge order.
std::optional<std::vector<Edge>> find_induced_matching(const Graph& g, std::size_t size)
{
    const auto edges = g.edges();
    std::vector<Edge> picked;
    std::uint64_t nodes = 0;
    std::function<bool(std::size_t)> dfs = [&](std::size_t from) {
        if (picked.size() == size)
            return true;
        if (++nodes > backtrack_budget)
            return false;
        for (std::size_t i = from; i < edges.size(); ++i) {
            auto [a, b] = edges[i];
            const bool ok = std::all_of(picked.begin(), picked.end(), [&](const Edge& e) {
                return a != e.first && a != e.second && b != e.first && b != e.second &&
                       !g.adjacent(a, e.first) && !g.adjacent(a, e.second) &&
                       !g.adjacent(b, e.first) && !g.adjacent(b, e.second);
            });
            if (!ok)
                continue;
            picked.push_back(edges[i]);
            if (dfs(i + 1))
                return true;
            picked.pop_back();
        }
        return false;
    };
    if (!dfs(0))
        return std::nullopt;
    return picked;
}

// Exhaustive search for a triangle-free graph with the given degree targets.
// Untouched vertices sharing a target are interchangeable, so only the first
// of them may be picked at each branching point.
class DegreeBacktracker {
public:
    explicit DegreeBacktracker(std::vector<std::size_t> target)
        : target_(std::move(target)), n_(target_.size()), builder_(n_), degree_(n_, 0)
    {
    }

    ConstructionStatus run()
    {
        if (fill(0))
            return ConstructionStatus::found;
        return exhausted_ ? ConstructionStatus::undetermined : ConstructionStatus::infeasible;
    }

    Graph graph() const { return builder_.build(); }

private:
    bool common_neighbour(Vertex u, Vertex v) const
    {
        for (Vertex w = 0; w < n_; ++w)
            if (builder_.adjacent(u, w) && builder_.adjacent(v, w))
                return true;
        return false;
    }

    bool fill(Vertex u)
    {
        if (++nodes_ > backtrack_budget) {
            exhausted_ = true;
            return false;
        }
        while (u < n_ && degree_[u] == target_[u])
            ++u;
        if (u == n_)
            return true;
        std::vector<bool> untouched(n_);
        for (Vertex v = 0; v < n_; ++v)
            untouched[v] = degree_[v] == 0;
        return choose(u, u + 1, untouched, std::vector<std::size_t>{});
    }

    bool choose(Vertex u, Vertex from, const std::vector<bool>& untouched,
                std::vector<std::size_t> skipped_targets)
    {
        if (degree_[u] == target_[u])
            return fill(u + 1);
        for (Vertex v = from; v < n_; ++v) {
            if (degree_[v] >= target_[v] || builder_.adjacent(u, v))
                continue;
            if (untouched[v] && std::find(skipped_targets.begin(), skipped_targets.end(),
                                          target_[v]) != skipped_targets.end())
                continue;
            if (!common_neighbour(u, v)) {
                builder_.add_edge(u, v);
                ++degree_[u];
                ++degree_[v];
                if (choose(u, v + 1, untouched, skipped_targets))
                    return true;
                builder_.remove_edge(u, v);
                --degree_[u];
                --degree_[v];
                if (exhausted_)
                    return false;
            }
            if (untouched[v])
                skipped_targets.push_back(target_[v]);
        }
        return false;
    }

    std::vector<std::size_t> target_;
    std::size_t n_;
    GraphBuilder builder_;
    std::vector<std::size_t> degree_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

Construction found(Graph g, std::string how)
{
    return {ConstructionStatus::found, std::move(g), std::move(how)};
}

Construction not_found(ConstructionStatus status, std::string reason)
{
    return {status, std::nullopt, std::move(reason)};
}

} // namespace

Construction regular_triangle_free(std::size_t n, std::size_t d)
{
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
    if (n == 0 || d >= n)
        return not_found(ConstructionStatus::infeasible, tag + ": need n >= 1 and d < n");
    const bool nearly = (n * d) % 2 == 1;
    if (d == 0)
        return found(empty_graph(n), "edgeless");

    // A triangle-free graph has at most n^2/4 edges.
    const std::size_t degree_sum = n * d - (nearly ? 1 : 0);
    if (2 * degree_sum > n * n)
        return not_found(ConstructionStatus::infeasible, tag + ": exceeds n^2/4 edges");
    // Regular of odd order is non-bipartite, and triangle-free non-bipartite
    // graphs have minimum degree at most 2n/5.
    if (!nearly && n % 2 == 1 && 5 * d > 2 * n)
        return not_found(ConstructionStatus::infeasible,
                         tag + ": odd order forces minimum degree <= 2n/5");

    if (!nearly) {
        if (auto set = sum_free_connection_set(n, d))
            return found(circulant(n, *set), "circulant");
    } else if (d == 1) {
        GraphBuilder b(n);
        for (Vertex v = 0; v + 1 < n; v += 2)
            b.add_edge(v, v + 1);
        return found(std::move(b).build(), "matching plus isolated vertex");
    } else if (auto set = sum_free_connection_set(n - 1, d)) {
        // d-regular circulant on n-1 vertices, then a new vertex takes over
        // the endpoints of an induced matching of size (d-1)/2.
        const Graph base = circulant(n - 1, *set);
        if (auto matching = find_induced_matching(base, (d - 1) / 2)) {
            GraphBuilder b(n);
            for (auto [u, v] : base.edges())
                b.add_edge(u, v);
            for (auto [u, v] : *matching) {
                b.remove_edge(u, v);
                b.add_edge(n - 1, u);
                b.add_edge(n - 1, v);
            }
            return found(std::move(b).build(), "circulant with induced-matching splice");
        }
    }

    std::vector<std::size_t> target(n, d);
    if (nearly)
        target[n - 1] = d - 1;
    DegreeBacktracker search(target);
    const auto status = search.run();
    if (status == ConstructionStatus::found)
        return found(search.graph(), "backtracking");
    if (status == ConstructionStatus::infeasible)
        return not_found(status, tag + ": exhaustive search found no graph");
    return not_found(status, tag + ": search budget exhausted");
}

Construction family_L_sample(std::size_t n, std::size_t s, std::size_t t)
{
    require(s >= 2 && s <= t && n >= s + t, "L(n,s,t) needs 2 <= s <= t and n >= s+t");
    auto block = regular_triangle_free(n - s + 1, t - 1);
    if (!block.found())
        return block;
    return found(join(complete_graph(s - 1), *block.graph), block.reason);
}

Construction family_Y_sample(std::size_t n, std::size_t t)
{
    require(t >= 2 && n >= 2 * t, "Y(n,t) needs t >= 2 and n >= 2t");
    auto block = regular_triangle_free(n - t + 1, t - 1);
    if (!block.found())
        return block;
    return found(join(empty_graph(t - 1), *block.graph), block.reason);
}

// ---------------------------------------------------------------------------
// family specs

namespace {

struct KindInfo {
    FamilyKind kind;
    std::string_view name;
    std::size_t arity;
};

constexpr std::array<KindInfo, 22> kinds{{
    {FamilyKind::turan, "turan", 2},
    {FamilyKind::complete, "clique", 1},
    {FamilyKind::complete, "complete", 1},
    {FamilyKind::empty, "empty", 1},
    {FamilyKind::cycle, "cycle", 1},
    {FamilyKind::path, "path", 1},
    {FamilyKind::star, "star", 1},
    {FamilyKind::complete_bipartite, "kbip", 2},
    {FamilyKind::complete_bipartite, "complete_bipartite", 2},
    {FamilyKind::split, "split", 2},
    {FamilyKind::generalized_book, "book", 2},
    {FamilyKind::generalized_book, "generalized_book", 2},
    {FamilyKind::wheel, "wheel", 2},
    {FamilyKind::kst, "kst", 2},
    {FamilyKind::kst_plus, "kstplus", 2},
    {FamilyKind::kst_plus, "kst_plus", 2},
    {FamilyKind::h_graph, "h", 3},
    {FamilyKind::L_family, "L", 3},
    {FamilyKind::Y_family, "Y", 2},
    {FamilyKind::petersen, "petersen", 0},
    {FamilyKind::cliques, "cliques", 2},
    {FamilyKind::h_graph, "h_graph", 3},
}};

const KindInfo& info(FamilyKind kind)
{
    return *std::find_if(kinds.begin(), kinds.end(), [&](const KindInfo& k) { return k.kind == kind; });
}

} // namespace

std::string family_kind_list()
{
    std::string out;
    for (const auto& k : kinds) {
        if (!out.empty())
            out += ", ";
        out += k.name;
    }
    return out;
}

std::optional<FamilySpec> parse_family_spec(std::string_view text)
{
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    const auto it = std::find_if(kinds.begin(), kinds.end(), [&](const KindInfo& k) { return k.name == name; });
    if (it == kinds.end())
        return std::nullopt;
    FamilySpec spec{it->kind, {}};
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (true) {
            const auto comma = rest.find(',');
            const std::string_view item = rest.substr(0, comma);
            std::size_t value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
                return std::nullopt;
            spec.params.push_back(value);
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
    }
    if (spec.params.size() != it->arity)
        return std::nullopt;
    return spec;
}

FamilySpec parse_family_spec_or_throw(std::string_view text)
{
    if (auto spec = parse_family_spec(text))
        return *spec;
    throw InputError("cannot parse family spec '" + std::string(text) +
                     "'; valid kinds: " + family_kind_list());
}

std::string to_string(const FamilySpec& spec)
{
    std::string out(info(spec.kind).name);
    for (std::size_t i = 0; i < spec.params.size(); ++i)
        out += (i == 0 ? ":" : ",") + std::to_string(spec.params[i]);
    return out;
}

Graph build_family(const FamilySpec& spec)
{
    const auto& p = spec.params;
    auto unwrap = [](Construction c) {
        if (!c.found())
            throw InputError("construction not found: " + c.reason);
        return std::move(*c.graph);
    };
    switch (spec.kind) {
    case FamilyKind::turan: return turan(p[0], p[1]);
    case FamilyKind::complete: return complete_graph(p[0]);
    case FamilyKind::empty: return empty_graph(p[0]);
    case FamilyKind::cycle: return cycle_graph(p[0]);
    case FamilyKind::path: return path_graph(p[0]);
    case FamilyKind::star: return star_graph(p[0]);
    case FamilyKind::complete_bipartite: return complete_bipartite(p[0], p[1]);
    case FamilyKind::split: return split(p[0], p[1]);
    case FamilyKind::generalized_book: return generalized_book(p[0], p[1]);
    case FamilyKind::wheel: return wheel(p[0], p[1]);
    case FamilyKind::kst: return complete_bipartite(p[0], p[1]);
    case FamilyKind::kst_plus: return kst_plus(p[0], p[1]);
    case FamilyKind::h_graph: return h_graph(p[0], p[1], p[2]);
    case FamilyKind::L_family: return unwrap(family_L_sample(p[0], p[1], p[2]));
    case FamilyKind::Y_family: return unwrap(family_Y_sample(p[0], p[1]));
    case FamilyKind::petersen: return petersen_graph();
    case FamilyKind::cliques: return disjoint_cliques(p[0], p[1]);
    }
    throw InputError("unknown family kind");
}

} // namespace qturan
