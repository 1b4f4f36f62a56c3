#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qturan/graph.hpp"

namespace qturan {

/// Proper colouring with at most k colours (k <= 64), if one exists.
/// DSATUR-ordered backtracking.
std::optional<std::vector<std::size_t>> find_coloring(const Graph& g, std::size_t k);

/// Exact chromatic number: clique lower bound, DSATUR greedy upper bound,
/// then k-colourability tests in between. Intended for small graphs.
std::size_t chromatic_number(const Graph& g);

/// True iff chi(g) <= r.
bool is_r_partite(const Graph& g, std::size_t r);

struct CriticalityWitness {
    enum class Kind { edge, induced_matching };
    Kind kind = Kind::edge;
    std::vector<Edge> edges;
    std::size_t chi_before = 0;
    std::size_t chi_after = 0;
};

struct CriticalityResult {
    bool critical = false;
    std::optional<CriticalityWitness> witness;
};

/// Some single edge deletion lowers chi. Throws InputError for edgeless F.
CriticalityResult is_color_critical(const Graph& f);

/// Some induced matching of size k lowers chi when its edges are deleted,
/// and deleting any k-1 vertices leaves chi unchanged.
CriticalityResult is_color_k_critical(const Graph& f, std::size_t k);

/// Calls `visit` with every induced matching of size k (edges as (u,v), u<v,
/// listed in increasing edge order). Stops early when `visit` returns true.
void for_each_induced_matching(const Graph& f, std::size_t k,
                               const std::function<bool(const std::vector<Edge>&)>& visit);
std::vector<std::vector<Edge>> enumerate_induced_matchings(const Graph& f, std::size_t k);

} // namespace qturan
