#pragma once

#include <optional>
#include <vector>

#include "qturan/graph.hpp"

namespace qturan {

/// embedding[f] is the host vertex that pattern vertex f maps to.
using Embedding = std::vector<Vertex>;

/// Not-necessarily-induced subgraph search: an injective map preserving the
/// pattern's edges. Complete patterns take the clique fast path.
std::optional<Embedding> find_subgraph(const Graph& host, const Graph& pattern);

inline bool contains_subgraph(const Graph& host, const Graph& pattern)
{
    return find_subgraph(host, pattern).has_value();
}

inline bool is_free(const Graph& host, const Graph& pattern)
{
    return !contains_subgraph(host, pattern);
}

/// Vertices of some k-clique, ascending, if one exists.
std::optional<std::vector<Vertex>> find_clique(const Graph& g, std::size_t k);

std::size_t clique_number(const Graph& g);

} // namespace qturan
