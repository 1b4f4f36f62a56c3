#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qturan/graph.hpp"

namespace qturan {

/// Largest order the canonical labeller accepts.
inline constexpr std::size_t canonical_max_order = 64;

/// Canonical labelling by equitable refinement plus individualisation
/// search, pruned with automorphisms discovered along the way.
/// Returns `lab` with lab[position] = original vertex. Relabelling any
/// isomorphic copy by its own `lab` yields the identical graph.
std::vector<Vertex> canonical_labeling(const Graph& g);

/// `g` relabelled so that lab[k] becomes vertex k.
Graph canonical_form(const Graph& g);

std::string canonical_graph6(const Graph& g);

/// Upper-triangle bits of the canonical form packed into one word.
/// Only defined for order <= 11.
std::uint64_t canonical_key(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

} // namespace qturan
