#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qturan/graph.hpp"

namespace qturan {

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// K_{1,n-1}; vertex 0 is the centre.
Graph star_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Parts are numbered consecutively in the given order.
Graph complete_multipartite(std::span<const std::size_t> parts);

/// Balanced complete r-partite graph T(n,r). Part i has ceil((n-i)/r)
/// vertices, so earlier parts are the larger ones.
Graph turan(std::size_t n, std::size_t r);
std::vector<std::size_t> turan_part_sizes(std::size_t n, std::size_t r);
/// Exact edge count of T(n,r).
std::uint64_t turan_edges(std::size_t n, std::size_t r);

/// S(n,k) = K_k joined to an independent set of n-k vertices.
Graph split(std::size_t n, std::size_t k);
/// B(r,k) = K_r joined to I_k.
Graph generalized_book(std::size_t r, std::size_t k);
/// W(r,k) = K_r joined to C_k.
Graph wheel(std::size_t r, std::size_t k);
/// K_{s,t} with one extra edge inside the part of size s (vertices 0 and 1).
Graph kst_plus(std::size_t s, std::size_t t);
/// H(n,r,k) = K_{k-1} joined to T(n-k+1, r).
Graph h_graph(std::size_t n, std::size_t r, std::size_t k);
/// Kneser graph KG(5,2).
Graph petersen_graph();
/// `copies` disjoint copies of K_size.
Graph disjoint_cliques(std::size_t copies, std::size_t size);

enum class ConstructionStatus {
    found,
    /// Proven not to exist.
    infeasible,
    /// Search budget exhausted before a decision.
    undetermined,
};

struct Construction {
    ConstructionStatus status = ConstructionStatus::undetermined;
    std::optional<Graph> graph;
    std::string reason;

    bool found() const { return status == ConstructionStatus::found; }
};

/// Triangle-free graph on n vertices with every degree d, except that when
/// d*n is odd the last vertex has degree d-1. Circulants are tried first,
/// then an exhaustive backtracking search with a node budget.
Construction regular_triangle_free(std::size_t n, std::size_t d);

/// K_{s-1} joined to a (nearly) (t-1)-regular triangle-free graph on n-s+1
/// vertices.
Construction family_L_sample(std::size_t n, std::size_t s, std::size_t t);
/// I_{t-1} joined to a (nearly) (t-1)-regular triangle-free graph on n-t+1
/// vertices.
Construction family_Y_sample(std::size_t n, std::size_t t);

enum class FamilyKind {
    turan,
    complete,
    empty,
    cycle,
    path,
    star,
    complete_bipartite,
    split,
    generalized_book,
    wheel,
    kst,
    kst_plus,
    h_graph,
    L_family,
    Y_family,
    petersen,
    cliques,
};

/// Textual form "kind:p1,p2,..." (e.g. "turan:7,3", "book:3,2", "petersen").
struct FamilySpec {
    FamilyKind kind = FamilyKind::empty;
    std::vector<std::size_t> params;
};

std::optional<FamilySpec> parse_family_spec(std::string_view text);
/// Like parse_family_spec but throws InputError listing the valid kinds.
FamilySpec parse_family_spec_or_throw(std::string_view text);
std::string to_string(const FamilySpec& spec);
std::string family_kind_list();
/// Builds the graph; not-found constructions throw InputError with the reason.
Graph build_family(const FamilySpec& spec);

} // namespace qturan
