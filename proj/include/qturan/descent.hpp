#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qturan/bounds.hpp"
#include "qturan/graph.hpp"
#include "qturan/spectral.hpp"

namespace qturan {

struct DescentStep {
    std::size_t order = 0;
    double q = 0.0;
    double min_entry = 0.0;
    /// Position in the current graph, and the matching label in the input.
    Vertex min_entry_vertex = 0;
    Vertex original_vertex = 0;
    /// All current positions within cmp_tol of the minimum entry.
    std::vector<Vertex> tie_set;
    std::size_t min_degree = 0;
    double lemma32_slack = 0.0;
    double residual = 0.0;
    std::optional<bool> mind_holds;
    std::optional<bool> dv_growth_holds;
    std::optional<bool> dv_exceeds_reference;
    /// Whether min_entry_vertex was deleted to produce the next step.
    bool deleted = false;
    std::optional<std::string> graph6;
};

enum class StopReason { min_degree_exceeded, order_floor, q_dropped_below_reference };

std::string to_string(StopReason reason);

struct DescentTrace {
    std::vector<DescentStep> steps;
    StopReason stop_reason = StopReason::order_floor;

    std::size_t deletions() const;
};

struct DescentOptions {
    std::size_t floor = 1;
    Tolerance tol{};
    bool keep_graphs = false;
    /// Stop as soon as q(H_i) falls below the reference value for order i.
    bool stop_below_reference = false;
    /// Reference q for order n; defaults to q(T(n,r)).
    std::function<double(std::size_t)> reference_q;
};

/// Deletes min-Perron-entry vertices until the minimum degree exceeds
/// (pi - eps) n or the order reaches the floor. Validates `params`.
DescentTrace descent_run(const Graph& h, const CriterionParams& params, const DescentOptions& options = {});

/// delta - x^2 (q^2 - 2 q delta + n delta), x the smallest Perron entry.
double lemma_min_check(const Graph& g, const Tolerance& tol = {});
double lemma_min_check(const Graph& g, const SpectralResult& perron);

/// x^2 < (1-eps)/n when q(H) >= reference_q and delta(H) <= (pi - eps) n;
/// nothing when either premise fails.
std::optional<bool> lemma_mind_check(const Graph& h, const SpectralResult& perron, double reference_q,
                                     const CriterionParams& params, const Tolerance& tol = {});
std::optional<bool> lemma_mind_check(const Graph& h, double reference_q, const CriterionParams& params,
                                     const Tolerance& tol = {});

/// For the min-entry vertex u, when q(H) >= reference_q_n and
/// x_u^2 < (1-eps)/n: whether q(H-u) >= q(H)(1 - (1-eps/6)/(n-1)) and
/// whether q(H-u) > reference_q_n1.
std::pair<std::optional<bool>, std::optional<bool>> lemma_dv_check(const Graph& h, Vertex u,
                                                                   const SpectralResult& perron,
                                                                   const CriterionParams& params,
                                                                   double reference_q_n, double reference_q_n1,
                                                                   const Tolerance& tol = {});

/// q(T(n,r)), the default reference.
double turan_reference_q(std::size_t n, std::size_t r, const Tolerance& tol = {});

nlohmann::json to_json(const DescentTrace& trace);

} // namespace qturan
