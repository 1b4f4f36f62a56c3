#include "qturan/descent.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "qturan/families.hpp"
#include "qturan/graph6.hpp"

namespace qturan {

namespace {

std::pair<double, Vertex> min_entry(const SpectralResult& perron)
{
    const auto it = std::min_element(perron.vector.begin(), perron.vector.end());
    return {*it, static_cast<Vertex>(it - perron.vector.begin())};
}

std::size_t min_degree(const Graph& g) { return g.order() == 0 ? 0 : degree_profile(g).min_degree; }

bool degree_exit(std::size_t delta, std::size_t n, const CriterionParams& params)
{
    return static_cast<double>(delta) > (params.pi() - params.epsilon) * static_cast<double>(n);
}

} // namespace

std::string to_string(StopReason reason)
{
    switch (reason) {
    case StopReason::min_degree_exceeded:
        return "min_degree_exceeded";
    case StopReason::order_floor:
        return "order_floor";
    case StopReason::q_dropped_below_reference:
        return "q_dropped_below_reference";
    }
    return "unknown";
}

std::size_t DescentTrace::deletions() const
{
    return static_cast<std::size_t>(
        std::count_if(steps.begin(), steps.end(), [](const DescentStep& s) { return s.deleted; }));
}

double turan_reference_q(std::size_t n, std::size_t r, const Tolerance& tol)
{
    if (n <= 1)
        return 0.0;
    return q_radius(turan(n, std::min(n, r)), tol).radius;
}

double lemma_min_check(const Graph& g, const SpectralResult& perron)
{
    if (g.order() == 0)
        throw InputError("min-entry check needs n >= 1");
    const double x = min_entry(perron).first;
    const double q = perron.radius;
    const double n = static_cast<double>(g.order());
    const double delta = static_cast<double>(min_degree(g));
    return delta - x * x * (q * q - 2.0 * q * delta + n * delta);
}

double lemma_min_check(const Graph& g, const Tolerance& tol)
{
    if (g.order() == 0)
        throw InputError("min-entry check needs n >= 1");
    return lemma_min_check(g, q_radius(g, tol));
}

std::optional<bool> lemma_mind_check(const Graph& h, const SpectralResult& perron, double reference_q,
                                     const CriterionParams& params, const Tolerance& tol)
{
    const std::size_t n = h.order();
    if (n == 0)
        return std::nullopt;
    if (perron.radius < reference_q - tol.cmp_tol || degree_exit(min_degree(h), n, params))
        return std::nullopt;
    const double x = min_entry(perron).first;
    return x * x < (1.0 - params.epsilon) / static_cast<double>(n);
}

std::optional<bool> lemma_mind_check(const Graph& h, double reference_q, const CriterionParams& params,
                                     const Tolerance& tol)
{
    if (h.order() == 0)
        return std::nullopt;
    return lemma_mind_check(h, q_radius(h, tol), reference_q, params, tol);
}

std::pair<std::optional<bool>, std::optional<bool>> lemma_dv_check(const Graph& h, Vertex u,
                                                                   const SpectralResult& perron,
                                                                   const CriterionParams& params,
                                                                   double reference_q_n, double reference_q_n1,
                                                                   const Tolerance& tol)
{
    const std::size_t n = h.order();
    if (n < 2 || u >= n)
        return {};
    const double x = perron.vector[u];
    if (perron.radius < reference_q_n - tol.cmp_tol || !(x * x < (1.0 - params.epsilon) / static_cast<double>(n)))
        return {};
    const double q_next = q_radius(delete_vertex(h, u), tol).radius;
    const double growth = perron.radius * (1.0 - (1.0 - params.epsilon / 6.0) / static_cast<double>(n - 1));
    return {q_next >= growth - tol.cmp_tol, q_next > reference_q_n1};
}

DescentTrace descent_run(const Graph& h, const CriterionParams& params, const DescentOptions& options)
{
    params.validate();
    options.tol.validate();
    if (options.floor < 1 || h.order() <= options.floor)
        throw InputError("descent needs |H| > floor >= 1");

    std::map<std::size_t, double> cache;
    auto reference = [&](std::size_t n) {
        auto it = cache.find(n);
        if (it != cache.end())
            return it->second;
        const double v =
            options.reference_q ? options.reference_q(n) : turan_reference_q(n, params.r, options.tol);
        cache.emplace(n, v);
        return v;
    };

    DescentTrace trace;
    Graph current = h;
    std::vector<Vertex> labels(h.order());
    std::iota(labels.begin(), labels.end(), Vertex{0});

    while (true) {
        const std::size_t n = current.order();
        const SpectralResult perron = q_radius(current, options.tol);
        DescentStep step;
        step.order = n;
        step.q = perron.radius;
        step.residual = perron.residual;
        step.min_entry = min_entry(perron).first;
        for (Vertex v = 0; v < n; ++v)
            if (perron.vector[v] <= step.min_entry + options.tol.cmp_tol)
                step.tie_set.push_back(v);
        step.min_entry_vertex = step.tie_set.front();
        step.original_vertex = labels[step.min_entry_vertex];
        step.min_degree = min_degree(current);
        step.lemma32_slack = lemma_min_check(current, perron);
        step.mind_holds = lemma_mind_check(current, perron, reference(n), params, options.tol);
        if (options.keep_graphs)
            step.graph6 = to_graph6(current);

        std::optional<StopReason> stop;
        if (degree_exit(step.min_degree, n, params))
            stop = StopReason::min_degree_exceeded;
        else if (n <= options.floor)
            stop = StopReason::order_floor;
        else if (options.stop_below_reference && perron.radius < reference(n) - options.tol.cmp_tol)
            stop = StopReason::q_dropped_below_reference;

        if (stop) {
            trace.steps.push_back(std::move(step));
            trace.stop_reason = *stop;
            return trace;
        }

        const auto dv = lemma_dv_check(current, step.min_entry_vertex, perron, params, reference(n),
                                       reference(n - 1), options.tol);
        step.dv_growth_holds = dv.first;
        step.dv_exceeds_reference = dv.second;
        step.deleted = true;
        const Vertex u = step.min_entry_vertex;
        trace.steps.push_back(std::move(step));
        current = delete_vertex(current, u);
        labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(u));
    }
}

nlohmann::json to_json(const DescentTrace& trace)
{
    nlohmann::json steps = nlohmann::json::array();
    auto opt = [](const std::optional<bool>& b) { return b ? nlohmann::json(*b) : nlohmann::json(nullptr); };
    for (const auto& s : trace.steps) {
        nlohmann::json j{{"order", s.order},
                         {"q", s.q},
                         {"minEntry", s.min_entry},
                         {"minEntryVertex", s.min_entry_vertex},
                         {"originalVertex", s.original_vertex},
                         {"tieSet", s.tie_set},
                         {"minDegree", s.min_degree},
                         {"lemma32Slack", s.lemma32_slack},
                         {"residual", s.residual},
                         {"mindHolds", opt(s.mind_holds)},
                         {"dvGrowthHolds", opt(s.dv_growth_holds)},
                         {"dvExceedsReference", opt(s.dv_exceeds_reference)},
                         {"deleted", s.deleted}};
        if (s.graph6)
            j["graph6"] = *s.graph6;
        steps.push_back(std::move(j));
    }
    return {{"stopReason", to_string(trace.stop_reason)}, {"deletions", trace.deletions()}, {"steps", steps}};
}

} // namespace qturan
