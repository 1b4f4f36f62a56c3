#include "qturan/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "qturan/canonical.hpp"
#include "qturan/chromatic.hpp"
#include "qturan/descent.hpp"
#include "qturan/families.hpp"
#include "qturan/graph6.hpp"
#include "qturan/parallel.hpp"
#include "qturan/search.hpp"
#include "qturan/subgraph.hpp"

namespace qturan {

namespace {

constexpr std::size_t max_listed_failures = 20;

void record_failure(SweepResult& res, std::string message)
{
    ++res.violations;
    if (res.failures.size() < max_listed_failures)
        res.failures.push_back(std::move(message));
}

std::string describe(const std::string& id, const BoundEntry& e)
{
    return id + " " + e.name + ": lhs=" + std::to_string(e.lhs) + " rhs=" + std::to_string(e.rhs) +
           (e.flag_agrees() ? "" : " (equality flag disagrees)");
}

using Evaluator = std::function<std::vector<BoundEntry>(const Graph&)>;

struct Partial {
    std::vector<BoundReport> reports;
    std::uint64_t checked = 0;
};

// Evaluates every graph of order 1..n_max; graphs mapped to no entries are
// skipped.
void per_graph(SweepResult& res, std::size_t n_max, const SweepOptions& options, const Evaluator& eval)
{
    std::vector<std::vector<BoundReport>> parts;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto graphs = enumerate_graphs(n, options.jobs);
        auto part = parallel_reduce(
            graphs->size(), 128, options.jobs, Partial{},
            [&](std::size_t begin, std::size_t end) {
                Partial p;
                for (std::size_t i = begin; i < end; ++i) {
                    auto entries = eval((*graphs)[i]);
                    if (entries.empty())
                        continue;
                    ++p.checked;
                    p.reports.push_back({to_graph6((*graphs)[i]), std::move(entries)});
                }
                return p;
            },
            [](Partial a, Partial b) {
                a.checked += b.checked;
                std::move(b.reports.begin(), b.reports.end(), std::back_inserter(a.reports));
                return a;
            });
        res.checked += part.checked;
        parts.push_back(std::move(part.reports));
    }
    auto merged = merge_reports(std::move(parts));
    for (const auto& report : merged) {
        for (const auto& e : report.entries) {
            if (e.report_only && !e.holds)
                ++res.report_only;
            if (e.hard_violation())
                record_failure(res, describe(report.graph_id, e));
        }
    }
    res.reports = std::move(merged);
}

bool clique_free(const Graph& g, std::size_t r) { return !find_clique(g, r + 1).has_value(); }

SweepResult chain_suite(const SweepOptions& o)
{
    SweepResult res;
    per_graph(res, o.n_max.value_or(7), o, [&](const Graph& g) { return check_bound_chain(g, o.tol); });
    return res;
}

SweepResult merris_suite(const SweepOptions& o)
{
    SweepResult res;
    per_graph(res, o.n_max.value_or(7), o, [&](const Graph& g) -> std::vector<BoundEntry> {
        if (g.edge_count() == 0)
            return {};
        return {check_merris(g, o.tol)};
    });
    return res;
}

SweepResult lower_degree_suite(const SweepOptions& o)
{
    SweepResult res;
    std::uint64_t equalities = 0;
    per_graph(res, o.n_max.value_or(7), o, [&](const Graph& g) -> std::vector<BoundEntry> {
        if (g.edge_count() == 0)
            return {};
        return {check_q_lower_degree(g, o.tol)};
    });
    for (const auto& r : res.reports)
        equalities += r.entries.front().equality ? 1 : 0;
    res.details["equalities"] = equalities;
    return res;
}

SweepResult hofmeister_suite(const SweepOptions& o)
{
    SweepResult res;
    per_graph(res, o.n_max.value_or(7), o, [&](const Graph& g) { return std::vector{check_hofmeister(g, o.tol)}; });
    std::uint64_t equalities = 0;
    for (const auto& r : res.reports)
        equalities += r.entries.front().equality ? 1 : 0;
    res.details["equalities"] = equalities;
    return res;
}

SweepResult degree_power_suite(const SweepOptions& o)
{
    SweepResult res;
    const std::size_t r = o.r.value_or(3);
    per_graph(res, o.n_max.value_or(8), o, [&](const Graph& g) -> std::vector<BoundEntry> {
        if (!clique_free(g, r))
            return {};
        return check_degree_power(g, r, o.tol);
    });
    // Equality set of the m n form among graphs with at least one edge.
    std::map<std::size_t, std::vector<std::string>> equality;
    for (const auto& rep : res.reports) {
        const Graph g = parse_graph6(rep.graph_id);
        if (g.edge_count() > 0 && rep.entries.front().equality)
            equality[g.order()].push_back(rep.graph_id);
    }
    nlohmann::json eq = nlohmann::json::object();
    for (const auto& [n, codes] : equality)
        eq[std::to_string(n)] = codes;
    res.details["r"] = r;
    res.details["equalitySets"] = eq;
    return res;
}

SweepResult stability_suite(const SweepOptions& o)
{
    SweepResult res;
    const std::vector<std::size_t> rs = o.r ? std::vector{*o.r} : std::vector<std::size_t>{2, 3};
    nlohmann::json per_r = nlohmann::json::object();
    for (std::size_t r : rs) {
        SweepResult part;
        per_graph(part, o.n_max.value_or(8), o, [&](const Graph& g) -> std::vector<BoundEntry> {
            if (!clique_free(g, r))
                return {};
            return {check_min_degree_stability(g, r)};
        });
        std::uint64_t premise = 0;
        for (const auto& rep : part.reports)
            premise += rep.entries.front().note != "premise false" ? 1 : 0;
        per_r[std::to_string(r)] = {{"checked", part.checked}, {"premiseHolds", premise}};
        res.checked += part.checked;
        res.violations += part.violations;
        for (auto& f : part.failures)
            if (res.failures.size() < max_listed_failures)
                res.failures.push_back(std::move(f));
        std::move(part.reports.begin(), part.reports.end(), std::back_inserter(res.reports));
    }
    res.details["byR"] = per_r;
    return res;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p)
{
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            if (coin(rng))
                b.add_edge(u, v);
    return std::move(b).build();
}

BoundEntry lemma_min_entry(const Graph& g, const Tolerance& tol)
{
    const double slack = lemma_min_check(g, tol);
    const double delta = static_cast<double>(degree_profile(g).min_degree);
    return make_entry("lemma_min", delta - slack, delta, tol.cmp_tol);
}

SweepResult lemma_min_suite(const SweepOptions& o)
{
    SweepResult res;
    per_graph(res, o.n_max.value_or(7), o, [&](const Graph& g) { return std::vector{lemma_min_entry(g, o.tol)}; });

    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> order(8, 60);
    std::uniform_real_distribution<double> density(0.05, 0.95);
    std::vector<Graph> sample;
    for (std::size_t i = 0; i < o.random_graphs; ++i) {
        const std::size_t n = order(rng);
        sample.push_back(random_graph(rng, n, density(rng)));
    }
    auto reports = parallel_reduce(
        sample.size(), 16, o.jobs, std::vector<BoundReport>{},
        [&](std::size_t begin, std::size_t end) {
            std::vector<BoundReport> out;
            for (std::size_t i = begin; i < end; ++i)
                out.push_back({to_graph6(sample[i]), {lemma_min_entry(sample[i], o.tol)}});
            return out;
        },
        [](std::vector<BoundReport> a, std::vector<BoundReport> b) {
            std::move(b.begin(), b.end(), std::back_inserter(a));
            return a;
        });
    for (const auto& rep : reports) {
        ++res.checked;
        if (rep.entries.front().hard_violation())
            record_failure(res, describe(rep.graph_id, rep.entries.front()));
    }
    std::move(reports.begin(), reports.end(), std::back_inserter(res.reports));
    res.details["randomGraphs"] = o.random_graphs;
    res.details["seed"] = o.seed;
    return res;
}

SweepResult facts_suite(const SweepOptions& o)
{
    SweepResult res;
    // Near-boundary points first, then radical-inverse samples.
    const double tiny = 1e-9;
    std::vector<std::pair<double, double>> fact1 = {
        {0.5, 0.25}, {0.999, 0.499}, {1 - tiny, 0.5 - tiny}, {tiny, 0.5 - tiny}, {1 - tiny, tiny}, {tiny, tiny}};
    std::vector<double> fact2 = {2.0, 1.001, 1e6, 1.0 + 1e-9};
    for (std::uint64_t i = 1; i <= o.samples; ++i) {
        fact1.emplace_back(radical_inverse(i, 2), 0.5 * radical_inverse(i, 3));
        // x - 1 spread log-uniformly over [1e-6, 1e6].
        fact2.push_back(1.0 + std::pow(10.0, 12.0 * radical_inverse(i, 5) - 6.0));
    }
    for (auto [a, x] : fact1) {
        ++res.checked;
        if (!check_fact1(a, x))
            record_failure(res, "log inequality a=" + std::to_string(a) + " x=" + std::to_string(x));
    }
    for (double x : fact2) {
        ++res.checked;
        if (!check_fact2(x))
            record_failure(res, "log-difference inequality x=" + std::to_string(x));
    }
    res.details["fact1Samples"] = fact1.size();
    res.details["fact2Samples"] = fact2.size();
    return res;
}

SweepResult graph6_suite(const SweepOptions& o)
{
    SweepResult res;
    for (std::size_t n = 0; n <= o.n_max.value_or(7); ++n) {
        for (const Graph& g : *enumerate_graphs(n, o.jobs)) {
            ++res.checked;
            const std::string code = to_graph6(g);
            if (!(parse_graph6(code) == g) || to_graph6(parse_graph6(code)) != code)
                record_failure(res, "round trip failed for " + code);
        }
    }
    const std::pair<const char*, Graph> vectors[] = {
        {"@", complete_graph(1)}, {"A_", complete_graph(2)}, {"Bw", complete_graph(3)}};
    for (const auto& [code, g] : vectors) {
        ++res.checked;
        if (!(parse_graph6(code) == g))
            record_failure(res, std::string("hand-built vector ") + code + " parsed incorrectly");
    }
    return res;
}

SweepResult turan_suite(const SweepOptions& o)
{
    SweepResult res;
    nlohmann::json rows = nlohmann::json::array();
    SearchOptions so;
    so.jobs = o.jobs;
    so.tol = o.tol;
    for (std::size_t n = 3; n <= o.n_max.value_or(8); ++n) {
        for (std::size_t r = 2; r < n; ++r) {
            if (o.r && *o.r != r)
                continue;
            const auto rep = extremal_edges(n, complete_graph(r + 1), so);
            const std::string expected = canonical_graph6(turan(n, r));
            const bool ok = rep.ex_edges == turan_edges(n, r) && rep.extremal_graphs == std::vector{expected};
            ++res.checked;
            if (!ok)
                record_failure(res, "ex(" + std::to_string(n) + ",K" + std::to_string(r + 1) +
                                        ") = " + std::to_string(rep.ex_edges) + " with " +
                                        std::to_string(rep.extremal_graphs.size()) + " extremal classes");
            rows.push_back({{"n", n}, {"r", r}, {"ex", rep.ex_edges}, {"turan", turan_edges(n, r)},
                            {"extremal", rep.extremal_graphs}, {"ok", ok}});
        }
    }
    res.details["rows"] = rows;
    return res;
}

std::vector<std::string> complete_bipartite_codes(std::size_t n)
{
    std::vector<std::string> codes;
    for (std::size_t a = 1; 2 * a <= n; ++a)
        codes.push_back(canonical_graph6(complete_bipartite(a, n - a)));
    std::sort(codes.begin(), codes.end());
    return codes;
}

SweepResult q_turan_suite(const SweepOptions& o)
{
    SweepResult res;
    nlohmann::json rows = nlohmann::json::array();
    SearchOptions so;
    so.jobs = o.jobs;
    so.tol = o.tol;
    for (std::size_t n = 3; n <= o.n_max.value_or(8); ++n) {
        for (std::size_t r = 2; r < n; ++r) {
            if (o.r && *o.r != r)
                continue;
            const auto rep = extremal_q(n, complete_graph(r + 1), so);
            const double target = r == 2 ? static_cast<double>(n) : q_radius(turan(n, r), o.tol).radius;
            const auto expected = r == 2 ? complete_bipartite_codes(n) : std::vector{canonical_graph6(turan(n, r))};
            const bool ok = std::abs(rep.max_q - target) <= o.tol.cmp_tol && rep.extremal_graphs == expected;
            ++res.checked;
            if (!ok)
                record_failure(res, "max q over K" + std::to_string(r + 1) + "-free order " + std::to_string(n) +
                                        " = " + std::to_string(rep.max_q) + " with " +
                                        std::to_string(rep.extremal_graphs.size()) + " maximisers");
            rows.push_back({{"n", n}, {"r", r}, {"maxQ", rep.max_q}, {"target", target},
                            {"maximisers", rep.extremal_graphs}, {"ok", ok}});
        }
    }
    res.details["rows"] = rows;
    return res;
}

SweepResult density_suite(const SweepOptions& o)
{
    SweepResult res;
    const std::vector<std::string> defaults = {"clique:3", "clique:4", "wheel:1,5", "book:3,2", "kstplus:2,2",
                                               "cycle:5"};
    const auto& specs = o.forbid.empty() ? defaults : o.forbid;
    SearchOptions so;
    so.jobs = o.jobs;
    so.tol = o.tol;
    nlohmann::json out = nlohmann::json::object();
    for (const auto& spec : specs) {
        const Graph f = build_family(parse_family_spec_or_throw(spec));
        const auto est = turan_density_estimate(f, o.n_max.value_or(8), so);
        ++res.checked;
        if (!est.non_increasing)
            record_failure(res, spec + ": ex(n,F)/C(n,2) increased");
        out[spec] = to_json(est);
    }
    res.details["estimates"] = out;
    return res;
}

using Suite = SweepResult (*)(const SweepOptions&);

const std::vector<std::pair<std::string, Suite>>& registry()
{
    static const std::vector<std::pair<std::string, Suite>> suites = {
        {"chain", chain_suite},
        {"merris", merris_suite},
        {"lower-degree", lower_degree_suite},
        {"hofmeister", hofmeister_suite},
        {"turan", turan_suite},
        {"q-turan", q_turan_suite},
        {"degree-power", degree_power_suite},
        {"stability", stability_suite},
        {"lemma-min", lemma_min_suite},
        {"facts", facts_suite},
        {"graph6", graph6_suite},
        {"density", density_suite},
    };
    return suites;
}

} // namespace

double radical_inverse(std::uint64_t index, std::uint64_t base)
{
    double result = 0.0;
    double f = 1.0 / static_cast<double>(base);
    while (index > 0) {
        result += f * static_cast<double>(index % base);
        index /= base;
        f /= static_cast<double>(base);
    }
    return result;
}

std::vector<std::string> suite_names()
{
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry())
        names.push_back(name);
    return names;
}

SweepResult run_suite(const std::string& suite, const SweepOptions& options)
{
    options.tol.validate();
    for (const auto& [name, fn] : registry()) {
        if (name == suite) {
            SweepResult res = fn(options);
            res.suite = name;
            if (!options.keep_reports)
                res.reports.clear();
            return res;
        }
    }
    std::string list;
    for (const auto& name : suite_names())
        list += (list.empty() ? "" : ", ") + name;
    throw InputError("unknown suite '" + suite + "'; expected one of: " + list);
}

nlohmann::json to_json(const SweepResult& r)
{
    return {{"suite", r.suite},       {"checked", r.checked},   {"violations", r.violations},
            {"reportOnly", r.report_only}, {"failures", r.failures}, {"details", r.details}};
}

} // namespace qturan
