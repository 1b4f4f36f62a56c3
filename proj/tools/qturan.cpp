// qturan: command-line front end for the Q-index toolkit.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "qturan/bounds.hpp"
#include "qturan/chromatic.hpp"
#include "qturan/descent.hpp"
#include "qturan/families.hpp"
#include "qturan/graph6.hpp"
#include "qturan/search.hpp"
#include "qturan/spectral.hpp"
#include "qturan/subgraph.hpp"
#include "qturan/sweeps.hpp"

using namespace qturan;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

Graph parse_input(const std::string& text)
{
    // ':' never occurs in graph6, so anything with a colon is a family spec.
    if (text.find(':') != std::string::npos || parse_family_spec(text))
        return build_family(parse_family_spec_or_throw(text));
    return parse_graph6(text);
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body)
{
    if (path == "-") {
        body(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write " + path);
    body(out);
}

void print_entry(const BoundEntry& e)
{
    std::printf("  %-22s lhs=%-14.10g rhs=%-14.10g slack=%-12.4g %s%s\n", e.name.c_str(), e.lhs, e.rhs, e.slack,
                e.holds ? "holds" : "VIOLATED", e.equality ? " (equality)" : "");
}

struct Globals {
    Tolerance tol;
    std::size_t jobs = 0;
};

int cmd_q(const Globals& g, const std::string& input, const std::string& json_path)
{
    const Graph graph = parse_input(input);
    if (graph.order() == 0)
        throw InputError("graph has no vertices");
    const auto q = q_radius(graph, g.tol);
    const auto a = adjacency_radius(graph, g.tol);
    const auto prof = degree_profile(graph);
    const auto chain = check_bound_chain(graph, GraphSpectra{q.radius, a.radius}, g.tol);

    std::printf("graph6    %s\n", to_graph6(graph).c_str());
    std::printf("n         %zu\nm         %zu\n", graph.order(), graph.edge_count());
    std::printf("delta     %zu\nDelta     %zu\n", prof.min_degree, prof.max_degree);
    std::printf("q         %.12f\nlambda    %.12f\n", q.radius, a.radius);
    std::printf("residual  %.3g (%s, %llu iterations)\n", q.residual,
                q.method == SpectralMethod::power ? "power" : "dense",
                static_cast<unsigned long long>(q.iterations));
    std::printf("bound chain:\n");
    for (const auto& e : chain)
        print_entry(e);

    if (!json_path.empty()) {
        json entries = json::array();
        for (const auto& e : chain)
            entries.push_back({{"bound_name", e.name}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"slack", e.slack},
                               {"holds", e.holds}, {"equality", e.equality}});
        json j{{"graph6", to_graph6(graph)}, {"n", graph.order()},   {"m", graph.edge_count()},
               {"minDegree", prof.min_degree}, {"maxDegree", prof.max_degree}, {"q", q.radius},
               {"lambda", a.radius},          {"residual", q.residual}, {"vector", q.vector},
               {"boundChain", entries}};
        write_file(json_path, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
    }
    return exit_ok;
}

int cmd_verify(const Globals& g, const std::string& suite, SweepOptions options, const std::string& json_path,
               const std::string& csv_path, const std::string& summary_path)
{
    options.tol = g.tol;
    options.jobs = g.jobs;
    options.keep_reports = !json_path.empty() || !csv_path.empty();
    const auto res = run_suite(suite, options);

    std::printf("suite        %s\n", res.suite.c_str());
    std::printf("checked      %llu\n", static_cast<unsigned long long>(res.checked));
    std::printf("violations   %llu\n", static_cast<unsigned long long>(res.violations));
    std::printf("report-only  %llu\n", static_cast<unsigned long long>(res.report_only));
    for (const auto& f : res.failures)
        std::printf("  FAIL %s\n", f.c_str());
    if (!res.details.empty())
        std::printf("details      %s\n", res.details.dump().c_str());

    if (!json_path.empty())
        write_file(json_path, [&](std::ostream& out) { write_jsonl(out, res.reports); });
    if (!csv_path.empty())
        write_file(csv_path, [&](std::ostream& out) { write_csv(out, res.reports); });
    if (!summary_path.empty())
        write_file(summary_path, [&](std::ostream& out) { out << to_json(res).dump(2) << '\n'; });
    return res.ok() ? exit_ok : exit_violation;
}

SearchOptions search_options(const Globals& g, const std::string& corpus, bool strict)
{
    SearchOptions so;
    so.jobs = g.jobs;
    so.tol = g.tol;
    if (!corpus.empty())
        so.corpus = corpus;
    so.strict_corpus = strict;
    return so;
}

void print_report(const SearchReport& r)
{
    std::printf("n            %zu\n", r.n);
    std::printf("forbidden    %s\n", r.forbidden.c_str());
    std::printf("mode         %s%s\n", r.mode.c_str(), r.report_only ? " (report-only)" : "");
    std::printf("scanned      %llu\n", static_cast<unsigned long long>(r.scanned));
    std::printf("ex edges     %llu\n", static_cast<unsigned long long>(r.ex_edges));
    std::printf("max q        %.12f\n", r.max_q);
    std::printf("extremal     %zu\n", r.extremal_graphs.size());
    for (const auto& code : r.extremal_graphs)
        std::printf("  %s\n", code.c_str());
    for (const auto& note : r.notes)
        std::printf("note         %s\n", note.c_str());
    std::printf("elapsed      %.3fs\n", r.elapsed_seconds);
}

int cmd_search(const Globals& g, std::size_t n, const std::string& forbid, const std::string& mode,
               const std::string& corpus, bool strict, const std::string& json_path)
{
    const Graph f = parse_input(forbid);
    const auto so = search_options(g, corpus, strict);
    SearchReport r;
    if (mode == "edges")
        r = extremal_edges(n, f, so);
    else if (mode == "q")
        r = extremal_q(n, f, so);
    else
        throw InputError("mode must be 'edges' or 'q'");
    r.forbidden = forbid;
    // Only the clique case is a theorem at every n.
    r.report_only = f.edge_count() != f.order() * (f.order() - 1) / 2;
    print_report(r);
    if (!json_path.empty())
        write_file(json_path, [&](std::ostream& out) { out << to_json(r).dump(2) << '\n'; });
    return exit_ok;
}

int cmd_descent(const Globals& g, const std::string& input, double eps, std::optional<double> sigma, std::size_t r,
                std::size_t floor, bool keep_graphs, bool stop_below, const std::string& json_path)
{
    CriterionParams params;
    params.epsilon = eps;
    params.sigma = sigma.value_or(eps / 40.0);
    params.r = r;
    params.validate();
    const Graph h = parse_input(input);
    DescentOptions opts;
    opts.floor = floor;
    opts.tol = g.tol;
    opts.keep_graphs = keep_graphs;
    opts.stop_below_reference = stop_below;
    const auto trace = descent_run(h, params, opts);

    std::printf("stop reason  %s\n", to_string(trace.stop_reason).c_str());
    std::printf("deletions    %zu\n", trace.deletions());
    std::printf("%6s %14s %12s %8s %6s %12s\n", "order", "q", "min entry", "vertex", "delta", "lemma slack");
    for (const auto& s : trace.steps)
        std::printf("%6zu %14.8f %12.3e %8zu %6zu %12.3e%s\n", s.order, s.q, s.min_entry, s.original_vertex,
                    s.min_degree, s.lemma32_slack, s.deleted ? "" : "  (stop)");
    if (!json_path.empty())
        write_file(json_path, [&](std::ostream& out) { out << to_json(trace).dump(2) << '\n'; });
    bool lemma_ok = true;
    for (const auto& s : trace.steps)
        lemma_ok = lemma_ok && s.lemma32_slack >= -g.tol.cmp_tol;
    return lemma_ok ? exit_ok : exit_violation;
}

int cmd_explore(const Globals& g, std::size_t n, std::size_t s, std::size_t t, const std::string& corpus,
                const std::string& json_path)
{
    const auto e = explore_kst_conjecture(n, s, t, search_options(g, corpus, false));
    print_report(e.maxima);
    for (std::size_t i = 0; i < e.maxima.extremal_graphs.size(); ++i)
        std::printf("  %s in L: %s, in Y: %s\n", e.maxima.extremal_graphs[i].c_str(),
                    e.maximiser_in_L[i] ? "yes" : "no", e.maximiser_in_Y[i] ? "yes" : "no");
    if (e.q_L)
        std::printf("q(L sample)  %.12f\n", *e.q_L);
    if (e.q_Y)
        std::printf("q(Y sample)  %.12f\n", *e.q_Y);
    for (const auto& note : e.notes)
        std::printf("note         %s\n", note.c_str());
    if (!json_path.empty())
        write_file(json_path, [&](std::ostream& out) { out << to_json(e).dump(2) << '\n'; });
    return exit_ok;
}

int cmd_family(const Globals& g, std::size_t n, const std::string& forbid, double eps, const std::string& corpus,
               const std::string& json_path)
{
    const Graph f = parse_input(forbid);
    auto r = min_degree_family(n, f, eps, search_options(g, corpus, false));
    r.forbidden = forbid;
    print_report(r);
    std::printf("details      %s\n", r.extra.dump().c_str());
    if (!json_path.empty())
        write_file(json_path, [&](std::ostream& out) { out << to_json(r).dump(2) << '\n'; });
    return exit_ok;
}

int cmd_critical(const std::string& input, std::optional<std::size_t> k_max, const std::string& json_path)
{
    const Graph f = parse_input(input);
    const std::size_t chi = chromatic_number(f);
    const bool edge_critical = f.edge_count() > 0 && is_color_critical(f).critical;
    // An induced matching of size k needs 2k vertices.
    const std::size_t top = k_max.value_or(f.order() / 2);
    std::vector<std::size_t> ks;
    for (std::size_t k = 1; k <= top; ++k)
        if (is_color_k_critical(f, k).critical)
            ks.push_back(k);

    std::printf("graph6          %s\n", to_graph6(f).c_str());
    std::printf("chi             %zu\n", chi);
    std::printf("color-critical  %s\n", edge_critical ? "yes" : "no");
    std::printf("k-critical for  {");
    for (std::size_t i = 0; i < ks.size(); ++i)
        std::printf("%s%zu", i ? "," : "", ks[i]);
    std::printf("} (k <= %zu)\n", top);
    if (!json_path.empty()) {
        json j{{"graph6", to_graph6(f)}, {"chi", chi}, {"colorCritical", edge_critical}, {"kCritical", ks},
               {"kMax", top}};
        write_file(json_path, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Signless-Laplacian spectral extremal graph toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--eig-tol", g.tol.eig_tol, "eigen-equation residual threshold")->capture_default_str();
    app.add_option("--cmp-tol", g.tol.cmp_tol, "equality tolerance for bound slacks")->capture_default_str();
    app.add_option("--jobs", g.jobs, "worker threads (0 = hardware concurrency)");

    std::string input, json_path, csv_path, summary_path, corpus, forbid, mode = "edges", suite;
    std::size_t n = 0, s = 0, t = 0, floor = 1, r = 3;
    double eps = 0.1;
    std::optional<double> sigma;
    bool keep_graphs = false, strict = false, stop_below = false;
    SweepOptions sweep;

    auto* q = app.add_subcommand("q", "spectral summary of one graph (graph6 or family spec)");
    q->add_option("input", input)->required();
    q->add_option("--json", json_path, "write JSON ('-' for stdout)");

    auto* verify = app.add_subcommand("verify", "run an exhaustive or sampled check suite");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--n-max", sweep.n_max, "largest order scanned");
    verify->add_option("--r", sweep.r, "clique parameter r (forbid K_{r+1})");
    verify->add_option("--forbid", sweep.forbid, "forbidden family specs (density suite)");
    verify->add_option("--seed", sweep.seed, "random seed")->capture_default_str();
    verify->add_option("--samples", sweep.samples, "quasi-random samples per fact")->capture_default_str();
    verify->add_option("--json", json_path, "per-entry JSON lines");
    verify->add_option("--csv", csv_path, "per-entry CSV");
    verify->add_option("--summary", summary_path, "suite summary as JSON");

    auto* search = app.add_subcommand("search", "extremal edge or q search over all graphs of order n");
    search->add_option("n", n)->required();
    search->add_option("--forbid", forbid, "forbidden graph (family spec or graph6)")->required();
    search->add_option("--mode", mode, "edges or q")->check(CLI::IsMember({"edges", "q"}))->capture_default_str();
    search->add_option("--corpus", corpus, "graph6 corpus file to scan");
    search->add_flag("--strict", strict, "abort on the first malformed corpus line");
    search->add_option("--json", json_path, "write the report as JSON");

    auto* descent = app.add_subcommand("descent", "minimum-Perron-entry vertex deletion trace");
    descent->add_option("input", input)->required();
    descent->add_option("--eps", eps)->capture_default_str();
    descent->add_option("--sigma", sigma, "defaults to eps/40");
    descent->add_option("--r", r, "reference Turan graph T(n,r)")->capture_default_str();
    descent->add_option("--floor", floor)->capture_default_str();
    descent->add_flag("--keep-graphs", keep_graphs, "embed graph6 per step");
    descent->add_flag("--stop-below-reference", stop_below, "stop once q falls below q(T(n,r))");
    descent->add_option("--json", json_path, "write the trace as JSON");

    auto* explore = app.add_subcommand("explore", "max q over K_{s,t}^+-free graphs vs the L and Y families");
    explore->add_option("n", n)->required();
    explore->add_option("s", s)->required();
    explore->add_option("t", t)->required();
    explore->add_option("--corpus", corpus, "graph6 corpus file to scan");
    explore->add_option("--json", json_path, "write the report as JSON");

    auto* family = app.add_subcommand("family", "max q over F-free graphs with large minimum degree");
    family->add_option("n", n)->required();
    family->add_option("--forbid", forbid)->required();
    family->add_option("--eps", eps)->capture_default_str();
    family->add_option("--corpus", corpus, "graph6 corpus file to scan");
    family->add_option("--json", json_path, "write the report as JSON");

    std::optional<std::size_t> k_max;
    auto* critical = app.add_subcommand("critical", "chromatic number and colour-criticality of one graph");
    critical->add_option("input", input)->required();
    critical->add_option("--k-max", k_max, "largest matching size tried (default n/2)");
    critical->add_option("--json", json_path, "write JSON ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        g.tol.validate();
        if (*q)
            return cmd_q(g, input, json_path);
        if (*verify)
            return cmd_verify(g, suite, sweep, json_path, csv_path, summary_path);
        if (*search)
            return cmd_search(g, n, forbid, mode, corpus, strict, json_path);
        if (*descent)
            return cmd_descent(g, input, eps, sigma, r, floor, keep_graphs, stop_below, json_path);
        if (*explore)
            return cmd_explore(g, n, s, t, corpus, json_path);
        if (*family)
            return cmd_family(g, n, forbid, eps, corpus, json_path);
        if (*critical)
            return cmd_critical(input, k_max, json_path);
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_usage;
}
