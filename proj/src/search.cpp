#include "qturan/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <unordered_set>

#include "qturan/canonical.hpp"
#include "qturan/chromatic.hpp"
#include "qturan/graph6.hpp"
#include "qturan/parallel.hpp"
#include "qturan/subgraph.hpp"

namespace qturan {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t pack_upper(const Graph& g)
{
    std::uint64_t key = 0;
    std::size_t bit = 0;
    for (Vertex j = 1; j < g.order(); ++j)
        for (Vertex i = 0; i < j; ++i, ++bit)
            if (g.adjacent(i, j))
                key |= std::uint64_t{1} << bit;
    return key;
}

// Canonical augmentation: every child P + v whose canonical deletion
// reproduces P, deduplicated within the parent.
std::vector<Graph> children_of(const Graph& parent)
{
    const std::size_t n = parent.order() + 1;
    const Vertex v = n - 1;
    const std::uint64_t parent_key = canonical_key(parent);
    const auto parent_edges = parent.edges();
    const auto parent_degrees = parent.degrees();

    std::unordered_set<std::uint64_t> seen;
    std::vector<Graph> out;
    std::vector<Edge> edges;
    std::vector<Vertex> inverse(n);
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << (n - 1)); ++subset) {
        const std::size_t deg_v = static_cast<std::size_t>(std::popcount(subset));
        // The canonical deletion vertex always has maximum degree.
        bool dominated = false;
        for (Vertex u = 0; u + 1 < n && !dominated; ++u)
            dominated = parent_degrees[u] + ((subset >> u) & 1U) > deg_v;
        if (dominated)
            continue;

        edges.assign(parent_edges.begin(), parent_edges.end());
        for (Vertex u = 0; u + 1 < n; ++u)
            if ((subset >> u) & 1U)
                edges.emplace_back(u, v);
        const Graph child = Graph::from_edges(n, edges);
        const auto lab = canonical_labeling(child);
        const Vertex w = lab[n - 1];
        if (w != v && canonical_key(delete_vertex(child, w)) != parent_key)
            continue;
        for (std::size_t k = 0; k < n; ++k)
            inverse[lab[k]] = k;
        Graph canon = relabel(child, inverse);
        if (seen.insert(pack_upper(canon)).second)
            out.push_back(std::move(canon));
    }
    return out;
}

std::mutex enumeration_lock;
std::vector<std::shared_ptr<const std::vector<Graph>>> enumeration_cache;

// Running maximum with all attaining items.
template <class Key>
struct ArgMax {
    std::optional<Key> best;
    std::vector<std::size_t> items;

    void offer(Key key, std::size_t item)
    {
        if (!best || key > *best) {
            best = key;
            items.assign(1, item);
        } else if (key == *best) {
            items.push_back(item);
        }
    }

    static ArgMax fold(ArgMax a, ArgMax b)
    {
        if (!b.best)
            return a;
        if (!a.best || *b.best > *a.best)
            return b;
        if (*b.best == *a.best)
            a.items.insert(a.items.end(), b.items.begin(), b.items.end());
        return a;
    }
};

constexpr std::size_t scan_chunk = 256;

std::string describe(const Graph& f) { return to_graph6(f); }

std::vector<std::string> canonical_codes(const std::vector<Graph>& graphs, const std::vector<std::size_t>& items)
{
    std::vector<std::string> codes;
    for (std::size_t i : items)
        codes.push_back(canonical_graph6(graphs[i]));
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    return codes;
}

struct QScan {
    std::uint64_t admissible = 0;
    std::optional<std::uint64_t> max_edges;
    double best = -1.0;
    std::vector<std::pair<double, std::size_t>> candidates;
};

// F-free graphs (plus an optional extra filter) ranked by q; keeps every
// graph within cmp_tol of the running best.
template <class Filter>
QScan scan_q(const std::vector<Graph>& graphs, const Graph& f, const SearchOptions& options, Filter&& filter)
{
    const double tol = options.tol.cmp_tol;
    auto prune = [tol](QScan& s) {
        std::erase_if(s.candidates, [&](const auto& c) { return c.first < s.best - tol; });
    };
    return parallel_reduce(
        graphs.size(), scan_chunk, options.jobs, QScan{},
        [&](std::size_t begin, std::size_t end) {
            QScan s;
            for (std::size_t i = begin; i < end; ++i) {
                const Graph& g = graphs[i];
                if (!filter(g) || !is_free(g, f))
                    continue;
                ++s.admissible;
                s.max_edges = std::max<std::uint64_t>(s.max_edges.value_or(0), g.edge_count());
                const double q = g.order() == 0 ? 0.0 : q_radius(g, options.tol).radius;
                if (q < s.best - tol)
                    continue;
                s.candidates.emplace_back(q, i);
                if (q > s.best) {
                    s.best = q;
                    prune(s);
                }
            }
            return s;
        },
        [&](QScan a, QScan b) {
            a.admissible += b.admissible;
            if (b.max_edges)
                a.max_edges = std::max(a.max_edges.value_or(0), *b.max_edges);
            a.best = std::max(a.best, b.best);
            a.candidates.insert(a.candidates.end(), b.candidates.begin(), b.candidates.end());
            prune(a);
            return a;
        });
}

// Re-solve the near-ties more tightly and keep those within cmp_tol.
std::pair<double, std::vector<std::size_t>> rerank(const std::vector<Graph>& graphs, const QScan& scan,
                                                   const Tolerance& tol)
{
    Tolerance tight = tol;
    tight.eig_tol = tol.eig_tol / 100.0;
    std::vector<std::pair<double, std::size_t>> refined;
    double best = -1.0;
    for (const auto& [q, i] : scan.candidates) {
        const double r = graphs[i].order() == 0 ? 0.0 : q_radius(graphs[i], tight).radius;
        refined.emplace_back(r, i);
        best = std::max(best, r);
    }
    std::vector<std::size_t> items;
    for (const auto& [q, i] : refined)
        if (q >= best - tol.cmp_tol)
            items.push_back(i);
    return {best, items};
}

} // namespace

std::shared_ptr<const std::vector<Graph>> enumerate_graphs(std::size_t n, std::size_t jobs)
{
    if (n > enumeration_max_order)
        throw InputError("built-in enumeration stops at order " + std::to_string(enumeration_max_order) +
                         "; supply a graph6 corpus for n = " + std::to_string(n));
    std::lock_guard lock(enumeration_lock);
    if (enumeration_cache.empty()) {
        enumeration_cache.push_back(std::make_shared<const std::vector<Graph>>(1, Graph(0)));
        enumeration_cache.push_back(std::make_shared<const std::vector<Graph>>(1, Graph(1)));
    }
    while (enumeration_cache.size() <= n) {
        const auto& parents = *enumeration_cache.back();
        auto level = parallel_reduce(
            parents.size(), 16, jobs, std::vector<Graph>{},
            [&](std::size_t begin, std::size_t end) {
                std::vector<Graph> out;
                for (std::size_t i = begin; i < end; ++i) {
                    auto kids = children_of(parents[i]);
                    std::move(kids.begin(), kids.end(), std::back_inserter(out));
                }
                return out;
            },
            [](std::vector<Graph> a, std::vector<Graph> b) {
                std::move(b.begin(), b.end(), std::back_inserter(a));
                return a;
            });
        enumeration_cache.push_back(std::make_shared<const std::vector<Graph>>(std::move(level)));
    }
    return enumeration_cache[n];
}

Corpus ingest_corpus(const std::filesystem::path& path, bool strict)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open corpus file " + path.string());
    Corpus corpus;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        try {
            corpus.graphs.push_back(parse_graph6(line));
        } catch (const FormatError& e) {
            if (strict)
                throw InputError(path.string() + ":" + std::to_string(number) + ": " + e.what());
            corpus.errors.push_back({number, e.what()});
        }
    }
    if (in.bad())
        throw InputError("read error in corpus file " + path.string());
    return corpus;
}

std::shared_ptr<const std::vector<Graph>> graphs_of_order(std::size_t n, const SearchOptions& options,
                                                          std::vector<std::string>* notes)
{
    auto from_file = [&](const std::filesystem::path& path) {
        Corpus corpus = ingest_corpus(path, options.strict_corpus);
        if (notes)
            for (const auto& e : corpus.errors)
                notes->push_back(path.string() + ":" + std::to_string(e.line) + ": " + e.message);
        std::vector<Graph> selected;
        std::size_t skipped = 0;
        for (auto& g : corpus.graphs) {
            if (g.order() == n)
                selected.push_back(std::move(g));
            else
                ++skipped;
        }
        if (notes && skipped > 0)
            notes->push_back("skipped " + std::to_string(skipped) + " corpus graphs of other orders");
        return std::make_shared<const std::vector<Graph>>(std::move(selected));
    };

    if (options.corpus)
        return from_file(*options.corpus);
    if (n <= enumeration_max_order)
        return enumerate_graphs(n, options.jobs);
    if (const char* dir = std::getenv("QTURAN_CORPUS_DIR")) {
        const auto path = std::filesystem::path(dir) / ("graphs" + std::to_string(n) + ".g6");
        if (std::filesystem::exists(path))
            return from_file(path);
    }
    throw InputError("order " + std::to_string(n) + " exceeds the built-in enumeration; pass --corpus or set " +
                     "QTURAN_CORPUS_DIR to a directory holding graphs" + std::to_string(n) + ".g6");
}

nlohmann::json to_json(const SearchReport& r)
{
    nlohmann::json j{{"n", r.n},
                     {"forbidden", r.forbidden},
                     {"mode", r.mode},
                     {"exEdges", r.ex_edges},
                     {"maxQ", r.max_q},
                     {"extremalGraphs", r.extremal_graphs},
                     {"scanned", r.scanned},
                     {"admissible", r.admissible},
                     {"elapsedSeconds", r.elapsed_seconds},
                     {"reportOnly", r.report_only},
                     {"notes", r.notes}};
    for (auto it = r.extra.begin(); it != r.extra.end(); ++it)
        j[it.key()] = it.value();
    return j;
}

SearchReport extremal_edges(std::size_t n, const Graph& f, const SearchOptions& options)
{
    const auto start = Clock::now();
    SearchReport report;
    report.n = n;
    report.forbidden = describe(f);
    report.mode = "edges";
    const auto graphs = graphs_of_order(n, options, &report.notes);

    struct EdgeScan {
        std::uint64_t admissible = 0;
        ArgMax<std::uint64_t> best;
    };
    const auto scan = parallel_reduce(
        graphs->size(), scan_chunk, options.jobs, EdgeScan{},
        [&](std::size_t begin, std::size_t end) {
            EdgeScan s;
            for (std::size_t i = begin; i < end; ++i) {
                const Graph& g = (*graphs)[i];
                // Only graphs that could reach the current maximum need the
                // subgraph test.
                if (s.best.best && g.edge_count() < *s.best.best)
                    continue;
                if (!is_free(g, f))
                    continue;
                ++s.admissible;
                s.best.offer(g.edge_count(), i);
            }
            return s;
        },
        [](EdgeScan a, EdgeScan b) {
            a.admissible += b.admissible;
            a.best = ArgMax<std::uint64_t>::fold(std::move(a.best), std::move(b.best));
            return a;
        });

    report.scanned = graphs->size();
    report.admissible = scan.admissible;
    if (scan.best.best) {
        report.ex_edges = *scan.best.best;
        report.extremal_graphs = canonical_codes(*graphs, scan.best.items);
        double q = 0.0;
        for (std::size_t i : scan.best.items)
            if (n > 0)
                q = std::max(q, q_radius((*graphs)[i], options.tol).radius);
        report.max_q = q;
    } else {
        report.notes.push_back("no F-free graph scanned");
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

SearchReport extremal_q(std::size_t n, const Graph& f, const SearchOptions& options)
{
    const auto start = Clock::now();
    SearchReport report;
    report.n = n;
    report.forbidden = describe(f);
    report.mode = "q";
    const auto graphs = graphs_of_order(n, options, &report.notes);
    const auto scan = scan_q(*graphs, f, options, [](const Graph&) { return true; });
    report.scanned = graphs->size();
    report.admissible = scan.admissible;
    report.ex_edges = scan.max_edges.value_or(0);
    if (scan.candidates.empty()) {
        report.notes.push_back("no F-free graph scanned");
    } else {
        const auto [best, items] = rerank(*graphs, scan, options.tol);
        report.max_q = best;
        report.extremal_graphs = canonical_codes(*graphs, items);
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

DensityEstimate turan_density_estimate(const Graph& f, std::size_t n_max, const SearchOptions& options)
{
    const std::size_t chi = chromatic_number(f);
    if (chi < 2)
        throw InputError("density estimate needs a forbidden graph with at least one edge");
    DensityEstimate est;
    est.limit_hint = 1.0 - 1.0 / static_cast<double>(chi - 1);
    for (std::size_t n = std::max<std::size_t>(f.order(), 2); n <= n_max; ++n) {
        SearchOptions per_n = options;
        per_n.corpus.reset();
        const auto report = extremal_edges(n, f, per_n);
        DensityPoint p;
        p.n = n;
        p.ex = report.ex_edges;
        p.pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        p.ratio = static_cast<double>(p.ex) / static_cast<double>(p.pairs);
        if (!est.points.empty()) {
            const auto& prev = est.points.back();
            if (p.ex * prev.pairs > prev.ex * p.pairs)
                est.non_increasing = false;
        }
        est.points.push_back(p);
    }
    return est;
}

nlohmann::json to_json(const DensityEstimate& estimate)
{
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : estimate.points)
        points.push_back({{"n", p.n}, {"ex", p.ex}, {"pairs", p.pairs}, {"ratio", p.ratio}});
    return {{"points", points}, {"limitHint", estimate.limit_hint}, {"nonIncreasing", estimate.non_increasing}};
}

namespace {

// Triangle-free, every degree d except at most one vertex of degree d-1
// when the degree sum would otherwise be odd.
bool nearly_regular_triangle_free(const Graph& g, std::size_t d)
{
    if (triangle_count(g) != 0)
        return false;
    std::size_t low = 0;
    for (auto deg : g.degrees()) {
        if (deg == d)
            continue;
        if (deg + 1 == d && d > 0)
            ++low;
        else
            return false;
    }
    if (low == 0)
        return true;
    return low == 1 && (d * g.order()) % 2 == 1;
}

} // namespace

bool in_family_L(const Graph& g, std::size_t s, std::size_t t)
{
    const std::size_t n = g.order();
    if (s < 1 || t < 2 || n < s)
        return false;
    std::vector<Vertex> universal;
    for (Vertex v = 0; v < n && universal.size() < s - 1; ++v)
        if (g.degree(v) == n - 1)
            universal.push_back(v);
    if (universal.size() < s - 1)
        return false;
    return nearly_regular_triangle_free(delete_vertices(g, universal), t - 1);
}

bool in_family_Y(const Graph& g, std::size_t t)
{
    const std::size_t n = g.order();
    if (t < 2 || n < t)
        return false;
    const std::size_t k = t - 1;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != n - k)
            continue;
        std::vector<Vertex> side;
        for (Vertex u = 0; u < n; ++u)
            if (!g.adjacent(v, u))
                side.push_back(u);
        if (side.size() != k)
            continue;
        // The side must be independent and joined to everything else.
        const bool joined = std::all_of(side.begin(), side.end(), [&](Vertex u) {
            if (g.degree(u) != n - k)
                return false;
            return std::none_of(side.begin(), side.end(), [&](Vertex x) { return g.adjacent(u, x); });
        });
        if (!joined)
            continue;
        return nearly_regular_triangle_free(delete_vertices(g, side), t - 1);
    }
    return false;
}

KstExploration explore_kst_conjecture(std::size_t n, std::size_t s, std::size_t t, const SearchOptions& options)
{
    if (s < 2 || s > t)
        throw InputError("conjecture exploration needs 2 <= s <= t");
    KstExploration out;
    out.n = n;
    out.s = s;
    out.t = t;
    const Graph f = kst_plus(s, t);
    out.maxima = extremal_q(n, f, options);
    out.maxima.forbidden = "kstplus:" + std::to_string(s) + "," + std::to_string(t);
    out.maxima.report_only = true;

    std::vector<Graph> maximisers;
    for (const auto& code : out.maxima.extremal_graphs) {
        const Graph g = parse_graph6(code);
        out.maximiser_in_L.push_back(in_family_L(g, s, t));
        out.maximiser_in_Y.push_back(in_family_Y(g, t));
    }

    auto sample_q = [&](const Construction& c, const char* name) -> std::optional<double> {
        if (!c.found()) {
            out.notes.push_back(std::string(name) + " sample unavailable: " + c.reason);
            return std::nullopt;
        }
        if (!is_free(*c.graph, f))
            out.notes.push_back(std::string(name) + " sample contains the forbidden graph");
        return q_radius(*c.graph, options.tol).radius;
    };
    out.q_L = sample_q(family_L_sample(n, s, t), "L");
    out.q_Y = sample_q(family_Y_sample(n, t), "Y");
    return out;
}

nlohmann::json to_json(const KstExploration& e)
{
    nlohmann::json j = to_json(e.maxima);
    j["s"] = e.s;
    j["t"] = e.t;
    j["maximiserInL"] = e.maximiser_in_L;
    j["maximiserInY"] = e.maximiser_in_Y;
    j["qL"] = e.q_L ? nlohmann::json(*e.q_L) : nlohmann::json(nullptr);
    j["qY"] = e.q_Y ? nlohmann::json(*e.q_Y) : nlohmann::json(nullptr);
    if (e.q_L && e.q_Y)
        j["qLMinusQY"] = *e.q_L - *e.q_Y;
    for (const auto& note : e.notes)
        j["notes"].push_back(note);
    return j;
}

SearchReport min_degree_family(std::size_t n, const Graph& f, double epsilon, const SearchOptions& options)
{
    const auto start = Clock::now();
    const std::size_t chi = chromatic_number(f);
    if (chi < 3)
        throw InputError("minimum-degree family needs chi(F) >= 3");
    const std::size_t r = chi - 1;
    const double pi = 1.0 - 1.0 / static_cast<double>(r);
    const double threshold = (pi - epsilon) * static_cast<double>(n);

    SearchReport report;
    report.n = n;
    report.forbidden = describe(f);
    report.mode = "min-degree";
    const auto graphs = graphs_of_order(n, options, &report.notes);
    auto in_family = [&](const Graph& g) {
        const std::size_t delta = g.order() == 0 ? 0 : degree_profile(g).min_degree;
        return static_cast<double>(delta) > threshold;
    };
    const auto scan = scan_q(*graphs, f, options, in_family);
    report.scanned = graphs->size();
    report.admissible = scan.admissible;
    report.ex_edges = scan.max_edges.value_or(0);

    const Graph t = turan(n, std::min(n, r));
    const std::size_t turan_delta = n == 0 ? 0 : degree_profile(t).min_degree;
    const bool turan_member = in_family(t) && is_free(t, f);
    report.extra["r"] = r;
    report.extra["threshold"] = threshold;
    report.extra["turanMinDegree"] = turan_delta;
    report.extra["turanMinDegreeFormula"] = (r - 1) * n / r;
    report.extra["turanInFamily"] = turan_member;

    if (scan.candidates.empty()) {
        report.notes.push_back("family is empty");
        report.extra["turanAttainsMax"] = false;
    } else {
        const auto [best, items] = rerank(*graphs, scan, options.tol);
        report.max_q = best;
        report.extremal_graphs = canonical_codes(*graphs, items);
        const std::string tc = canonical_graph6(t);
        report.extra["turanAttainsMax"] =
            std::find(report.extremal_graphs.begin(), report.extremal_graphs.end(), tc) !=
            report.extremal_graphs.end();
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

} // namespace qturan
