#include "qturan/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <json.hpp>

#include "qturan/chromatic.hpp"
#include "qturan/families.hpp"

namespace qturan {

namespace {

double sum_squared_degrees(const Graph& g)
{
    double s = 0.0;
    for (auto d : g.degrees())
        s += static_cast<double>(d) * static_cast<double>(d);
    return s;
}

void require_clique_free(const Graph& g, std::size_t r)
{
    if (r == 0)
        throw InputError("r must be at least 1");
    if (auto clique = find_clique(g, r + 1))
        throw PreconditionError("graph contains K_" + std::to_string(r + 1), std::move(*clique));
}

double part_fraction(std::size_t r) { return 1.0 - 1.0 / static_cast<double>(r); }

std::uint64_t turan_edges_capped(std::size_t n, std::size_t r)
{
    return turan_edges(n, std::min(n, r));
}

double turan_q(std::size_t n, std::size_t r)
{
    if (n <= 1)
        return 0.0;
    return q_radius(turan(n, std::min(n, r))).radius;
}

} // namespace

BoundEntry make_entry(std::string name, double lhs, double rhs, double cmp_tol, bool strict)
{
    BoundEntry e;
    e.name = std::move(name);
    e.lhs = lhs;
    e.rhs = rhs;
    e.slack = rhs - lhs;
    e.strict = strict;
    e.holds = strict ? e.slack > cmp_tol : e.slack >= -cmp_tol;
    e.equality = std::abs(e.slack) <= cmp_tol;
    return e;
}

std::vector<BoundReport> merge_reports(std::vector<std::vector<BoundReport>> parts)
{
    std::vector<BoundReport> all;
    for (auto& part : parts)
        for (auto& r : part)
            all.push_back(std::move(r));
    std::stable_sort(all.begin(), all.end(),
                     [](const BoundReport& a, const BoundReport& b) { return a.graph_id < b.graph_id; });
    return all;
}

void write_jsonl(std::ostream& out, const std::vector<BoundReport>& reports)
{
    for (const auto& report : reports) {
        for (const auto& e : report.entries) {
            nlohmann::json j{{"graph6", report.graph_id}, {"bound_name", e.name}, {"lhs", e.lhs},
                             {"rhs", e.rhs},          {"slack", e.slack},     {"holds", e.holds},
                             {"equality", e.equality}};
            if (e.report_only)
                j["reportOnly"] = true;
            if (e.expected_equality)
                j["expectedEquality"] = *e.expected_equality;
            if (!e.note.empty())
                j["note"] = e.note;
            out << j.dump() << '\n';
        }
    }
}

void write_csv(std::ostream& out, const std::vector<BoundReport>& reports)
{
    out << "graph6,bound_name,lhs,rhs,slack,holds,equality\n";
    char buf[64];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    for (const auto& report : reports)
        for (const auto& e : report.entries)
            out << report.graph_id << ',' << e.name << ',' << num(e.lhs) << ',' << num(e.rhs) << ','
                << num(e.slack) << ',' << (e.holds ? "true" : "false") << ','
                << (e.equality ? "true" : "false") << '\n';
}

void CriterionParams::validate() const
{
    if (!(epsilon > 0.0 && epsilon < 0.5))
        throw InputError("epsilon must satisfy 0 < eps < 1/2");
    if (!(sigma < epsilon / 36.0))
        throw InputError("sigma must satisfy sigma < eps/36");
    if (r < 3)
        throw InputError("r must be at least 3");
}

GraphSpectra compute_spectra(const Graph& g, const Tolerance& tol)
{
    if (g.order() == 0)
        throw InputError("spectra of the empty graph are undefined");
    return {q_radius(g, tol).radius, adjacency_radius(g, tol).radius};
}

std::vector<BoundEntry> check_turan_edges(const Graph& g, std::size_t r, const Tolerance& tol)
{
    require_clique_free(g, r);
    const double n = static_cast<double>(g.order());
    const double m = static_cast<double>(g.edge_count());
    return {make_entry("turan_edges", m, part_fraction(r) * n * n / 2.0, tol.cmp_tol),
            make_entry("turan_edges_sharp", m, static_cast<double>(turan_edges_capped(g.order(), r)), tol.cmp_tol)};
}

BoundEntry check_wilf(const Graph& g, std::size_t r, const Tolerance& tol)
{
    require_clique_free(g, r);
    const double lambda = g.order() == 0 ? 0.0 : adjacency_radius(g, tol).radius;
    return make_entry("wilf", lambda, part_fraction(r) * static_cast<double>(g.order()), tol.cmp_tol);
}

std::vector<BoundEntry> check_bound_chain(const Graph& g, const GraphSpectra& s, const Tolerance& tol)
{
    const double n = static_cast<double>(g.order());
    const double avg = 4.0 * static_cast<double>(g.edge_count()) / n;
    const double max_deg = static_cast<double>(degree_profile(g).max_degree);
    return {make_entry("chain_average_degree", avg, 2.0 * s.lambda, tol.cmp_tol),
            make_entry("chain_adjacency", 2.0 * s.lambda, s.q, tol.cmp_tol),
            make_entry("chain_max_degree", s.q, 2.0 * max_deg, tol.cmp_tol)};
}

std::vector<BoundEntry> check_bound_chain(const Graph& g, const Tolerance& tol)
{
    return check_bound_chain(g, compute_spectra(g, tol), tol);
}

std::vector<BoundEntry> check_abreu_nikiforov(const Graph& g, std::size_t r, const Tolerance& tol)
{
    require_clique_free(g, r);
    const double q = g.order() == 0 ? 0.0 : q_radius(g, tol).radius;
    const double n = static_cast<double>(g.order());
    return {make_entry("abreu_nikiforov", q, 2.0 * part_fraction(r) * n, tol.cmp_tol),
            make_entry("abreu_nikiforov_sharp", q, turan_q(g.order(), r), tol.cmp_tol)};
}

BoundEntry check_merris(const Graph& g, const GraphSpectra& s, const Tolerance& tol)
{
    double best = -1.0;
    for (Vertex v = 0; v < g.order(); ++v) {
        const std::size_t d = g.degree(v);
        if (d == 0)
            continue;
        double sum = 0.0;
        for (Vertex w : g.neighbors(v))
            sum += static_cast<double>(g.degree(w));
        best = std::max(best, static_cast<double>(d) + sum / static_cast<double>(d));
    }
    if (best < 0.0)
        throw InputError("neighbour-degree bound is undefined when every vertex is isolated");
    return make_entry("merris", s.q, best, tol.cmp_tol);
}

BoundEntry check_merris(const Graph& g, const Tolerance& tol)
{
    if (g.edge_count() == 0)
        throw InputError("neighbour-degree bound is undefined when every vertex is isolated");
    return check_merris(g, compute_spectra(g, tol), tol);
}

bool edge_degree_sums_constant(const Graph& g)
{
    std::optional<std::size_t> sum;
    for (const Edge& e : g.edges()) {
        const std::size_t s = g.degree(e.first) + g.degree(e.second);
        if (sum && *sum != s)
            return false;
        sum = s;
    }
    return true;
}

BoundEntry check_q_lower_degree(const Graph& g, const GraphSpectra& s, const Tolerance& tol)
{
    if (g.edge_count() == 0)
        throw InputError("degree lower bound on q needs at least one edge");
    auto e = make_entry("q_lower_degree", sum_squared_degrees(g) / static_cast<double>(g.edge_count()), s.q,
                        tol.cmp_tol);
    e.expected_equality = edge_degree_sums_constant(g);
    return e;
}

BoundEntry check_q_lower_degree(const Graph& g, const Tolerance& tol)
{
    if (g.edge_count() == 0)
        throw InputError("degree lower bound on q needs at least one edge");
    return check_q_lower_degree(g, compute_spectra(g, tol), tol);
}

namespace {

// Two-colours one component; returns the (side-0, side-1) degree sets or
// nothing if the component has an odd cycle.
struct SideDegrees {
    std::vector<std::size_t> side[2];
};

std::optional<SideDegrees> bipartite_sides(const Graph& g, const std::vector<Vertex>& component)
{
    std::vector<int> colour(g.order(), -1);
    SideDegrees out;
    std::vector<Vertex> stack{component.front()};
    colour[component.front()] = 0;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        out.side[colour[v]].push_back(g.degree(v));
        for (Vertex w : g.neighbors(v)) {
            if (colour[w] < 0) {
                colour[w] = 1 - colour[v];
                stack.push_back(w);
            } else if (colour[w] == colour[v]) {
                return std::nullopt;
            }
        }
    }
    return out;
}

bool all_equal(const std::vector<std::size_t>& v)
{
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

// Product d(u)d(v) if the component is regular or semi-regular bipartite.
std::optional<std::size_t> walk_constant(const Graph& g, const std::vector<Vertex>& component)
{
    std::vector<std::size_t> degs;
    for (Vertex v : component)
        degs.push_back(g.degree(v));
    if (all_equal(degs))
        return degs.front() * degs.front();
    auto sides = bipartite_sides(g, component);
    if (!sides || !all_equal(sides->side[0]) || !all_equal(sides->side[1]))
        return std::nullopt;
    return sides->side[0].front() * sides->side[1].front();
}

} // namespace

bool is_semiregular_bipartite(const Graph& g)
{
    if (g.order() == 0)
        return true;
    // Collect one orientation per component, then look for a consistent pair.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& c : connected_components(g)) {
        if (c.size() == 1) {
            pairs.emplace_back(0, 0);
            continue;
        }
        auto sides = bipartite_sides(g, c);
        if (!sides || !all_equal(sides->side[0]) || !all_equal(sides->side[1]))
            return false;
        pairs.emplace_back(sides->side[0].front(), sides->side[1].front());
    }
    // Isolated vertices fit on a degree-0 side only if some side has degree 0,
    // i.e. every component is isolated.
    bool any_isolated = false, any_edge = false;
    for (auto [a, b] : pairs) {
        any_isolated = any_isolated || (a == 0 && b == 0);
        any_edge = any_edge || a > 0;
    }
    if (any_isolated && any_edge)
        return false;
    if (!any_edge)
        return true;
    const std::size_t a = pairs.front().first, b = pairs.front().second;
    return std::all_of(pairs.begin(), pairs.end(),
                       [&](auto p) { return (p.first == a && p.second == b) || (p.first == b && p.second == a); });
}

bool hofmeister_equality_expected(const Graph& g)
{
    std::optional<std::size_t> value;
    for (const auto& c : connected_components(g)) {
        auto w = walk_constant(g, c);
        if (!w || (value && *value != *w))
            return false;
        value = w;
    }
    return true;
}

BoundEntry check_hofmeister(const Graph& g, const GraphSpectra& s, const Tolerance& tol)
{
    auto e = make_entry("hofmeister", sum_squared_degrees(g) / static_cast<double>(g.order()), s.lambda * s.lambda,
                        tol.cmp_tol);
    e.expected_equality = hofmeister_equality_expected(g);
    return e;
}

BoundEntry check_hofmeister(const Graph& g, const Tolerance& tol)
{
    return check_hofmeister(g, compute_spectra(g, tol), tol);
}

std::vector<BoundEntry> check_degree_power(const Graph& g, std::size_t r, const Tolerance& tol)
{
    if (r == 0)
        throw InputError("r must be at least 1");
    const double n = static_cast<double>(g.order());
    const double m = static_cast<double>(g.edge_count());
    const double p = part_fraction(r);
    const double lhs = sum_squared_degrees(g);
    return {make_entry("degree_power", lhs, 2.0 * p * m * n, tol.cmp_tol),
            make_entry("degree_power_cube", lhs, p * p * n * n * n, tol.cmp_tol)};
}

BoundEntry check_fact21_margin(std::size_t n, std::size_t r, const Tolerance& tol)
{
    if (r < 2 || r > n)
        throw InputError("margin check needs 2 <= r <= n");
    const double q = q_radius(turan(n, r), tol).radius;
    return make_entry("fact21_margin", static_cast<double>(n) / 4.0 * q,
                      static_cast<double>(turan_edges(n, r)) + 1.0, tol.cmp_tol, true);
}

BoundEntry check_dl1(const std::map<std::size_t, std::uint64_t>& ex_seq, const CriterionParams& params,
                     std::size_t n, const Tolerance& tol)
{
    auto at = ex_seq.find(n);
    auto before = n == 0 ? ex_seq.end() : ex_seq.find(n - 1);
    if (at == ex_seq.end() || before == ex_seq.end())
        throw InputError("extremal sequence needs values at n = " + std::to_string(n) + " and n-1");
    const double diff = static_cast<double>(at->second) - static_cast<double>(before->second);
    const double dev = std::abs(diff - params.pi() * static_cast<double>(n));
    return make_entry("dl1", dev, params.sigma * static_cast<double>(n), tol.cmp_tol);
}

BoundEntry check_dl2(double q_gn, std::uint64_t ex_n, const CriterionParams& params, std::size_t n,
                     const Tolerance& tol)
{
    if (n == 0)
        throw InputError("dl2 needs n >= 1");
    const double dev = std::abs(q_gn - 4.0 * static_cast<double>(ex_n) / static_cast<double>(n));
    return make_entry("dl2", dev, params.sigma, tol.cmp_tol);
}

BoundEntry check_qn_estimate(double q_gn, const CriterionParams& params, std::size_t n, const Tolerance& tol)
{
    if (n == 0)
        throw InputError("q(n) estimate needs n >= 1");
    auto e = make_entry("qn_estimate", std::abs(q_gn / static_cast<double>(n) - 2.0 * params.pi()), 0.0,
                        tol.cmp_tol);
    e.report_only = true;
    return e;
}

BoundEntry check_beg_gap(double q_gn, double q_gn1, const CriterionParams& params, const Tolerance& tol)
{
    auto e = make_entry("beg_gap", std::abs(q_gn - q_gn1 - 2.0 * params.pi()), 7.0 * params.sigma, tol.cmp_tol);
    e.report_only = true;
    return e;
}

BoundEntry check_min_degree_stability(const Graph& g, std::size_t r)
{
    if (r < 2)
        throw InputError("degree stability needs r >= 2");
    const std::size_t n = g.order();
    const std::size_t delta = n == 0 ? 0 : degree_profile(g).min_degree;
    // delta > (3r-4)n/(3r-1), compared in integers.
    const bool premise = n > 0 && delta * (3 * r - 1) > (3 * r - 4) * n;
    BoundEntry e;
    e.name = "degree_stability";
    e.lhs = static_cast<double>(3 * r - 4) * static_cast<double>(n) / static_cast<double>(3 * r - 1);
    e.rhs = static_cast<double>(delta);
    e.slack = e.rhs - e.lhs;
    e.strict = true;
    e.equality = false;
    if (!premise) {
        e.holds = true;
        e.note = "premise false";
        return e;
    }
    e.holds = is_r_partite(g, r);
    e.note = e.holds ? "r-partite" : "premise holds but graph is not r-partite";
    return e;
}

bool check_fact1(double a, double x)
{
    if (!(x > 0.0 && x < 0.5 && a > 0.0 && a < 1.0))
        throw InputError("ln(1-ax)+ax+x^2 > 0 needs 0 < x < 1/2 and 0 < a < 1");
    return std::log1p(-a * x) + a * x + x * x > 0.0;
}

bool check_fact2(double x)
{
    if (!(x > 1.0) || !std::isfinite(x))
        throw InputError("log-difference inequality needs finite x > 1");
    // ln x - ln(x-1) = -ln(1 - 1/x); 1/(x-1) - 1/x = 1/(x(x-1)).
    const bool first = 1.0 / x < -std::log1p(-1.0 / x);
    const bool second = 1.0 / (x * x) < 1.0 / (x * (x - 1.0));
    return first && second;
}

} // namespace qturan
