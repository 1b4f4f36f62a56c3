#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qturan/families.hpp"
#include "qturan/graph.hpp"
#include "qturan/spectral.hpp"

namespace qturan {

/// Largest order the built-in generator handles.
inline constexpr std::size_t enumeration_max_order = 9;

/// One canonical representative per isomorphism class of order n, in a
/// fixed order. Results for each n are cached after the first call.
/// Throws InputError beyond enumeration_max_order.
std::shared_ptr<const std::vector<Graph>> enumerate_graphs(std::size_t n, std::size_t jobs = 0);

struct CorpusError {
    std::size_t line = 0;
    std::string message;
};

struct Corpus {
    std::vector<Graph> graphs;
    std::vector<CorpusError> errors;
};

/// Newline-separated graph6. Lenient mode records bad lines and continues;
/// strict mode throws InputError naming the first bad line.
Corpus ingest_corpus(const std::filesystem::path& path, bool strict = false);

struct SearchOptions {
    std::size_t jobs = 0;
    Tolerance tol{};
    /// Graph6 file to scan instead of the built-in enumeration.
    std::optional<std::filesystem::path> corpus;
    bool strict_corpus = false;
};

/// Graphs of order n from the corpus (if set), the built-in generator
/// (n <= 9), or graphs<n>.g6 under $QTURAN_CORPUS_DIR.
std::shared_ptr<const std::vector<Graph>> graphs_of_order(std::size_t n, const SearchOptions& options,
                                                          std::vector<std::string>* notes = nullptr);

struct SearchReport {
    std::size_t n = 0;
    std::string forbidden;
    std::string mode;
    /// Largest edge count among F-free graphs scanned.
    std::uint64_t ex_edges = 0;
    /// Largest q among the graphs the mode ranks (F-free, or the family).
    double max_q = 0.0;
    /// Canonical graph6 of every maximiser, sorted.
    std::vector<std::string> extremal_graphs;
    std::uint64_t scanned = 0;
    std::uint64_t admissible = 0;
    double elapsed_seconds = 0.0;
    bool report_only = false;
    std::vector<std::string> notes;
    nlohmann::json extra = nlohmann::json::object();
};

nlohmann::json to_json(const SearchReport& report);

/// ex(n, F) with all extremal classes. Exact integer comparisons.
SearchReport extremal_edges(std::size_t n, const Graph& f, const SearchOptions& options = {});

/// Max q over F-free graphs of order n with all maximisers. Candidates
/// within cmp_tol are re-solved at eig_tol/100 before the final ranking.
SearchReport extremal_q(std::size_t n, const Graph& f, const SearchOptions& options = {});

struct DensityPoint {
    std::size_t n = 0;
    std::uint64_t ex = 0;
    std::uint64_t pairs = 0;
    double ratio = 0.0;
};

struct DensityEstimate {
    std::vector<DensityPoint> points;
    double limit_hint = 0.0;
    /// ex(n)/C(n,2) <= ex(n-1)/C(n-1,2) at every step, by cross-multiplying.
    bool non_increasing = true;
};

DensityEstimate turan_density_estimate(const Graph& f, std::size_t n_max, const SearchOptions& options = {});
nlohmann::json to_json(const DensityEstimate& estimate);

/// Structural membership tests for the two conjectured extremal families.
bool in_family_L(const Graph& g, std::size_t s, std::size_t t);
bool in_family_Y(const Graph& g, std::size_t t);

struct KstExploration {
    std::size_t n = 0, s = 0, t = 0;
    SearchReport maxima;
    std::vector<bool> maximiser_in_L;
    std::vector<bool> maximiser_in_Y;
    std::optional<double> q_L;
    std::optional<double> q_Y;
    std::vector<std::string> notes;
};

KstExploration explore_kst_conjecture(std::size_t n, std::size_t s, std::size_t t,
                                      const SearchOptions& options = {});
nlohmann::json to_json(const KstExploration& exploration);

/// Max q over F-free graphs with minimum degree > (pi - eps) n, where
/// pi = 1 - 1/r and r = chi(F) - 1. Records whether T(n,r) belongs to the
/// family and attains the maximum.
SearchReport min_degree_family(std::size_t n, const Graph& f, double epsilon, const SearchOptions& options = {});

} // namespace qturan
