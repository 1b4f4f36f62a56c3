#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qturan/bounds.hpp"
#include "qturan/spectral.hpp"

namespace qturan {

struct SweepOptions {
    /// Defaults per suite when unset (7 for per-graph bounds, 8 for searches).
    std::optional<std::size_t> n_max;
    std::optional<std::size_t> r;
    std::size_t jobs = 0;
    Tolerance tol{};
    /// Forbidden graphs for the density suite; a default list when empty.
    std::vector<std::string> forbid;
    std::uint64_t seed = 1;
    std::size_t samples = 10000;
    std::size_t random_graphs = 1000;
    bool keep_reports = true;
};

struct SweepResult {
    std::string suite;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    /// Report-only findings; never counted as violations.
    std::uint64_t report_only = 0;
    std::vector<BoundReport> reports;
    std::vector<std::string> failures;
    nlohmann::json details = nlohmann::json::object();

    bool ok() const { return violations == 0; }
};

std::vector<std::string> suite_names();

/// Runs one named exhaustive or sampled check. Throws InputError for an
/// unknown suite.
SweepResult run_suite(const std::string& suite, const SweepOptions& options = {});

nlohmann::json to_json(const SweepResult& result);

/// Deterministic quasi-random point in (0,1): radical inverse of `index`
/// (index >= 1) in the given prime base.
double radical_inverse(std::uint64_t index, std::uint64_t base);

} // namespace qturan
