#pragma once

#include <filesystem>
#include <vector>

#include "nem/config.hpp"

namespace nem {

struct StudyCell {
  RateSolution rate;
  MetricsReport metrics;  // populated when the rate solve is feasible
};

struct StudyResult {
  ScenarioSet scenarios;
  std::vector<StudyCell> cells;  // policy-major, gamma-minor order
};

// Runs every policy x gamma cell of the study: break-even rate solve, welfare
// breakdown, bill-saving / cost-shift / payback metrics. Writes rates.csv,
// welfare.csv, metrics.csv and summary.json into out_dir. Files are staged in
// a temporary directory and moved into place only after all of them are
// complete, so a failed run leaves no partial reports.
StudyResult run_study(const StudyConfig& config, const std::filesystem::path& out_dir);

// Sell rate reported for a solved tariff: the base-period rate, or the
// scenario-weighted nominal wholesale + adder level when the sell rate
// tracks the social marginal cost.
double representative_sell(const RateSolution& solution, const ScenarioSet& set);

}  // namespace nem
