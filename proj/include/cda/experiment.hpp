#pragma once

#include "cda/config.hpp"
#include "cda/metrics.hpp"
#include "cda/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cda {

struct ScenarioResult {
    std::string name;  // "base" or "hft"
    bool hft_enabled = false;
    std::vector<std::uint64_t> run_seeds;
    std::vector<RunStats> per_run;  // market-averaged stats, run-index order
    std::optional<AggregateStats> aggregates;  // absent for a single run
    std::vector<HistogramBin> pooled_histogram;  // counts summed over runs
    // Populated only when a trade log was requested: per run, both markets
    // merged in (step, market) order.
    std::vector<std::vector<Trade>> trade_logs;
};

struct Report {
    SimConfig cfg;
    bool paired_seeds = false;  // compare reuses one seed set across scenarios
    std::vector<ScenarioResult> scenarios;
    std::string engine_version;
    double wall_clock_ms = 0.0;  // provenance only; excluded from determinism
};

// Executes the configured scenario(s): `runs` independently seeded runs each,
// reduced to per-run stats and cross-run aggregates. Compare mode runs base
// and HFT on matched per-run seeds so the contrast is paired; single-scenario
// invocations are independent experiments. Runs are distributed over
// cfg.workers threads; results are identical for any worker count because
// each run owns its seed and aggregation folds in run-index order.
Report run_experiment(const SimConfig& cfg);

} // namespace cda
