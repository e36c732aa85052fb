#include "cda/experiment.hpp"

#include "cda/rng.hpp"
#include "cda/simulation.hpp"
#include "cda/version.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace cda {

namespace {

HistogramSpec histogram_spec(const SimConfig& cfg) {
    return HistogramSpec{static_cast<double>(cfg.price_min),
                         static_cast<double>(cfg.price_max), cfg.bin_width};
}

struct RunOutput {
    RunStats stats;
    std::vector<Trade> merged_trades;
};

RunOutput execute_run(const SimConfig& cfg, std::uint64_t seed, bool keep_trades) {
    const HistogramSpec spec = histogram_spec(cfg);
    RunResult result = Simulation::run(cfg, seed);

    RunStats per_market[2];
    for (int m = 0; m < 2; ++m) {
        per_market[m] = result.trades[m].empty()
                            ? empty_run_stats(cfg.steps, spec)
                            : run_stats(result.trades[m], cfg.steps, spec);
    }

    RunOutput out;
    out.stats = per_market_average(per_market[0], per_market[1]);
    if (keep_trades) {
        out.merged_trades.reserve(result.trades[0].size() + result.trades[1].size());
        out.merged_trades.insert(out.merged_trades.end(), result.trades[0].begin(),
                                 result.trades[0].end());
        out.merged_trades.insert(out.merged_trades.end(), result.trades[1].begin(),
                                 result.trades[1].end());
        std::sort(out.merged_trades.begin(), out.merged_trades.end(),
                  [](const Trade& a, const Trade& b) {
                      return a.step != b.step ? a.step < b.step : a.market_id < b.market_id;
                  });
    }
    return out;
}

ScenarioResult run_scenario(const SimConfig& cfg, bool hft, const char* name) {
    SimConfig run_cfg = cfg;
    run_cfg.hft_enabled = hft;

    ScenarioResult scenario;
    scenario.name = name;
    scenario.hft_enabled = hft;
    scenario.run_seeds.resize(cfg.runs);
    for (std::uint32_t k = 0; k < cfg.runs; ++k) {
        scenario.run_seeds[k] = derive_run_seed(cfg.master_seed, k);
    }

    const bool keep_trades = !cfg.trade_log_path.empty();
    std::vector<RunOutput> outputs(cfg.runs);

    unsigned workers = cfg.workers != 0 ? cfg.workers : std::thread::hardware_concurrency();
    workers = std::clamp<unsigned>(workers, 1, cfg.runs);
    if (workers == 1) {
        for (std::uint32_t k = 0; k < cfg.runs; ++k) {
            outputs[k] = execute_run(run_cfg, scenario.run_seeds[k], keep_trades);
        }
    } else {
        std::atomic<std::uint32_t> next_run{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::uint32_t k = next_run.fetch_add(1); k < cfg.runs;
                     k = next_run.fetch_add(1)) {
                    outputs[k] = execute_run(run_cfg, scenario.run_seeds[k], keep_trades);
                }
            });
        }
        for (std::thread& t : pool) t.join();
    }

    scenario.per_run.reserve(cfg.runs);
    for (RunOutput& out : outputs) {
        scenario.per_run.push_back(std::move(out.stats));
        if (keep_trades) scenario.trade_logs.push_back(std::move(out.merged_trades));
    }

    if (cfg.runs >= 2) {
        scenario.aggregates = aggregate(scenario.per_run);
    }

    scenario.pooled_histogram = scenario.per_run.front().histogram;
    for (HistogramBin& bin : scenario.pooled_histogram) bin.count = 0;
    for (const RunStats& stats : scenario.per_run) {
        for (std::size_t i = 0; i < scenario.pooled_histogram.size(); ++i) {
            scenario.pooled_histogram[i].count += stats.histogram[i].count;
        }
    }
    return scenario;
}

} // namespace

Report run_experiment(const SimConfig& cfg) {
    validate(cfg);
    const auto start = std::chrono::steady_clock::now();

    Report report;
    report.cfg = cfg;
    report.engine_version = kEngineVersion;
    report.paired_seeds = cfg.scenario == Scenario::Compare;

    if (cfg.scenario == Scenario::Base || cfg.scenario == Scenario::Compare) {
        report.scenarios.push_back(run_scenario(cfg, false, "base"));
    }
    if (cfg.scenario == Scenario::Hft || cfg.scenario == Scenario::Compare) {
        report.scenarios.push_back(run_scenario(cfg, true, "hft"));
    }

    const auto elapsed = std::chrono::steady_clock::now() - start;
    report.wall_clock_ms =
        std::chrono::duration<double, std::milli>(elapsed).count();
    return report;
}

} // namespace cda
