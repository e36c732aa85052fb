#include "cda/config.hpp"
#include "cda/errors.hpp"
#include "cda/experiment.hpp"
#include "cda/oracle.hpp"
#include "cda/report_io.hpp"
#include "cda/version.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

void print_summary(const cda::Report& report) {
    std::fprintf(stderr, "%-8s %12s %12s %10s %14s %12s\n", "scenario", "price",
                 "volatility", "volume", "probability", "fill_rate");
    for (const cda::ScenarioResult& scenario : report.scenarios) {
        if (scenario.aggregates) {
            const cda::AggregateStats& agg = *scenario.aggregates;
            std::fprintf(stderr, "%-8s %12.4f %12.4f %10.2f %14.4f %12.4f\n",
                         scenario.name.c_str(), agg.mean_price.mean, agg.volatility.mean,
                         agg.volume.mean, agg.txn_probability.mean,
                         agg.order_fill_rate.mean);
        } else {
            const cda::RunStats& only = scenario.per_run.front();
            std::fprintf(stderr, "%-8s %12.4f %12.4f %10.2f %14.4f %12.4f\n",
                         scenario.name.c_str(), only.mean_price.value_or(0.0),
                         only.volatility.value_or(0.0), only.volume,
                         only.txn_probability, only.order_fill_rate);
        }
    }
    std::fprintf(stderr, "wall clock: %.1f ms\n", report.wall_clock_ms);
}

int run_simulate(const cda::SimConfig& cfg) {
    const cda::Report report = cda::run_experiment(cfg);
    cda::write_report_files(report);
    print_summary(report);
    return 0;
}

int run_oracle(const cda::SmallConfig& cfg) {
    const cda::ExactExpectations exact = cda::exact_expectations(cfg);
    std::cout << "sequences: " << exact.sequences << '\n'
              << "total_trades: " << exact.total_trades << '\n'
              << "expected_volume: " << exact.expected_volume.str() << " = "
              << exact.expected_volume.to_double() << '\n'
              << "volume_variance: " << exact.volume_variance.str() << " = "
              << exact.volume_variance.to_double() << '\n'
              << "txn_probability: " << exact.txn_probability.str() << " = "
              << exact.txn_probability.to_double() << '\n';
    if (exact.mean_price) {
        std::cout << "mean_price: " << exact.mean_price->str() << " = "
                  << exact.mean_price->to_double() << '\n'
                  << "price_variance: " << exact.price_variance->str() << " = "
                  << exact.price_variance->to_double() << '\n'
                  << "volatility: " << *exact.volatility << '\n';
    } else {
        std::cout << "mean_price: undefined (no sequence trades)\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-venue continuous double auction simulator with a "
                 "cross-venue arbitrage coupler"};
    app.set_version_flag("--version", cda::kEngineVersion);
    app.require_subcommand(1);

    cda::SimConfig cfg;
    std::string seed_text = "42";
    std::string scenario = "compare";
    std::string format = "json";

    CLI::App* simulate = app.add_subcommand(
        "simulate", "Run the seeded Monte Carlo experiment and write a report");
    simulate->add_option("--scenario", scenario, "base, hft, or compare")
        ->check(CLI::IsMember({"base", "hft", "compare"}))
        ->required();
    simulate->add_option("--steps", cfg.steps, "time steps per run");
    simulate->add_option("--runs", cfg.runs, "number of independent runs");
    simulate->add_option("--seed", seed_text, "master seed (decimal or 0x-hex)");
    simulate->add_option("--price-min", cfg.price_min, "lowest order price tick");
    simulate->add_option("--price-max", cfg.price_max, "highest order price tick");
    simulate->add_option("--bin-width", cfg.bin_width, "histogram bin width");
    simulate->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"csv", "json"}));
    simulate->add_option("--out", cfg.out_path, "report path (stdout when omitted)");
    simulate->add_option("--trade-log", cfg.trade_log_path, "per-trade CSV path");
    simulate->add_option("--hist-out", cfg.hist_path, "pooled histogram CSV path");
    simulate->add_option("--workers", cfg.workers, "worker threads (0 = auto)");
    simulate->add_flag("--continuous-prices", cfg.continuous_prices,
                       "draw real-valued prices instead of integer ticks");

    cda::SmallConfig oracle_cfg;
    std::vector<int> oracle_prices = {1, 2};
    CLI::App* oracle = app.add_subcommand(
        "oracle", "Exact expectations for a small instance by full enumeration");
    oracle->add_option("--steps", oracle_cfg.steps, "time steps per run");
    oracle->add_option("--prices", oracle_prices, "allowed price set, e.g. --prices 1,2")
        ->delimiter(',');
    oracle->add_option("--markets", oracle_cfg.markets, "1 or 2");
    oracle->add_flag("--hft", oracle_cfg.hft_enabled, "enable the cross-market coupler");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2; --help/--version exit 0
    }

    try {
        if (simulate->parsed()) {
            cfg.master_seed = cda::parse_seed(seed_text);
            cfg.scenario = scenario == "base"  ? cda::Scenario::Base
                           : scenario == "hft" ? cda::Scenario::Hft
                                               : cda::Scenario::Compare;
            cfg.format = format == "csv" ? cda::ReportFormat::Csv : cda::ReportFormat::Json;
            cda::validate(cfg);
            return run_simulate(cfg);
        }
        oracle_cfg.prices = oracle_prices;
        if (oracle->count("--hft") != 0 && oracle->count("--markets") == 0) {
            oracle_cfg.markets = 2;
        }
        return run_oracle(oracle_cfg);
    } catch (const cda::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
