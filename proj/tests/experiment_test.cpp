#include "cda/experiment.hpp"

#include "cda/errors.hpp"
#include "cda/report_io.hpp"

#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>

using namespace cda;

namespace {

SimConfig quick_cfg() {
    SimConfig cfg;
    cfg.steps = 500;
    cfg.runs = 8;
    cfg.master_seed = 1001;
    cfg.scenario = Scenario::Compare;
    cfg.workers = 1;
    return cfg;
}

std::string json_without_wall_clock(const Report& report) {
    std::ostringstream out;
    write_report_json(report, out);
    nlohmann::json doc = nlohmann::json::parse(out.str());
    doc.erase("wall_clock_ms");
    return doc.dump(2);
}

} // namespace

TEST_CASE("identical configs reproduce the report exactly") {
    const SimConfig cfg = quick_cfg();
    const Report a = run_experiment(cfg);
    const Report b = run_experiment(cfg);
    CHECK(json_without_wall_clock(a) == json_without_wall_clock(b));
}

TEST_CASE("worker count does not change the statistics") {
    SimConfig sequential = quick_cfg();
    sequential.workers = 1;
    SimConfig parallel = quick_cfg();
    parallel.workers = 8;
    const Report a = run_experiment(sequential);
    const Report b = run_experiment(parallel);
    CHECK(json_without_wall_clock(a) == json_without_wall_clock(b));
}

TEST_CASE("compare mode pairs the two scenarios on matched seeds") {
    const Report report = run_experiment(quick_cfg());
    CHECK(report.paired_seeds);
    REQUIRE(report.scenarios.size() == 2);
    CHECK(report.scenarios[0].name == "base");
    CHECK(report.scenarios[1].name == "hft");
    CHECK(report.scenarios[0].run_seeds == report.scenarios[1].run_seeds);
}

TEST_CASE("single-scenario reports carry only that scenario") {
    SimConfig cfg = quick_cfg();
    cfg.scenario = Scenario::Hft;
    const Report report = run_experiment(cfg);
    CHECK(!report.paired_seeds);
    REQUIRE(report.scenarios.size() == 1);
    CHECK(report.scenarios[0].name == "hft");
    CHECK(report.scenarios[0].hft_enabled);
}

TEST_CASE("JSON report round-trips every numeric field") {
    const Report report = run_experiment(quick_cfg());
    std::ostringstream out;
    write_report_json(report, out);
    const nlohmann::json doc = nlohmann::json::parse(out.str());

    CHECK(doc.at("schema_version") == 1);
    const auto& base = doc.at("scenarios").at(0);
    const auto& agg = base.at("aggregates");
    REQUIRE(report.scenarios[0].aggregates.has_value());
    const AggregateStats& expected = *report.scenarios[0].aggregates;
    CHECK(agg.at("volume").at("mean").get<double>() == expected.volume.mean);
    CHECK(agg.at("volatility").at("sd").get<double>() == expected.volatility.sd);
    CHECK(agg.at("txn_probability").at("stderr").get<double>() ==
          expected.txn_probability.std_error);

    const auto& per_run = base.at("per_run");
    REQUIRE(per_run.size() == report.scenarios[0].per_run.size());
    CHECK(per_run.at(3).at("volume").get<double>() ==
          report.scenarios[0].per_run[3].volume);
}

TEST_CASE("CSV has one row per scenario-metric pair plus the header") {
    const Report report = run_experiment(quick_cfg());
    std::ostringstream out;
    write_report_csv(report, out);
    std::istringstream in(out.str());
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 1 + 2 * 5);  // header + scenarios x metrics
}

TEST_CASE("trade log line count matches total trades when enabled") {
    SimConfig cfg = quick_cfg();
    cfg.trade_log_path = "unused";  // enables capture; files written separately
    const Report report = run_experiment(cfg);

    double total_trades = 0;
    for (const ScenarioResult& scenario : report.scenarios) {
        for (const RunStats& stats : scenario.per_run) {
            total_trades += 2.0 * stats.volume;  // volume is the two-market average
        }
    }

    std::ostringstream out;
    write_trade_log_csv(report, out);
    std::istringstream in(out.str());
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 1 + static_cast<int>(total_trades));
}

TEST_CASE("histogram csv lists every scenario bin") {
    const Report report = run_experiment(quick_cfg());
    std::ostringstream out;
    write_histogram_csv(report, out);
    std::istringstream in(out.str());
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    const int bins_per_scenario = static_cast<int>(report.scenarios[0].pooled_histogram.size());
    CHECK(rows == 1 + 2 * bins_per_scenario);
}

TEST_CASE("degenerate zero-step experiment reports zero volume") {
    SimConfig cfg;
    cfg.steps = 0;
    cfg.runs = 1;
    cfg.scenario = Scenario::Base;
    cfg.workers = 1;
    const Report report = run_experiment(cfg);
    REQUIRE(report.scenarios.size() == 1);
    const RunStats& only = report.scenarios[0].per_run.front();
    CHECK(only.volume == 0.0);
    CHECK(only.txn_probability == 0.0);
    CHECK(!only.mean_price.has_value());
    CHECK(!report.scenarios[0].aggregates.has_value());

    std::ostringstream out;
    write_report_json(report, out);
    const nlohmann::json doc = nlohmann::json::parse(out.str());
    CHECK(doc.at("scenarios").at(0).at("per_run").at(0).at("mean_price").is_null());
}

TEST_CASE("invalid configs are rejected up front") {
    SimConfig cfg = quick_cfg();
    cfg.runs = 0;
    CHECK_THROWS_AS(run_experiment(cfg), ConfigError);

    SimConfig bad_prices = quick_cfg();
    bad_prices.price_min = 10;
    bad_prices.price_max = 5;
    CHECK_THROWS_AS(run_experiment(bad_prices), ConfigError);

    SimConfig bad_bins = quick_cfg();
    bad_bins.bin_width = 0.0;
    CHECK_THROWS_AS(run_experiment(bad_bins), ConfigError);
}

TEST_CASE("seed text parses as decimal or hex") {
    CHECK(parse_seed("42") == 42);
    CHECK(parse_seed("0x2A") == 42);
    CHECK(parse_seed("0xffffffffffffffff") == 0xFFFFFFFFFFFFFFFFULL);
    CHECK_THROWS_AS(parse_seed("forty-two"), ConfigError);
    CHECK_THROWS_AS(parse_seed(""), ConfigError);
    CHECK_THROWS_AS(parse_seed("0x"), ConfigError);
}

TEST_CASE("format_double emits shortest round-trip forms") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(3580.0) == "3580");
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()).empty());
}
