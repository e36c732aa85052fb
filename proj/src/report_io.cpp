#include "cda/report_io.hpp"

#include "cda/errors.hpp"
#include "cda/version.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cda {

namespace {

using nlohmann::json;

std::string hex_seed(std::uint64_t seed) {
    std::ostringstream out;
    out << "0x" << std::hex << seed;
    return out.str();
}

// NaN-valued metrics (undefined for a run set) serialize as JSON null.
json num_or_null(double value) {
    if (std::isnan(value)) return nullptr;
    return value;
}

json opt_or_null(const std::optional<double>& value) {
    if (!value) return nullptr;
    return *value;
}

json summary_json(const MetricSummary& summary) {
    return json{{"mean", num_or_null(summary.mean)},
                {"sd", num_or_null(summary.sd)},
                {"stderr", num_or_null(summary.std_error)},
                {"ci95_lo", num_or_null(summary.ci_lo)},
                {"ci95_hi", num_or_null(summary.ci_hi)},
                {"runs", summary.n}};
}

json histogram_json(const std::vector<HistogramBin>& bins) {
    json rows = json::array();
    for (const HistogramBin& bin : bins) {
        rows.push_back(json{{"lo", bin.lo}, {"hi", bin.hi}, {"count", bin.count}});
    }
    return rows;
}

json scenario_json(const ScenarioResult& scenario) {
    json per_run = json::array();
    for (std::size_t k = 0; k < scenario.per_run.size(); ++k) {
        const RunStats& stats = scenario.per_run[k];
        per_run.push_back(json{{"run", k},
                               {"seed", hex_seed(scenario.run_seeds[k])},
                               {"volume", stats.volume},
                               {"txn_probability", stats.txn_probability},
                               {"mean_price", opt_or_null(stats.mean_price)},
                               {"volatility", opt_or_null(stats.volatility)},
                               {"order_fill_rate", stats.order_fill_rate}});
    }

    json node{{"name", scenario.name},
              {"hft_enabled", scenario.hft_enabled},
              {"per_run", per_run},
              {"histogram", histogram_json(scenario.pooled_histogram)}};
    if (scenario.aggregates) {
        node["aggregates"] = json{
            {"mean_price", summary_json(scenario.aggregates->mean_price)},
            {"volatility", summary_json(scenario.aggregates->volatility)},
            {"volume", summary_json(scenario.aggregates->volume)},
            {"txn_probability", summary_json(scenario.aggregates->txn_probability)},
            {"order_fill_rate", summary_json(scenario.aggregates->order_fill_rate)}};
    } else {
        node["aggregates"] = nullptr;
    }
    return node;
}

} // namespace

std::string format_double(double value) {
    if (std::isnan(value)) return "";
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, ptr);
}

void write_report_json(const Report& report, std::ostream& out) {
    const SimConfig& cfg = report.cfg;
    json doc{{"schema_version", kReportSchemaVersion},
             {"engine_version", report.engine_version},
             {"config",
              json{{"steps", cfg.steps},
                   {"runs", cfg.runs},
                   {"price_min", cfg.price_min},
                   {"price_max", cfg.price_max},
                   {"continuous_prices", cfg.continuous_prices},
                   {"master_seed", hex_seed(cfg.master_seed)},
                   {"bin_width", cfg.bin_width},
                   {"scenario", scenario_name(cfg.scenario)},
                   {"tie_break", cfg.tie_break == TieBreak::OldestFirst ? "oldest_first"
                                                                        : "newest_first"}}},
             {"paired_seeds", report.paired_seeds},
             {"wall_clock_ms", report.wall_clock_ms}};

    json scenarios = json::array();
    for (const ScenarioResult& scenario : report.scenarios) {
        scenarios.push_back(scenario_json(scenario));
    }
    doc["scenarios"] = scenarios;

    out << doc.dump(2) << '\n';
}

void write_report_csv(const Report& report, std::ostream& out) {
    out << "scenario,metric,mean,sd,stderr,ci95_lo,ci95_hi,runs\n";
    for (const ScenarioResult& scenario : report.scenarios) {
        const auto row = [&](const char* metric, const MetricSummary& summary) {
            out << scenario.name << ',' << metric << ',' << format_double(summary.mean)
                << ',' << format_double(summary.sd) << ',' << format_double(summary.std_error)
                << ',' << format_double(summary.ci_lo) << ',' << format_double(summary.ci_hi)
                << ',' << summary.n << '\n';
        };
        const auto single_row = [&](const char* metric, double value,
                                    const std::optional<double>& opt) {
            // Single-run report: the lone value stands in for the mean.
            out << scenario.name << ',' << metric << ','
                << (opt ? format_double(*opt) : format_double(value)) << ",,,,,1\n";
        };
        if (scenario.aggregates) {
            row("mean_price", scenario.aggregates->mean_price);
            row("volatility", scenario.aggregates->volatility);
            row("volume", scenario.aggregates->volume);
            row("txn_probability", scenario.aggregates->txn_probability);
            row("order_fill_rate", scenario.aggregates->order_fill_rate);
        } else {
            const RunStats& only = scenario.per_run.front();
            single_row("mean_price", 0.0, only.mean_price);
            single_row("volatility", 0.0, only.volatility);
            single_row("volume", only.volume, std::nullopt);
            single_row("txn_probability", only.txn_probability, std::nullopt);
            single_row("order_fill_rate", only.order_fill_rate, std::nullopt);
        }
    }
}

void write_histogram_csv(const Report& report, std::ostream& out) {
    out << "scenario,bin_lo,bin_hi,count\n";
    for (const ScenarioResult& scenario : report.scenarios) {
        for (const HistogramBin& bin : scenario.pooled_histogram) {
            out << scenario.name << ',' << format_double(bin.lo) << ','
                << format_double(bin.hi) << ',' << bin.count << '\n';
        }
    }
}

void write_trade_log_csv(const Report& report, std::ostream& out) {
    out << "scenario,run,step,market,kind,price,maker_id,taker_id\n";
    for (const ScenarioResult& scenario : report.scenarios) {
        for (std::size_t k = 0; k < scenario.trade_logs.size(); ++k) {
            for (const Trade& trade : scenario.trade_logs[k]) {
                out << scenario.name << ',' << k << ',' << trade.step << ','
                    << trade.market_id << ','
                    << (trade.kind == TradeKind::Local ? "local" : "cross") << ','
                    << format_double(trade.price) << ',' << trade.maker_id << ','
                    << trade.taker_id << '\n';
            }
        }
    }
}

namespace {

void write_to_path(const std::string& path, const auto& writer) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    writer(file);
    file.flush();
    if (!file) throw IoError("write to '" + path + "' failed");
}

} // namespace

void write_report_files(const Report& report) {
    const SimConfig& cfg = report.cfg;
    const auto write_main = [&](std::ostream& out) {
        if (cfg.format == ReportFormat::Json) {
            write_report_json(report, out);
        } else {
            write_report_csv(report, out);
        }
    };
    if (cfg.out_path.empty()) {
        write_main(std::cout);
    } else {
        write_to_path(cfg.out_path, write_main);
    }
    if (!cfg.trade_log_path.empty()) {
        write_to_path(cfg.trade_log_path,
                      [&](std::ostream& out) { write_trade_log_csv(report, out); });
    }
    if (!cfg.hist_path.empty()) {
        write_to_path(cfg.hist_path,
                      [&](std::ostream& out) { write_histogram_csv(report, out); });
    }
}

} // namespace cda
