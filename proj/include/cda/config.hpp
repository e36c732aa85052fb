#pragma once

#include "cda/types.hpp"

#include <cstdint>
#include <string>

namespace cda {

enum class Scenario : std::uint8_t { Base, Hft, Compare };

enum class ReportFormat : std::uint8_t { Csv, Json };

struct SimConfig {
    std::uint32_t steps = 10000;
    std::uint32_t runs = 100;
    int price_min = 1;
    int price_max = 200;
    bool hft_enabled = false;
    // Off by default: integer ticks keep matching and enumeration exact.
    bool continuous_prices = false;
    std::uint64_t master_seed = 42;
    double bin_width = 5.0;
    TieBreak tie_break = TieBreak::OldestFirst;

    // Harness-facing settings; ignored by the per-run engine.
    Scenario scenario = Scenario::Base;
    ReportFormat format = ReportFormat::Json;
    std::string out_path;
    std::string trade_log_path;
    std::string hist_path;
    unsigned workers = 0;  // 0 = one per hardware thread
};

// Throws ConfigError on invalid settings. steps == 0 is accepted and yields
// an empty-trade run.
void validate(const SimConfig& cfg);

// Accepts decimal or 0x-prefixed hex. Throws ConfigError on junk.
std::uint64_t parse_seed(const std::string& text);

const char* scenario_name(Scenario scenario);

} // namespace cda
