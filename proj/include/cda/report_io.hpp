#pragma once

#include "cda/experiment.hpp"

#include <iosfwd>
#include <string>

namespace cda {

// Schema-versioned JSON document; regenerating with the same config and seed
// reproduces every field byte-for-byte except wall_clock_ms.
void write_report_json(const Report& report, std::ostream& out);

// One header row, then one row per (scenario, metric) with mean/sd/stderr/ci.
void write_report_csv(const Report& report, std::ostream& out);

// Pooled price histogram: one row per (scenario, bin).
void write_histogram_csv(const Report& report, std::ostream& out);

// One row per trade across all runs of all scenarios.
void write_trade_log_csv(const Report& report, std::ostream& out);

// Writes the report in cfg.format to cfg.out_path (stdout when empty), plus
// the trade log and histogram files when their paths are set. Throws IoError
// with path context on failure.
void write_report_files(const Report& report);

// Shortest round-trip decimal form; NaN renders as the empty string.
std::string format_double(double value);

} // namespace cda
