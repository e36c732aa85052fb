#pragma once

#include "cda/types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cda {

struct HistogramSpec {
    double lo = 1.0;
    double hi = 200.0;
    double width = 5.0;
};

struct HistogramBin {
    double lo = 0.0;
    double hi = 0.0;
    std::uint64_t count = 0;
};

// Left-closed right-open bins starting at lo; the final bin also includes its
// upper edge. Throws OutOfRangeError for any price outside [lo, hi] -- valid
// runs cannot produce one, so this flags an engine bug, not bad data.
std::vector<HistogramBin> histogram(std::span<const double> prices,
                                    const HistogramSpec& spec);

// One market's observables over one run.
struct RunStats {
    double volume = 0.0;           // trade count; half-integral after market averaging
    double txn_probability = 0.0;  // volume / steps
    std::optional<double> mean_price;
    std::optional<double> volatility;  // sample (n-1) sd; absent below 2 trades
    // Fraction of submitted orders that were filled. A local trade fills two
    // of this market's orders, a cross trade one; reported alongside
    // txn_probability because the two readings differ by construction.
    double order_fill_rate = 0.0;
    std::uint32_t steps = 0;
    std::vector<HistogramBin> histogram;
};

// Throws NoTradesError on an empty log; callers represent such runs with
// empty_run_stats instead.
RunStats run_stats(std::span<const Trade> trades, std::uint32_t steps,
                   const HistogramSpec& spec);

RunStats empty_run_stats(std::uint32_t steps, const HistogramSpec& spec);

// Table-style per-run figure: each scalar metric is the arithmetic mean of
// the two markets' values; histograms are summed. Commutative.
RunStats per_market_average(const RunStats& a, const RunStats& b);

struct MetricSummary {
    double mean = 0.0;
    double sd = 0.0;
    double std_error = 0.0;  // sd / sqrt(n)
    double ci_lo = 0.0;      // mean - 2 * std_error
    double ci_hi = 0.0;
    std::uint32_t n = 0;     // runs contributing (optional metrics may skip runs)
};

struct AggregateStats {
    MetricSummary mean_price;
    MetricSummary volatility;
    MetricSummary volume;
    MetricSummary txn_probability;
    MetricSummary order_fill_rate;
};

// Cross-run mean/sd/stderr and the 2-stderr 95% band per metric. Throws
// InsufficientRunsError for fewer than 2 runs.
AggregateStats aggregate(std::span<const RunStats> runs);

} // namespace cda
