#include "cda/metrics.hpp"

#include "cda/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace cda {

namespace {

std::vector<HistogramBin> make_bins(const HistogramSpec& spec) {
    const auto bin_count =
        static_cast<std::size_t>(std::ceil((spec.hi - spec.lo) / spec.width));
    std::vector<HistogramBin> bins(bin_count == 0 ? 1 : bin_count);
    for (std::size_t i = 0; i < bins.size(); ++i) {
        bins[i].lo = spec.lo + static_cast<double>(i) * spec.width;
        bins[i].hi = spec.lo + static_cast<double>(i + 1) * spec.width;
    }
    return bins;
}

std::optional<double> mean_of(std::span<const double> values) {
    if (values.empty()) return std::nullopt;
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

// Sample (n-1) standard deviation; absent below two observations.
std::optional<double> sample_sd(std::span<const double> values, double mean) {
    if (values.size() < 2) return std::nullopt;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

} // namespace

std::vector<HistogramBin> histogram(std::span<const double> prices,
                                    const HistogramSpec& spec) {
    std::vector<HistogramBin> bins = make_bins(spec);
    for (double price : prices) {
        if (price < spec.lo || price > spec.hi) {
            throw OutOfRangeError("price " + std::to_string(price) +
                                  " outside histogram range [" + std::to_string(spec.lo) +
                                  ", " + std::to_string(spec.hi) + "]");
        }
        auto index = static_cast<std::size_t>((price - spec.lo) / spec.width);
        if (index >= bins.size()) index = bins.size() - 1;  // hi lands in the final bin
        ++bins[index].count;
    }
    return bins;
}

RunStats run_stats(std::span<const Trade> trades, std::uint32_t steps,
                   const HistogramSpec& spec) {
    if (trades.empty()) {
        throw NoTradesError("run produced no trades; mean and volatility undefined");
    }

    std::vector<double> prices;
    prices.reserve(trades.size());
    std::uint64_t orders_filled = 0;
    for (const Trade& trade : trades) {
        prices.push_back(trade.price);
        orders_filled += trade.kind == TradeKind::Local ? 2 : 1;
    }

    RunStats stats;
    stats.steps = steps;
    stats.volume = static_cast<double>(trades.size());
    stats.txn_probability = stats.volume / static_cast<double>(steps);
    stats.mean_price = mean_of(prices);
    stats.volatility = sample_sd(prices, *stats.mean_price);
    stats.order_fill_rate = static_cast<double>(orders_filled) / static_cast<double>(steps);
    stats.histogram = histogram(prices, spec);
    return stats;
}

RunStats empty_run_stats(std::uint32_t steps, const HistogramSpec& spec) {
    RunStats stats;
    stats.steps = steps;
    stats.histogram = make_bins(spec);
    return stats;
}

namespace {

std::optional<double> average_optional(const std::optional<double>& a,
                                       const std::optional<double>& b) {
    if (a && b) return (*a + *b) / 2.0;
    if (a) return a;
    return b;
}

} // namespace

RunStats per_market_average(const RunStats& a, const RunStats& b) {
    RunStats avg;
    avg.steps = a.steps;
    avg.volume = (a.volume + b.volume) / 2.0;
    avg.txn_probability = (a.txn_probability + b.txn_probability) / 2.0;
    avg.mean_price = average_optional(a.mean_price, b.mean_price);
    avg.volatility = average_optional(a.volatility, b.volatility);
    avg.order_fill_rate = (a.order_fill_rate + b.order_fill_rate) / 2.0;

    avg.histogram = a.histogram;
    for (std::size_t i = 0; i < avg.histogram.size() && i < b.histogram.size(); ++i) {
        avg.histogram[i].count += b.histogram[i].count;
    }
    return avg;
}

namespace {

template <typename Extract>
MetricSummary summarize(std::span<const RunStats> runs, Extract extract) {
    std::vector<double> values;
    values.reserve(runs.size());
    for (const RunStats& r : runs) {
        if (auto v = extract(r)) values.push_back(*v);
    }

    MetricSummary summary;
    summary.n = static_cast<std::uint32_t>(values.size());
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    if (values.empty()) {
        summary.mean = summary.sd = summary.std_error = summary.ci_lo = summary.ci_hi = nan;
        return summary;
    }
    summary.mean = *mean_of(values);
    if (auto sd = sample_sd(values, summary.mean)) {
        summary.sd = *sd;
        summary.std_error = *sd / std::sqrt(static_cast<double>(values.size()));
        summary.ci_lo = summary.mean - 2.0 * summary.std_error;
        summary.ci_hi = summary.mean + 2.0 * summary.std_error;
    } else {
        summary.sd = summary.std_error = summary.ci_lo = summary.ci_hi = nan;
    }
    return summary;
}

} // namespace

AggregateStats aggregate(std::span<const RunStats> runs) {
    if (runs.size() < 2) {
        throw InsufficientRunsError("aggregation requires at least 2 runs, got " +
                                    std::to_string(runs.size()));
    }
    AggregateStats agg;
    agg.mean_price = summarize(runs, [](const RunStats& r) { return r.mean_price; });
    agg.volatility = summarize(runs, [](const RunStats& r) { return r.volatility; });
    agg.volume = summarize(runs, [](const RunStats& r) {
        return std::optional<double>(r.volume);
    });
    agg.txn_probability = summarize(runs, [](const RunStats& r) {
        return std::optional<double>(r.txn_probability);
    });
    agg.order_fill_rate = summarize(runs, [](const RunStats& r) {
        return std::optional<double>(r.order_fill_rate);
    });
    return agg;
}

} // namespace cda
