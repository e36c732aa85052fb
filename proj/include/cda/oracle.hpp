#pragma once

#include "cda/config.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cda {

// Exact fraction, normalized to lowest terms with a positive denominator.
// 128-bit components: pooled second moments at the enumeration bound exceed
// 64 bits before reduction.
struct Rational {
    __int128 num = 0;
    __int128 den = 1;

    Rational() = default;
    Rational(__int128 n, __int128 d);

    double to_double() const;
    std::string str() const;  // "3/8", or "3" when the denominator is 1

    friend bool operator==(const Rational& a, const Rational& b) = default;
};

// Enumeration instance small enough to walk exhaustively.
struct SmallConfig {
    int markets = 1;  // 1 or 2; HFT requires 2
    std::uint32_t steps = 2;
    std::vector<int> prices = {1, 2};  // explicit allowed price set
    bool hft_enabled = false;
};

struct ExactExpectations {
    std::uint64_t sequences = 0;
    std::uint64_t total_trades = 0;  // across all sequences and counted markets
    Rational expected_volume;        // per run, averaged over counted markets
    Rational volume_variance;        // exact variance of that per-run figure
    Rational txn_probability;        // expected_volume / steps
    // Trade-pooled price moments; absent when no sequence trades.
    std::optional<Rational> mean_price;
    std::optional<Rational> price_variance;
    std::optional<double> volatility;  // sqrt(price_variance)
};

// Enumerates every equally likely order sequence for the small config, runs
// each through the scripted production engine, and probability-weights the
// outcomes exactly. Validates the Monte Carlo path: any disagreement with
// seeded runs isolates the generator/weighting layer, since the matching
// rules themselves are shared. Throws TooLargeError when
// (2*|prices|)^(markets*steps) exceeds 10^7, and ConfigError on a malformed
// instance.
ExactExpectations exact_expectations(const SmallConfig& cfg);

} // namespace cda
