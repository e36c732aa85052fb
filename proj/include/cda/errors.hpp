#pragma once

#include <stdexcept>

namespace cda {

// Invalid user-supplied configuration; maps to CLI exit status 2.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Metric request over an empty trade log.
struct NoTradesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cross-run aggregation needs at least two runs.
struct InsufficientRunsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A price fell outside the histogram range; valid runs cannot produce this.
struct OutOfRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration request exceeds the exact-oracle sequence bound.
struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File output failure, carrying path context.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cda
