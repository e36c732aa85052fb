#include "cda/config.hpp"

#include "cda/errors.hpp"

#include <charconv>
#include <string>

namespace cda {

void validate(const SimConfig& cfg) {
    if (cfg.runs < 1) {
        throw ConfigError("runs must be at least 1");
    }
    if (cfg.price_min > cfg.price_max) {
        throw ConfigError("price_min " + std::to_string(cfg.price_min) +
                          " exceeds price_max " + std::to_string(cfg.price_max));
    }
    if (!(cfg.bin_width > 0.0)) {
        throw ConfigError("bin_width must be positive");
    }
}

std::uint64_t parse_seed(const std::string& text) {
    std::string_view view = text;
    int base = 10;
    if (view.starts_with("0x") || view.starts_with("0X")) {
        view.remove_prefix(2);
        base = 16;
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(view.begin(), view.end(), value, base);
    if (ec != std::errc{} || ptr != view.end() || view.empty()) {
        throw ConfigError("seed '" + text + "' is not a decimal or 0x-hex integer");
    }
    return value;
}

const char* scenario_name(Scenario scenario) {
    switch (scenario) {
        case Scenario::Base: return "base";
        case Scenario::Hft: return "hft";
        case Scenario::Compare: return "compare";
    }
    return "?";
}

} // namespace cda
