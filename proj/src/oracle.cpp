#include "cda/oracle.hpp"

#include "cda/errors.hpp"
#include "cda/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace cda {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const __int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::string int128_str(__int128 value) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    unsigned __int128 magnitude =
        negative ? -static_cast<unsigned __int128>(value) : static_cast<unsigned __int128>(value);
    std::string digits;
    while (magnitude != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
        magnitude /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

} // namespace

Rational::Rational(__int128 n, __int128 d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (const __int128 g = gcd128(num, den); g > 1) {
        num /= g;
        den /= g;
    }
}

double Rational::to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
}

std::string Rational::str() const {
    if (den == 1) return int128_str(num);
    return int128_str(num) + "/" + int128_str(den);
}

namespace {

constexpr std::uint64_t kSequenceBound = 10'000'000;

// Digits enumerate (side, price) pairs: even digits are buys, odd are sells.
Order decode_order(std::uint64_t digit, int market_id, const std::vector<int>& prices) {
    Order order;
    order.market_id = market_id;
    order.side = digit % 2 == 0 ? Side::Buy : Side::Sell;
    order.price = static_cast<double>(prices[digit / 2]);
    return order;
}

} // namespace

ExactExpectations exact_expectations(const SmallConfig& cfg) {
    if (cfg.markets != 1 && cfg.markets != 2) {
        throw ConfigError("oracle: markets must be 1 or 2");
    }
    if (cfg.hft_enabled && cfg.markets != 2) {
        throw ConfigError("oracle: HFT coupling needs 2 markets");
    }
    if (cfg.prices.empty()) {
        throw ConfigError("oracle: price set must be nonempty");
    }
    if (cfg.steps == 0) {
        throw ConfigError("oracle: steps must be at least 1");
    }

    const std::uint64_t base = 2 * cfg.prices.size();
    const std::uint64_t slots = static_cast<std::uint64_t>(cfg.markets) * cfg.steps;
    std::uint64_t sequences = 1;
    for (std::uint64_t s = 0; s < slots; ++s) {
        if (sequences > kSequenceBound / base) {
            throw TooLargeError("oracle: sequence count (2*|prices|)^(markets*steps) "
                                "exceeds the 10^7 bound");
        }
        sequences *= base;
    }

    SimConfig engine_cfg;
    engine_cfg.steps = cfg.steps;
    engine_cfg.runs = 1;
    engine_cfg.price_min = *std::min_element(cfg.prices.begin(), cfg.prices.end());
    engine_cfg.price_max = *std::max_element(cfg.prices.begin(), cfg.prices.end());
    engine_cfg.hft_enabled = cfg.hft_enabled;

    // Single-market instances still run the two-market engine: market 1 gets
    // a constant stream of buys, which can never trade among themselves and,
    // with HFT off, cannot touch market 0.
    const Order filler = [&] {
        Order order;
        order.market_id = 1;
        order.side = Side::Buy;
        order.price = static_cast<double>(engine_cfg.price_min);
        return order;
    }();

    // Per-run volume is accumulated in halves so the two-market average stays
    // integral; prices in half ticks so cross midpoints stay integral.
    std::uint64_t volume_halves_sum = 0;
    unsigned __int128 volume_halves_sq_sum = 0;
    std::uint64_t total_trades = 0;
    std::int64_t price_halves_sum = 0;
    unsigned __int128 price_halves_sq_sum = 0;

    std::vector<std::pair<Order, Order>> script(cfg.steps);
    for (std::uint64_t sequence = 0; sequence < sequences; ++sequence) {
        std::uint64_t code = sequence;
        for (std::uint32_t t = 0; t < cfg.steps; ++t) {
            Order order0 = decode_order(code % base, 0, cfg.prices);
            code /= base;
            Order order1 = filler;
            if (cfg.markets == 2) {
                order1 = decode_order(code % base, 1, cfg.prices);
                code /= base;
            }
            script[t] = {order0, order1};
        }

        const RunResult result = Simulation::run_scripted(engine_cfg, script);

        std::uint64_t halves = 2 * result.trades[0].size();
        if (cfg.markets == 2) {
            halves = result.trades[0].size() + result.trades[1].size();
        }
        volume_halves_sum += halves;
        volume_halves_sq_sum += static_cast<unsigned __int128>(halves) * halves;

        for (int m = 0; m < cfg.markets; ++m) {
            for (const Trade& trade : result.trades[m]) {
                const auto price_halves = static_cast<std::int64_t>(std::llround(trade.price * 2.0));
                price_halves_sum += price_halves;
                price_halves_sq_sum += static_cast<unsigned __int128>(price_halves) * price_halves;
                ++total_trades;
            }
        }
    }

    ExactExpectations out;
    out.sequences = sequences;
    out.total_trades = total_trades;

    const auto n = static_cast<__int128>(sequences);
    out.expected_volume = Rational(volume_halves_sum, 2 * n);
    // Var[V] = E[V^2] - E[V]^2 with V in halves: (N*S2 - S1^2) / (4*N^2).
    out.volume_variance = Rational(
        n * static_cast<__int128>(volume_halves_sq_sum) -
            static_cast<__int128>(volume_halves_sum) * static_cast<__int128>(volume_halves_sum),
        4 * n * n);
    out.txn_probability = Rational(volume_halves_sum, 2 * n * cfg.steps);

    if (total_trades > 0) {
        const auto trades = static_cast<__int128>(total_trades);
        out.mean_price = Rational(price_halves_sum, 2 * trades);
        out.price_variance = Rational(
            trades * static_cast<__int128>(price_halves_sq_sum) -
                static_cast<__int128>(price_halves_sum) * static_cast<__int128>(price_halves_sum),
            4 * trades * trades);
        out.volatility = std::sqrt(out.price_variance->to_double());
    }
    return out;
}

} // namespace cda
