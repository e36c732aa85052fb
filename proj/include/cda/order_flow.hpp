#pragma once

#include "cda/config.hpp"
#include "cda/rng.hpp"
#include "cda/types.hpp"

namespace cda {

// Draws the next zero-intelligence order: fair-coin side first, then a price
// uniform over the configured grid (integers in [price_min, price_max] by
// default). The id is assigned by the receiving market at submission.
template <UniformSource R>
Order next_order(R& rng, std::uint32_t step, int market_id, const SimConfig& cfg) {
    Order order;
    order.market_id = market_id;
    order.step = step;
    order.side = rng.coin() ? Side::Buy : Side::Sell;
    if (cfg.continuous_prices) {
        order.price = cfg.price_min +
                      rng.unit_real() * static_cast<double>(cfg.price_max - cfg.price_min);
    } else {
        const auto span = static_cast<std::uint64_t>(cfg.price_max - cfg.price_min) + 1;
        order.price = static_cast<double>(
            cfg.price_min + static_cast<std::int64_t>(rng.bounded(span)));
    }
    return order;
}

} // namespace cda
