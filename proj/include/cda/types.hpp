#pragma once

#include <cstdint>

namespace cda {

enum class Side : std::uint8_t { Buy, Sell };

enum class TradeKind : std::uint8_t { Local, Cross };

// Resting-order priority among equal prices. Swappable so the claim that the
// tie-break cannot move any run statistic is testable, not just asserted.
enum class TieBreak : std::uint8_t { OldestFirst, NewestFirst };

using OrderId = std::uint64_t;

// One unit-size limit order. Prices live on an integer tick grid by default;
// the continuous-price config option stores fractional ticks in the same
// field (doubles hold both exactly at this scale).
struct Order {
    OrderId id = 0;
    int market_id = 0;
    Side side = Side::Buy;
    double price = 0.0;
    std::uint32_t step = 0;
    // size is always 1 in this model and is not stored
};

// Executed transaction as recorded in one market's trade log. For Local
// trades maker_id is the resting order and taker_id the incoming one. For
// Cross trades maker_id is this market's own resting order and taker_id the
// counterparty order resting in the other market.
struct Trade {
    std::uint32_t step = 0;
    TradeKind kind = TradeKind::Local;
    int market_id = 0;
    double price = 0.0;
    OrderId maker_id = 0;
    OrderId taker_id = 0;
};

} // namespace cda
