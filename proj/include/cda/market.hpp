#pragma once

#include "cda/book.hpp"
#include "cda/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cda {

struct StepOutcome {
    Order submitted;  // as accepted, with the assigned id
    bool traded_locally = false;
    std::optional<LocalTrade> trade;
};

// Every submitted order ends up in exactly one bucket; resting orders are
// the book depth. Checked at the end of every run.
struct OrderAccounting {
    std::uint64_t submitted = 0;
    std::uint64_t consumed = 0;   // filled by a trade (maker, taker, or cross leg)
    std::uint64_t discarded = 0;  // swept out by a clear-on-trade
};

// One exchange. An arrival either trades against the best opposite quote or
// rests in the book; a trade discards the entire remaining book.
class MarketState {
public:
    MarketState(int market_id, TieBreak tie_break)
        : market_id_(market_id), book_(tie_break) {}

    // Assigns the next order id and applies the match-or-insert rule. The
    // order that triggers a trade is consumed by it, never inserted.
    // Throws ConfigError if incoming.market_id does not match this market.
    StepOutcome step(Order incoming);

    // Records one leg of a cross-market trade: own_id is this market's
    // resting order (consumed), peer_id the counterparty order in the other
    // market. Clears the book. Invoked only by the coupler.
    Trade record_cross_leg(double price, OrderId own_id, OrderId peer_id,
                           std::uint32_t step);

    int market_id() const { return market_id_; }
    const Book& book() const { return book_; }
    const std::vector<Trade>& trades() const { return trades_; }
    const OrderAccounting& accounting() const { return accounting_; }

private:
    int market_id_;
    Book book_;
    OrderId next_order_id_ = 1;
    std::vector<Trade> trades_;
    OrderAccounting accounting_;
};

} // namespace cda
