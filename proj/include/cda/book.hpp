#pragma once

#include "cda/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cda {

struct LocalTrade {
    double price = 0.0;  // the resting (maker) order's limit price
    OrderId maker_id = 0;
    OrderId taker_id = 0;
    int market_id = 0;
    std::uint32_t step = 0;
};

// Single-market limit order book. Bids are kept best-first by (price
// descending, arrival), asks by (price ascending, arrival); the tie-break
// sets which arrival wins at equal prices. The book is never internally
// crossed: callers must match an incoming order before inserting it.
class Book {
public:
    explicit Book(TieBreak tie_break = TieBreak::OldestFirst)
        : tie_break_(tie_break) {}

    std::optional<double> best_bid() const;
    std::optional<double> best_ask() const;

    // Pure crossing test against the best opposite quote: a trade happens
    // when the incoming bid meets or exceeds the best ask, or the converse,
    // and executes at the resting order's listed price. Never mutates.
    std::optional<LocalTrade> match_incoming(const Order& incoming) const;

    // Rests an order that did not match. Throws std::logic_error if the
    // order would cross the opposite side (caller contract violation).
    void insert(const Order& order);

    // Discards both sides entirely.
    void clear();

    std::size_t depth() const { return bids_.size() + asks_.size(); }
    const std::vector<Order>& bids() const { return bids_; }
    const std::vector<Order>& asks() const { return asks_; }

private:
    bool comes_before(const Order& a, const Order& b) const;

    TieBreak tie_break_;
    std::vector<Order> bids_;  // best (highest price) first
    std::vector<Order> asks_;  // best (lowest price) first
};

} // namespace cda
