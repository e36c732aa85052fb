#pragma once

#include "cda/book.hpp"
#include "cda/market.hpp"
#include "cda/types.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace cda {

// A bid and an ask resting in different markets whose prices cross. The pair
// trades at the midpoint, which may be a half tick and is kept exact so both
// legs carry the identical price and the arbitrageur nets zero.
struct CrossMatch {
    int bid_market = 0;  // market holding the bid; the ask rests in the other
    Order bid;
    Order ask;
    double price = 0.0;  // (bid.price + ask.price) / 2
};

// Detects a crossing between the two books' best quotes. With both books
// internally uncrossed at most one direction can cross (b0 >= a1 and
// b1 >= a0 together would force b0 > b0), so the check order is immaterial.
// Pure query.
std::optional<CrossMatch> try_cross(const Book& book0, const Book& book1);

// Executes the matched pair: one Cross trade recorded in each market at the
// shared midpoint price, then both books clear. Throws std::logic_error if
// the match is stale (the books changed since try_cross produced it).
std::pair<Trade, Trade> execute_cross(MarketState& market0, MarketState& market1,
                                      const CrossMatch& match, std::uint32_t step);

} // namespace cda
