#include "cda/hft.hpp"

#include <stdexcept>

namespace cda {

namespace {

std::optional<CrossMatch> cross_between(const Book& bid_book, const Book& ask_book,
                                        int bid_market) {
    if (bid_book.bids().empty() || ask_book.asks().empty()) return std::nullopt;
    const Order& bid = bid_book.bids().front();
    const Order& ask = ask_book.asks().front();
    if (bid.price < ask.price) return std::nullopt;
    return CrossMatch{bid_market, bid, ask, (bid.price + ask.price) / 2.0};
}

} // namespace

std::optional<CrossMatch> try_cross(const Book& book0, const Book& book1) {
    if (auto match = cross_between(book0, book1, 0)) return match;
    return cross_between(book1, book0, 1);
}

std::pair<Trade, Trade> execute_cross(MarketState& market0, MarketState& market1,
                                      const CrossMatch& match, std::uint32_t step) {
    MarketState& bid_side = match.bid_market == 0 ? market0 : market1;
    MarketState& ask_side = match.bid_market == 0 ? market1 : market0;

    const auto& bids = bid_side.book().bids();
    const auto& asks = ask_side.book().asks();
    if (bids.empty() || asks.empty() || bids.front().id != match.bid.id ||
        asks.front().id != match.ask.id) {
        throw std::logic_error("execute_cross: stale CrossMatch");
    }

    Trade bid_leg = bid_side.record_cross_leg(match.price, match.bid.id, match.ask.id, step);
    Trade ask_leg = ask_side.record_cross_leg(match.price, match.ask.id, match.bid.id, step);
    return match.bid_market == 0 ? std::make_pair(bid_leg, ask_leg)
                                 : std::make_pair(ask_leg, bid_leg);
}

} // namespace cda
