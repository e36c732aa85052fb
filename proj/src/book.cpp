#include "cda/book.hpp"

#include <algorithm>
#include <stdexcept>

namespace cda {

std::optional<double> Book::best_bid() const {
    if (bids_.empty()) return std::nullopt;
    return bids_.front().price;
}

std::optional<double> Book::best_ask() const {
    if (asks_.empty()) return std::nullopt;
    return asks_.front().price;
}

std::optional<LocalTrade> Book::match_incoming(const Order& incoming) const {
    const std::vector<Order>& opposite = incoming.side == Side::Buy ? asks_ : bids_;
    if (opposite.empty()) return std::nullopt;

    const Order& best = opposite.front();
    const bool crosses = incoming.side == Side::Buy ? best.price <= incoming.price
                                                    : best.price >= incoming.price;
    if (!crosses) return std::nullopt;

    return LocalTrade{best.price, best.id, incoming.id, incoming.market_id, incoming.step};
}

// Priority within one side: price first (higher for bids, lower for asks),
// then arrival id per the tie-break.
bool Book::comes_before(const Order& a, const Order& b) const {
    if (a.price != b.price) {
        return a.side == Side::Buy ? a.price > b.price : a.price < b.price;
    }
    return tie_break_ == TieBreak::OldestFirst ? a.id < b.id : a.id > b.id;
}

void Book::insert(const Order& order) {
    if (match_incoming(order)) {
        throw std::logic_error("Book::insert: order would cross the opposite side");
    }
    std::vector<Order>& side = order.side == Side::Buy ? bids_ : asks_;
    auto pos = std::upper_bound(side.begin(), side.end(), order,
                                [this](const Order& a, const Order& b) {
                                    return comes_before(a, b);
                                });
    side.insert(pos, order);
}

void Book::clear() {
    bids_.clear();
    asks_.clear();
}

} // namespace cda
