#include "cda/hft.hpp"

#include "cda/rng.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace cda;

namespace {

Order make(OrderId id, Side side, double price, int market) {
    return Order{id, market, side, price, 0};
}

} // namespace

TEST_CASE("bid in market 0 against ask in market 1 trades at the midpoint") {
    Book book0, book1;
    book0.insert(make(1, Side::Buy, 150, 0));
    book1.insert(make(1, Side::Sell, 130, 1));
    const auto match = try_cross(book0, book1);
    REQUIRE(match.has_value());
    CHECK(match->bid_market == 0);
    CHECK(match->price == 140.0);
    CHECK(match->bid.price == 150.0);
    CHECK(match->ask.price == 130.0);
}

TEST_CASE("no crossing when books do not overlap") {
    Book book0, book1;
    book0.insert(make(1, Side::Buy, 100, 0));
    book0.insert(make(2, Side::Sell, 120, 0));
    book1.insert(make(1, Side::Buy, 90, 1));
    book1.insert(make(2, Side::Sell, 101, 1));
    CHECK(!try_cross(book0, book1).has_value());
}

TEST_CASE("adjacent ticks produce an exact half-tick midpoint") {
    Book book0, book1;
    book0.insert(make(1, Side::Buy, 141, 0));
    book1.insert(make(1, Side::Sell, 140, 1));
    const auto match = try_cross(book0, book1);
    REQUIRE(match.has_value());
    CHECK(match->price == 140.5);
}

TEST_CASE("reverse direction is detected symmetrically") {
    Book book0, book1;
    book0.insert(make(1, Side::Sell, 80, 0));
    book1.insert(make(1, Side::Buy, 90, 1));
    const auto match = try_cross(book0, book1);
    REQUIRE(match.has_value());
    CHECK(match->bid_market == 1);
    CHECK(match->price == 85.0);
}

TEST_CASE("empty books never cross") {
    Book book0, book1;
    CHECK(!try_cross(book0, book1).has_value());
    book0.insert(make(1, Side::Buy, 200, 0));
    CHECK(!try_cross(book0, book1).has_value());
}

TEST_CASE("execute_cross records equal-price trades in both markets and clears") {
    MarketState market0(0, TieBreak::OldestFirst);
    MarketState market1(1, TieBreak::OldestFirst);
    Order bid;
    bid.market_id = 0;
    bid.side = Side::Buy;
    bid.price = 150;
    Order stale_bid = bid;
    stale_bid.price = 90;
    Order ask;
    ask.market_id = 1;
    ask.side = Side::Sell;
    ask.price = 130;

    market0.step(bid);
    market0.step(stale_bid);  // rests behind the best bid
    market1.step(ask);

    const auto match = try_cross(market0.book(), market1.book());
    REQUIRE(match.has_value());
    const auto [trade0, trade1] = execute_cross(market0, market1, *match, 3);

    CHECK(trade0.market_id == 0);
    CHECK(trade1.market_id == 1);
    CHECK(trade0.price == 140.0);
    CHECK(trade0.price == trade1.price);  // zero arbitrage profit, bit-exact
    CHECK(trade0.step == 3);
    CHECK(trade1.step == 3);
    CHECK(market0.book().depth() == 0);
    CHECK(market1.book().depth() == 0);

    // Buyer pays no more than the bid, seller receives no less than the ask.
    CHECK(trade0.price <= 150.0);
    CHECK(trade1.price >= 130.0);
}

TEST_CASE("a stale match is rejected") {
    MarketState market0(0, TieBreak::OldestFirst);
    MarketState market1(1, TieBreak::OldestFirst);
    Order bid;
    bid.market_id = 0;
    bid.side = Side::Buy;
    bid.price = 150;
    Order ask;
    ask.market_id = 1;
    ask.side = Side::Sell;
    ask.price = 130;
    market0.step(bid);
    market1.step(ask);

    const auto match = try_cross(market0.book(), market1.book());
    REQUIRE(match.has_value());

    Order better_bid = bid;
    better_bid.price = 160;
    market0.step(better_bid);  // book changed; the match is stale

    CHECK_THROWS_AS(execute_cross(market0, market1, *match, 4), std::logic_error);
}

// Property: with uncrossed books at most one direction can cross, and any
// match price lies between the ask and the bid.
TEST_CASE("direction exclusivity and reservation prices over fuzzed books") {
    Rng rng(777);
    for (int round = 0; round < 20000; ++round) {
        Book book0, book1;
        OrderId id = 1;
        const auto fill = [&](Book& book, int market) {
            const int entries = static_cast<int>(rng.bounded(4));
            for (int i = 0; i < entries; ++i) {
                Order order = make(id++, rng.coin() ? Side::Buy : Side::Sell,
                                   static_cast<double>(1 + rng.bounded(20)), market);
                if (!book.match_incoming(order)) book.insert(order);
            }
        };
        fill(book0, 0);
        fill(book1, 1);

        const bool dir0 = book0.best_bid() && book1.best_ask() &&
                          *book0.best_bid() >= *book1.best_ask();
        const bool dir1 = book1.best_bid() && book0.best_ask() &&
                          *book1.best_bid() >= *book0.best_ask();
        REQUIRE(!(dir0 && dir1));

        const auto match = try_cross(book0, book1);
        CHECK(match.has_value() == (dir0 || dir1));
        if (match) {
            CHECK(match->price >= match->ask.price);
            CHECK(match->price <= match->bid.price);
            CHECK(match->bid.price >= match->ask.price);
            CHECK(match->bid.market_id != match->ask.market_id);
        }
    }
}
