#include "cda/market.hpp"

#include "cda/errors.hpp"

#include <string>

namespace cda {

StepOutcome MarketState::step(Order incoming) {
    if (incoming.market_id != market_id_) {
        throw ConfigError("order for market " + std::to_string(incoming.market_id) +
                          " submitted to market " + std::to_string(market_id_));
    }
    incoming.id = next_order_id_++;
    ++accounting_.submitted;

    StepOutcome outcome;
    outcome.submitted = incoming;

    if (auto trade = book_.match_incoming(incoming)) {
        trades_.push_back(Trade{trade->step, TradeKind::Local, market_id_,
                                trade->price, trade->maker_id, trade->taker_id});
        accounting_.consumed += 2;  // maker and taker
        accounting_.discarded += book_.depth() - 1;  // everything but the maker
        book_.clear();
        outcome.traded_locally = true;
        outcome.trade = *trade;
    } else {
        book_.insert(incoming);
    }
    return outcome;
}

Trade MarketState::record_cross_leg(double price, OrderId own_id, OrderId peer_id,
                                    std::uint32_t step) {
    Trade trade{step, TradeKind::Cross, market_id_, price, own_id, peer_id};
    trades_.push_back(trade);
    accounting_.consumed += 1;
    accounting_.discarded += book_.depth() - 1;
    book_.clear();
    return trade;
}

} // namespace cda
