#include "cda/simulation.hpp"

#include "cda/errors.hpp"
#include "cda/order_flow.hpp"

#include <stdexcept>
#include <string>

namespace cda {

Simulation::Simulation(const SimConfig& cfg, std::uint64_t seed)
    : cfg_(cfg),
      seed_(seed),
      rng_(seed),
      markets_{MarketState(0, cfg.tie_break), MarketState(1, cfg.tie_break)} {
    validate(cfg);
}

StepReport Simulation::step() {
    Order order0 = next_order(rng_, step_, 0, cfg_);
    Order order1 = next_order(rng_, step_, 1, cfg_);
    return apply(order0, order1);
}

StepReport Simulation::step_scripted(Order for_market0, Order for_market1) {
    const Order* scripted[2] = {&for_market0, &for_market1};
    for (int m = 0; m < 2; ++m) {
        if (scripted[m]->market_id != m) {
            throw ConfigError("scripted order for slot " + std::to_string(m) +
                              " carries market_id " + std::to_string(scripted[m]->market_id));
        }
        if (scripted[m]->price < cfg_.price_min || scripted[m]->price > cfg_.price_max) {
            throw ConfigError("scripted order price outside configured bounds");
        }
    }
    for_market0.step = step_;
    for_market1.step = step_;
    return apply(for_market0, for_market1);
}

StepReport Simulation::apply(Order for_market0, Order for_market1) {
    StepReport report;
    report.local[0] = markets_[0].step(for_market0);
    report.local[1] = markets_[1].step(for_market1);
    submitted_[0].push_back(report.local[0].submitted);
    submitted_[1].push_back(report.local[1].submitted);

    const bool any_local_trade =
        report.local[0].traded_locally || report.local[1].traded_locally;
    if (cfg_.hft_enabled && !any_local_trade) {
        if (auto match = try_cross(markets_[0].book(), markets_[1].book())) {
            execute_cross(markets_[0], markets_[1], *match, step_);
            report.cross = *match;
        }
    }
    ++step_;
    return report;
}

RunResult Simulation::take_result() {
    RunResult result;
    result.cfg = cfg_;
    result.seed = seed_;
    for (int m = 0; m < 2; ++m) {
        const OrderAccounting& acct = markets_[m].accounting();
        const std::size_t resident = markets_[m].book().depth();
        if (acct.submitted != acct.consumed + acct.discarded + resident) {
            throw std::logic_error("order conservation violated in market " +
                                   std::to_string(m));
        }
        result.orders[m] = std::move(submitted_[m]);
        result.trades[m] = markets_[m].trades();
        result.accounting[m] = acct;
        result.resident[m] = resident;
    }
    return result;
}

RunResult Simulation::run(const SimConfig& cfg, std::uint64_t seed) {
    Simulation sim(cfg, seed);
    for (std::uint32_t t = 0; t < cfg.steps; ++t) sim.step();
    return sim.take_result();
}

RunResult Simulation::run_scripted(const SimConfig& cfg,
                                   const std::vector<std::pair<Order, Order>>& script) {
    if (script.size() != cfg.steps) {
        throw ConfigError("script length " + std::to_string(script.size()) +
                          " does not match configured steps " + std::to_string(cfg.steps));
    }
    Simulation sim(cfg, 0);
    for (const auto& [order0, order1] : script) sim.step_scripted(order0, order1);
    return sim.take_result();
}

} // namespace cda
