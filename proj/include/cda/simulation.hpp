#pragma once

#include "cda/config.hpp"
#include "cda/hft.hpp"
#include "cda/market.hpp"
#include "cda/rng.hpp"
#include "cda/types.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cda {

struct RunResult {
    SimConfig cfg;
    std::uint64_t seed = 0;
    std::array<std::vector<Order>, 2> orders;  // submitted stream per market
    std::array<std::vector<Trade>, 2> trades;  // trade log per market
    std::array<OrderAccounting, 2> accounting;
    std::array<std::size_t, 2> resident{};     // book depth at end of run
};

struct StepReport {
    std::array<StepOutcome, 2> local;
    std::optional<CrossMatch> cross;
};

// One run of the two-market model. Each time step delivers one order to each
// market (market 0's order drawn first from the single run-level generator),
// then the coupler may bridge the two books -- but only when neither market
// traded locally this step.
class Simulation {
public:
    Simulation(const SimConfig& cfg, std::uint64_t seed);

    // Advance one step on generated order flow.
    StepReport step();

    // Advance one step on injected orders (first -> market 0, second ->
    // market 1). Price bounds and market ids are validated; ids and the step
    // stamp are assigned by the engine.
    StepReport step_scripted(Order for_market0, Order for_market1);

    const MarketState& market(int id) const { return markets_[id]; }
    std::uint32_t current_step() const { return step_; }
    bool hft_enabled() const { return cfg_.hft_enabled; }

    // Moves the accumulated run out; verifies order conservation first.
    RunResult take_result();

    static RunResult run(const SimConfig& cfg, std::uint64_t seed);
    static RunResult run_scripted(const SimConfig& cfg,
                                  const std::vector<std::pair<Order, Order>>& script);

private:
    StepReport apply(Order for_market0, Order for_market1);

    SimConfig cfg_;
    std::uint64_t seed_;
    Rng rng_;
    std::array<MarketState, 2> markets_;
    std::array<std::vector<Order>, 2> submitted_;
    std::uint32_t step_ = 0;
};

} // namespace cda
