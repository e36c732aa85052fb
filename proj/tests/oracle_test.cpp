#include "cda/oracle.hpp"

#include "cda/errors.hpp"
#include "cda/rng.hpp"
#include "cda/simulation.hpp"

#include <doctest.h>

#include <cmath>

using namespace cda;

namespace {

// Mean per-run volume (averaged over counted markets) from seeded runs.
double simulated_mean_volume(const SmallConfig& oracle_cfg, int runs,
                             std::uint64_t master_seed) {
    SimConfig cfg;
    cfg.steps = oracle_cfg.steps;
    cfg.runs = 1;
    cfg.price_min = oracle_cfg.prices.front();
    cfg.price_max = oracle_cfg.prices.back();
    cfg.hft_enabled = oracle_cfg.hft_enabled;

    double total = 0.0;
    for (int k = 0; k < runs; ++k) {
        const RunResult result = Simulation::run(cfg, derive_run_seed(master_seed, k));
        if (oracle_cfg.markets == 1) {
            total += static_cast<double>(result.trades[0].size());
        } else {
            total += (static_cast<double>(result.trades[0].size()) +
                      static_cast<double>(result.trades[1].size())) /
                     2.0;
        }
    }
    return total / runs;
}

} // namespace

TEST_CASE("single-market two-step two-price instance, frozen by hand") {
    // 16 equally likely (side, price) pairs; 6 cross. The 6 trades execute at
    // maker prices {1,2,2,1,1,2}.
    SmallConfig cfg;
    cfg.markets = 1;
    cfg.steps = 2;
    cfg.prices = {1, 2};
    const ExactExpectations exact = exact_expectations(cfg);

    CHECK(exact.sequences == 16);
    CHECK(exact.total_trades == 6);
    CHECK(exact.expected_volume == Rational(3, 8));
    CHECK(exact.volume_variance == Rational(15, 64));
    CHECK(exact.txn_probability == Rational(3, 16));
    REQUIRE(exact.mean_price.has_value());
    CHECK(*exact.mean_price == Rational(3, 2));
    CHECK(*exact.price_variance == Rational(1, 4));
    CHECK(*exact.volatility == doctest::Approx(0.5));
}

TEST_CASE("one step can never trade") {
    SmallConfig cfg;
    cfg.markets = 1;
    cfg.steps = 1;
    cfg.prices = {1, 2, 3};
    const ExactExpectations exact = exact_expectations(cfg);
    CHECK(exact.expected_volume == Rational(0, 1));
    CHECK(exact.total_trades == 0);
    CHECK(!exact.mean_price.has_value());
}

TEST_CASE("two-market single-step coupler instance, frozen by hand") {
    // 16 two-market draws; 6 cross at midpoints {1, 1.5, 2} twice each.
    SmallConfig cfg;
    cfg.markets = 2;
    cfg.steps = 1;
    cfg.prices = {1, 2};
    cfg.hft_enabled = true;
    const ExactExpectations exact = exact_expectations(cfg);

    CHECK(exact.sequences == 16);
    CHECK(exact.total_trades == 12);  // 6 crossing pairs, one leg per market
    CHECK(exact.expected_volume == Rational(3, 8));
    CHECK(exact.txn_probability == Rational(3, 8));
    REQUIRE(exact.mean_price.has_value());
    CHECK(*exact.mean_price == Rational(3, 2));
    CHECK(*exact.price_variance == Rational(1, 6));
}

TEST_CASE("rationals reduce and print") {
    CHECK(Rational(6, 16) == Rational(3, 8));
    CHECK(Rational(6, 16).str() == "3/8");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(0, 7) == Rational(0, 1));
    CHECK(Rational(3, 8).to_double() == doctest::Approx(0.375));
}

TEST_CASE("the sequence bound is enforced") {
    SmallConfig cfg;
    cfg.markets = 2;
    cfg.steps = 6;
    cfg.prices = {1, 2};  // 4^12 > 10^7
    CHECK_THROWS_AS(exact_expectations(cfg), TooLargeError);
}

TEST_CASE("malformed instances are rejected") {
    SmallConfig cfg;
    cfg.markets = 1;
    cfg.hft_enabled = true;  // coupler needs both markets
    CHECK_THROWS_AS(exact_expectations(cfg), ConfigError);

    SmallConfig no_prices;
    no_prices.prices = {};
    CHECK_THROWS_AS(exact_expectations(no_prices), ConfigError);

    SmallConfig three_markets;
    three_markets.markets = 3;
    CHECK_THROWS_AS(exact_expectations(three_markets), ConfigError);
}

// Monte Carlo agreement: the seeded engine reproduces oracle expectations
// within 4 standard deviations of the per-run statistic.
TEST_CASE("seeded runs agree with exact enumeration across a config matrix") {
    struct Instance {
        SmallConfig cfg;
        std::uint64_t seed;
    };
    std::vector<Instance> matrix;
    {
        SmallConfig a;
        a.markets = 1;
        a.steps = 2;
        a.prices = {1, 2};
        matrix.push_back({a, 101});

        SmallConfig b;
        b.markets = 2;
        b.steps = 1;
        b.prices = {1, 2};
        b.hft_enabled = true;
        matrix.push_back({b, 202});

        SmallConfig c;
        c.markets = 2;
        c.steps = 2;
        c.prices = {1, 2, 3};
        c.hft_enabled = true;
        matrix.push_back({c, 303});

        SmallConfig d;
        d.markets = 1;
        d.steps = 3;
        d.prices = {1, 2, 3};
        matrix.push_back({d, 404});
    }

    const int runs = 20000;
    for (const Instance& instance : matrix) {
        const ExactExpectations exact = exact_expectations(instance.cfg);
        const double expected = exact.expected_volume.to_double();
        const double sd_of_mean = std::sqrt(exact.volume_variance.to_double() / runs);
        const double observed = simulated_mean_volume(instance.cfg, runs, instance.seed);
        INFO("markets=", instance.cfg.markets, " steps=", instance.cfg.steps);
        CHECK(std::abs(observed - expected) <= 4.0 * sd_of_mean);
    }
}
