#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "oracle.hpp"
#include "outage.hpp"

using namespace secbc;

TEST_CASE("grid search finds the crossing-point allocation") {
    const std::vector<EffectiveState> states = {test::state(1.0, 2.0)};
    const Weights w{1.0, 3.0};
    const oracle::GridBest best = oracle::grid_search_weighted(states, w, 1.0, 1e-3);
    CHECK(std::fabs(best.alloc[0].p0) <= 2e-3);
    CHECK(best.alloc[0].p1 == doctest::Approx(1.0).epsilon(2e-3));
    CHECK(best.objective == doctest::Approx(3.0 * 0.2075187496394219).epsilon(1e-4));
}

TEST_CASE("with no confidential weight the grid spends everything on the common layer") {
    const std::vector<EffectiveState> states = {test::state(1.0, 2.0)};
    const oracle::GridBest best =
        oracle::grid_search_weighted(states, Weights{1.0, 0.0}, 1.0, 1e-2);
    CHECK(best.alloc[0].p1 == 0.0);
    CHECK(best.alloc[0].p0 == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("oversized grids are refused with a sizing hint") {
    const std::vector<EffectiveState> states = {test::state(1.0, 2.0)};
    try {
        oracle::grid_search_weighted(states, Weights{1.0, 1.0}, 10.0, 1e-6);
        FAIL("expected a too-large error");
    } catch (const error& e) {
        CHECK(e.code() == errc::too_large);
        CHECK(std::string(e.what()).find("resolution") != std::string::npos);
    }
}

TEST_CASE("halving the resolution never hurts the oracle") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 8; ++trial) {
        const test::RandomInstance inst = test::random_instance(rng, 1e-2);
        const double coarse =
            oracle::grid_search_weighted(inst.states, inst.weights, inst.budget, 2e-2).objective;
        const double fine =
            oracle::grid_search_weighted(inst.states, inst.weights, inst.budget, 1e-2).objective;
        CHECK(fine >= coarse - 1e-15);
    }
}

TEST_CASE("region cloud is dominated by the swept boundary") {
    const std::vector<EffectiveState> states = test::gaussian_states({1.0, 1.0}, {3.0, 0.6});
    const double budget = 1.5;
    const double resolution = 0.01;
    const std::vector<RatePoint> cloud = oracle::grid_region_cloud(states, budget, resolution);

    std::vector<Weights> grid;
    for (double ratio : {0.0, 0.4, 1.0, 2.5, 8.0})
        grid.push_back(Weights{1.0, ratio});
    grid.push_back(Weights{0.0, 1.0});
    const std::vector<SweepPoint> sweep = boundary_sweep(states, budget, grid);

    // Per weight pair, no cloud point may beat the swept optimum by more
    // than the grid spacing allows.
    const double slack = 10.0 * resolution * 2.0 / (0.6 * 0.693);
    for (const SweepPoint& pt : sweep) {
        const double swept = weighted_objective(pt.weights, pt.rates);
        for (const RatePoint& q : cloud) {
            const double cloud_obj = pt.weights.gamma0 * q.r0 + pt.weights.gamma1 * q.r1;
            CHECK(cloud_obj <= swept + slack);
        }
    }

    double cloud_max_r1 = 0.0;
    for (const RatePoint& q : cloud)
        cloud_max_r1 = std::max(cloud_max_r1, q.r1);
    const WiretapResult wt = wiretap_allocation(states, budget);
    CHECK(cloud_max_r1 <= wt.capacity + 1e-12);
    CHECK(cloud_max_r1 >= wt.capacity - slack);
}

TEST_CASE("single-channel cloud lies on the beta curve") {
    const GaussianSubchannel sc{1.0, 2.5};
    const std::vector<EffectiveState> states = {effective_state(sc, 0.5, 1.0)};
    const double budget = 2.0;
    for (int k = 0; k <= 40; ++k) {
        const double beta = k / 40.0;
        const RatePoint pt = gaussian_bcc_point(budget, sc, beta, 0.5);
        const RateTriple rt = weighted_rate_triple(
            states, PowerAllocation{{(1.0 - beta) * budget, beta * budget}});
        CHECK(pt.r0 == doctest::Approx(rt.common()).epsilon(1e-12));
        CHECK(pt.r1 == doctest::Approx(rt.r1).epsilon(1e-12));
    }
}

TEST_CASE("subset enumeration on the hand instance") {
    // Dead eavesdropper links with a(2^1 - 1) = a give pmin = {1, 2, 4}.
    std::vector<EffectiveState> states = {test::state(1.0, kInf, 1.0, 1.0 / 3.0),
                                          test::state(2.0, kInf, 1.0, 1.0 / 3.0),
                                          test::state(4.0, kInf, 1.0, 1.0 / 3.0)};
    const TargetRates t{0.0, 1.0};
    CHECK(std::fabs(oracle::brute_force_plan(states, t, 0.9) - 23.0 / 60.0) <= 1e-15);
    CHECK(oracle::brute_force_plan(states, t, 7.0 / 3.0) == 0.0);
    CHECK(oracle::brute_force_plan(states, t, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("binary-gain couplings") {
    CHECK(oracle::two_state_secrecy(oracle::TwoStateCoupling::identical, 1.0, 1.0) == 0.0);
    CHECK(oracle::two_state_secrecy(oracle::TwoStateCoupling::anti, 0.0, 1.0) == 0.0);
    // Mirrored gains concentrate the whole budget on the exposed atom.
    const double rate = oracle::two_state_secrecy(oracle::TwoStateCoupling::anti, 1.0, 1.0);
    CHECK(rate == doctest::Approx(0.5 * std::log2(3.0)).epsilon(1e-9));
}
