#ifndef SECBC_ORACLE_HPP
#define SECBC_ORACLE_HPP

#include <span>
#include <vector>

#include "channel.hpp"
#include "power_alloc.hpp"
#include "rate_region.hpp"

namespace secbc {
// Search-only references for the closed-form solvers. Rates are evaluated
// through the shared rate functionals; the optimization here is exhaustive
// enumeration, never a stationarity formula.
namespace oracle {

struct GridBest {
    PowerAllocation alloc;
    double objective = 0.0;
};

// Enumerates every allocation on the step-delta simplex with weighted total
// power at most the budget (at most 3 states; at most 1e8 grid points) and
// returns the best weighted objective. Ties break toward the
// lexicographically smallest allocation.
GridBest grid_search_weighted(std::span<const EffectiveState> states, const Weights& w,
                              double budget, double resolution);

// All grid allocations mapped to (common rate, confidential rate) points.
std::vector<RatePoint> grid_region_cloud(std::span<const EffectiveState> states, double budget,
                                         double resolution);

// Minimal outage over every served subset plus one fractionally served
// boundary state (at most 12 states).
double brute_force_plan(std::span<const EffectiveState> states, const TargetRates& targets,
                        double budget);

enum class TwoStateCoupling { identical, anti };

// The binary-gain coupled pair: both gains are 0 or 1 with equal probability,
// either tied together or mirrored. Confidential-only service; the single
// free power value is found by direct one-dimensional search.
double two_state_secrecy(TwoStateCoupling coupling, double budget, double mu_sq);

// The two-atom state list the coupling induces, for running the same model
// through the regular allocation pipeline.
std::vector<EffectiveState> two_state_states(TwoStateCoupling coupling, double mu_sq);

} // namespace oracle
} // namespace secbc

#endif
