#ifndef SECBC_OUTAGE_HPP
#define SECBC_OUTAGE_HPP

#include <span>
#include <vector>

#include "channel.hpp"
#include "rate_region.hpp"

namespace secbc {

// Smallest power supporting both target rates on one state: the confidential
// layer is sized first, then the common layer on top of it. Infinite when the
// state cannot carry r1 (outside A, or r1 at or past the per-state ceiling
// log2(b/a)) or cannot carry r0 (a dead link to either receiver).
double min_power_pair(const EffectiveState& st, const TargetRates& targets);

// Confidential layer alone.
double min_power_confidential(const EffectiveState& st, double r1);

// Common message alone; the weaker receiver sets the price.
double common_power(const EffectiveState& st, double r0);

// Extra power for the confidential layer on top of a guaranteed common layer,
// equal to min_power_pair - common_power on its finite domain.
double delta_min_power(const EffectiveState& st, const TargetRates& targets);

enum class PlanMode { joint, confidential_only, constant_common };

// A serve-or-skip power rule under a long-term budget. States cheaper than
// the threshold s_star are always served, the atom at s_star is served with
// probability w_star, everything else is skipped.
struct OutagePlan {
    TargetRates targets;
    PlanMode mode = PlanMode::joint;
    double s_star = kInf;
    double w_star = 1.0;
    double outage = 0.0;
    double spent = 0.0;             // expected power including any base layer
    std::vector<double> pmin;       // thresholded per-state power
    std::vector<double> base;       // always-on per-state power (constant-common)
};

// Outage-minimizing threshold plan for explicitly supplied per-state powers.
// State weights must sum to one within 1e-9.
OutagePlan threshold_plan(std::span<const EffectiveState> states, std::span<const double> pmin,
                          double budget);

// Convenience: computes the per-state powers for the mode, then plans.
// constant_common requires budget >= expected common power and throws an
// infeasible error naming that floor otherwise.
OutagePlan plan_for_targets(std::span<const EffectiveState> states, const TargetRates& targets,
                            double budget, PlanMode mode);

// Power the plan assigns to one state; the boundary atom is randomized by the
// caller-supplied uniform draw so runs stay reproducible.
double plan_allocation(const OutagePlan& plan, size_t state_index, double uniform_draw);

// Probability weight of states the plan leaves unserved.
double outage_probability(std::span<const EffectiveState> states, const OutagePlan& plan);

} // namespace secbc

#endif
