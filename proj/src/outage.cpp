#include "outage.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace secbc {

namespace {

void check_targets(const TargetRates& t) {
    if (!(t.r0 >= 0.0) || !(t.r1 >= 0.0))
        fail(errc::invalid_argument, "target rates must be nonnegative");
}

// Confidential layer q solving c*log2((1 + q/a)/(1 + q/b)) = r1, infinite
// past the per-state ceiling. Strict feasibility: r1 == c*log2(b/a) needs
// infinite power already.
double confidential_layer(const EffectiveState& st, double r1) {
    if (r1 == 0.0)
        return 0.0;
    if (!st.in_A)
        return kInf;
    const double scaled = r1 / st.prefactor;
    if (!(scaled < std::log2(st.b / st.a)))
        return kInf;
    const double k1 = std::exp2(scaled);
    return (k1 - 1.0) / (1.0 / st.a - k1 / st.b);
}

} // namespace

double min_power_confidential(const EffectiveState& st, double r1) {
    if (!(r1 >= 0.0))
        fail(errc::invalid_argument, "target rate must be nonnegative");
    return confidential_layer(st, r1);
}

double common_power(const EffectiveState& st, double r0) {
    if (!(r0 >= 0.0))
        fail(errc::invalid_argument, "target rate must be nonnegative");
    if (r0 == 0.0)
        return 0.0;
    const double worst = std::max(st.a, st.b);
    if (std::isinf(worst))
        return kInf;
    return (std::exp2(r0 / st.prefactor) - 1.0) * worst;
}

double min_power_pair(const EffectiveState& st, const TargetRates& targets) {
    check_targets(targets);
    const double q = confidential_layer(st, targets.r1);
    if (std::isinf(q))
        return kInf;
    if (targets.r0 == 0.0)
        return q;
    const double worst = std::max(st.a, st.b);
    if (std::isinf(worst))
        return kInf;
    return q + (std::exp2(targets.r0 / st.prefactor) - 1.0) * (worst + q);
}

double delta_min_power(const EffectiveState& st, const TargetRates& targets) {
    check_targets(targets);
    if (targets.r1 == 0.0)
        return 0.0;
    if (!st.in_A)
        return kInf;
    const double scaled = targets.r1 / st.prefactor;
    if (!(scaled < std::log2(st.b / st.a)))
        return kInf;
    const double k1 = std::exp2(scaled);
    const double k0 = std::exp2(targets.r0 / st.prefactor);
    return k0 * (k1 - 1.0) / (1.0 / st.a - k1 / st.b);
}

OutagePlan threshold_plan(std::span<const EffectiveState> states, std::span<const double> pmin,
                          double budget) {
    if (states.size() != pmin.size())
        fail(errc::invalid_argument, "per-state power list and state list differ in length");
    double weight_sum = 0.0;
    for (size_t i = 0; i < states.size(); ++i) {
        weight_sum += states[i].weight;
        if (std::isnan(pmin[i]) || pmin[i] < 0.0)
            fail(errc::invalid_argument, "per-state powers must be nonnegative");
    }
    if (std::fabs(weight_sum - 1.0) > 1e-9)
        fail(errc::invalid_argument, "state weights must sum to 1");

    OutagePlan plan;
    plan.pmin.assign(pmin.begin(), pmin.end());
    plan.base.assign(states.size(), 0.0);

    double infeasible_weight = 0.0;
    double finite_cost = 0.0;
    std::vector<size_t> order;
    order.reserve(states.size());
    for (size_t i = 0; i < states.size(); ++i) {
        if (std::isinf(pmin[i])) {
            infeasible_weight += states[i].weight;
        } else {
            finite_cost += states[i].weight * pmin[i];
            order.push_back(i);
        }
    }

    if (budget <= 0.0) {
        // Nothing can be bought; zero-power states are still served.
        plan.s_star = 0.0;
        plan.w_star = 1.0;
        plan.spent = 0.0;
        for (size_t i : order)
            if (pmin[i] > 0.0)
                plan.outage += states[i].weight;
        plan.outage += infeasible_weight;
        return plan;
    }
    if (finite_cost <= budget) {
        plan.s_star = kInf;
        plan.w_star = 1.0;
        plan.spent = finite_cost;
        plan.outage = infeasible_weight;
        return plan;
    }

    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return pmin[x] < pmin[y]; });

    // Walk atoms of equal power; stop at the first whose full inclusion
    // would overflow the budget and serve it fractionally.
    double served_cost = 0.0;
    double unserved_weight = infeasible_weight;
    size_t k = 0;
    while (k < order.size()) {
        const double value = pmin[order[k]];
        double atom_weight = 0.0;
        size_t j = k;
        while (j < order.size() && pmin[order[j]] == value) {
            atom_weight += states[order[j]].weight;
            ++j;
        }
        const double atom_cost = atom_weight * value;
        if (served_cost + atom_cost > budget) {
            plan.s_star = value;
            plan.w_star = std::clamp((budget - served_cost) / atom_cost, 0.0, 1.0);
            plan.spent = served_cost + plan.w_star * atom_cost;
            unserved_weight += (1.0 - plan.w_star) * atom_weight;
            for (size_t r = j; r < order.size(); ++r)
                unserved_weight += states[order[r]].weight;
            plan.outage = unserved_weight;
            return plan;
        }
        served_cost += atom_cost;
        k = j;
    }
    // Only reachable when rounding puts the sorted cost sum a hair under the
    // index-order sum; everything finite fits.
    plan.s_star = kInf;
    plan.w_star = 1.0;
    plan.spent = served_cost;
    plan.outage = infeasible_weight;
    return plan;
}

OutagePlan plan_for_targets(std::span<const EffectiveState> states, const TargetRates& targets,
                            double budget, PlanMode mode) {
    check_targets(targets);
    std::vector<double> pmin(states.size());
    OutagePlan plan;
    switch (mode) {
        case PlanMode::joint:
            for (size_t i = 0; i < states.size(); ++i)
                pmin[i] = min_power_pair(states[i], targets);
            plan = threshold_plan(states, pmin, budget);
            break;
        case PlanMode::confidential_only:
            for (size_t i = 0; i < states.size(); ++i)
                pmin[i] = min_power_confidential(states[i], targets.r1);
            plan = threshold_plan(states, pmin, budget);
            break;
        case PlanMode::constant_common: {
            std::vector<double> base(states.size());
            double base_cost = 0.0;
            for (size_t i = 0; i < states.size(); ++i) {
                base[i] = common_power(states[i], targets.r0);
                base_cost += states[i].weight * base[i];
            }
            if (!(base_cost <= budget)) {
                char msg[160];
                std::snprintf(msg, sizeof msg,
                              "constant common rate needs expected power >= %.17g", base_cost);
                fail(errc::infeasible, msg);
            }
            for (size_t i = 0; i < states.size(); ++i)
                pmin[i] = delta_min_power(states[i], targets);
            plan = threshold_plan(states, pmin, budget - base_cost);
            plan.base = std::move(base);
            plan.spent += base_cost;
            break;
        }
    }
    plan.targets = targets;
    plan.mode = mode;
    return plan;
}

double plan_allocation(const OutagePlan& plan, size_t state_index, double uniform_draw) {
    if (state_index >= plan.pmin.size())
        fail(errc::invalid_argument, "state index out of range");
    const double p = plan.pmin[state_index];
    double extra = 0.0;
    if (std::isfinite(p)) {
        if (p < plan.s_star)
            extra = p;
        else if (p == plan.s_star && uniform_draw < plan.w_star)
            extra = p;
    }
    return plan.base[state_index] + extra;
}

double outage_probability(std::span<const EffectiveState> states, const OutagePlan& plan) {
    if (states.size() != plan.pmin.size())
        fail(errc::invalid_argument, "plan was built for a different state list");
    double out = 0.0;
    for (size_t i = 0; i < states.size(); ++i) {
        const double p = plan.pmin[i];
        double serve = 0.0;
        if (std::isfinite(p)) {
            if (p < plan.s_star)
                serve = 1.0;
            else if (p == plan.s_star)
                serve = plan.w_star;
        }
        out += states[i].weight * (1.0 - serve);
    }
    return out;
}

} // namespace secbc
