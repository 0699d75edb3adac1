#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "outage.hpp"

namespace secbc {
namespace oracle {

namespace {

constexpr double kMaxGridPoints = 1e8;
constexpr double kMaxCloudPoints = 4e6;

struct GridDim {
    size_t state;
    bool confidential;  // this dimension is the state's p1
    size_t steps;       // grid indices 0..steps
};

// Conservative point count: every dimension bounded by the cheapest state's
// reach. Exact for unit weights.
double count_bound(size_t dims, double budget, double min_weight, double resolution) {
    const double m = std::floor(budget / (min_weight * resolution));
    double count = 1.0;
    for (size_t j = 1; j <= dims; ++j) {
        count *= (m + static_cast<double>(j)) / static_cast<double>(j);
        if (count > 1e18)
            break;
    }
    return count;
}

std::vector<GridDim> layout_dims(std::span<const EffectiveState> states, double budget,
                                 double resolution) {
    std::vector<GridDim> dims;
    for (size_t i = 0; i < states.size(); ++i) {
        const size_t steps = static_cast<size_t>(
            std::floor(budget / (states[i].weight * resolution)));
        if (states[i].in_A)
            dims.push_back(GridDim{i, true, steps});
        dims.push_back(GridDim{i, false, steps});
    }
    return dims;
}

void check_grid_size(std::span<const EffectiveState> states, size_t dims, double budget,
                     double resolution, double limit) {
    double min_weight = kInf;
    for (const EffectiveState& st : states)
        min_weight = std::min(min_weight, st.weight);
    if (!(min_weight > 0.0))
        fail(errc::invalid_argument, "grid oracle needs strictly positive state weights");
    const double bound = count_bound(dims, budget, min_weight, resolution);
    if (bound > limit) {
        char msg[200];
        std::snprintf(msg, sizeof msg,
                      "grid of ~%.3g points exceeds the %.0e limit; raise resolution to at "
                      "least %.3g",
                      bound, limit,
                      resolution * std::pow(bound / limit, 1.0 / static_cast<double>(dims)));
        fail(errc::too_large, msg);
    }
}

// Walks the weighted simplex depth-first, invoking leaf(alloc) at every
// grid point within the remaining budget.
template <typename Leaf>
void enumerate(std::span<const EffectiveState> states, std::span<const GridDim> dims,
               double resolution, PowerAllocation& alloc, size_t d, double remaining,
               Leaf& leaf) {
    if (d == dims.size()) {
        leaf(alloc);
        return;
    }
    const GridDim& dim = dims[d];
    const double unit = states[dim.state].weight * resolution;
    const size_t max_k = std::min(dim.steps, static_cast<size_t>(remaining / unit));
    for (size_t k = 0; k <= max_k; ++k) {
        const double value = static_cast<double>(k) * resolution;
        if (dim.confidential)
            alloc[dim.state].p1 = value;
        else
            alloc[dim.state].p0 = value;
        enumerate(states, dims, resolution, alloc, d + 1,
                  remaining - static_cast<double>(k) * unit, leaf);
    }
    if (dim.confidential)
        alloc[dim.state].p1 = 0.0;
    else
        alloc[dim.state].p0 = 0.0;
}

bool lexicographically_less(const PowerAllocation& x, const PowerAllocation& y) {
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].p0 != y[i].p0)
            return x[i].p0 < y[i].p0;
        if (x[i].p1 != y[i].p1)
            return x[i].p1 < y[i].p1;
    }
    return false;
}

} // namespace

GridBest grid_search_weighted(std::span<const EffectiveState> states, const Weights& w,
                              double budget, double resolution) {
    if (states.size() > 3)
        fail(errc::invalid_argument, "grid oracle handles at most 3 states");
    if (!(resolution > 0.0) || !(budget >= 0.0))
        fail(errc::invalid_argument, "resolution must be positive and budget nonnegative");

    const std::vector<GridDim> dims = layout_dims(states, budget, resolution);
    check_grid_size(states, dims.size(), budget, resolution, kMaxGridPoints);

    GridBest best;
    best.alloc.assign(states.size(), PowerPair{});
    best.objective = -kInf;
    PowerAllocation alloc(states.size());
    auto leaf = [&](const PowerAllocation& candidate) {
        const double obj = weighted_objective(w, weighted_rate_triple(states, candidate));
        if (obj > best.objective ||
            (obj == best.objective && lexicographically_less(candidate, best.alloc))) {
            best.objective = obj;
            best.alloc = candidate;
        }
    };
    enumerate(states, dims, resolution, alloc, 0, budget, leaf);
    return best;
}

std::vector<RatePoint> grid_region_cloud(std::span<const EffectiveState> states, double budget,
                                         double resolution) {
    if (states.size() > 2)
        fail(errc::invalid_argument, "region cloud handles at most 2 states");
    if (!(resolution > 0.0) || !(budget >= 0.0))
        fail(errc::invalid_argument, "resolution must be positive and budget nonnegative");

    const std::vector<GridDim> dims = layout_dims(states, budget, resolution);
    check_grid_size(states, dims.size(), budget, resolution, kMaxCloudPoints);

    std::vector<RatePoint> cloud;
    PowerAllocation alloc(states.size());
    auto leaf = [&](const PowerAllocation& candidate) {
        const RateTriple rt = weighted_rate_triple(states, candidate);
        cloud.push_back(RatePoint{rt.common(), rt.r1});
    };
    enumerate(states, dims, resolution, alloc, 0, budget, leaf);
    return cloud;
}

double brute_force_plan(std::span<const EffectiveState> states, const TargetRates& targets,
                        double budget) {
    if (states.size() > 12)
        fail(errc::invalid_argument, "plan oracle handles at most 12 states");
    budget = std::max(budget, 0.0);

    std::vector<double> cost(states.size());
    std::vector<size_t> finite;
    double best = 1.0;
    for (size_t i = 0; i < states.size(); ++i) {
        const double p = min_power_pair(states[i], targets);
        cost[i] = states[i].weight * p;
        if (std::isfinite(p))
            finite.push_back(i);
    }

    const size_t n = finite.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        double spent = 0.0;
        double served = 0.0;
        for (size_t j = 0; j < n; ++j)
            if (mask & (size_t{1} << j)) {
                spent += cost[finite[j]];
                served += states[finite[j]].weight;
            }
        if (spent > budget)
            continue;
        best = std::min(best, 1.0 - served);
        for (size_t j = 0; j < n; ++j) {
            if (mask & (size_t{1} << j))
                continue;
            const size_t i = finite[j];
            const double frac =
                cost[i] > 0.0 ? std::min(1.0, (budget - spent) / cost[i]) : 1.0;
            best = std::min(best, 1.0 - served - frac * states[i].weight);
        }
    }
    return best;
}

std::vector<EffectiveState> two_state_states(TwoStateCoupling coupling, double mu_sq) {
    if (!(mu_sq > 0.0))
        fail(errc::invalid_argument, "noise variance must be positive");
    std::vector<EffectiveState> states;
    if (coupling == TwoStateCoupling::identical) {
        states.push_back(effective_state(FadingState{0.0, 0.0, mu_sq, mu_sq}, 1.0, 0.5));
        states.push_back(effective_state(FadingState{1.0, 1.0, mu_sq, mu_sq}, 1.0, 0.5));
    } else {
        states.push_back(effective_state(FadingState{1.0, 0.0, mu_sq, mu_sq}, 1.0, 0.5));
        states.push_back(effective_state(FadingState{0.0, 1.0, mu_sq, mu_sq}, 1.0, 0.5));
    }
    return states;
}

double two_state_secrecy(TwoStateCoupling coupling, double budget, double mu_sq) {
    if (!(budget >= 0.0))
        fail(errc::invalid_argument, "power budget must be nonnegative");
    const std::vector<EffectiveState> states = two_state_states(coupling, mu_sq);

    size_t atom = states.size();
    for (size_t i = 0; i < states.size(); ++i)
        if (states[i].in_A)
            atom = i;
    if (atom == states.size())
        return 0.0;

    const EffectiveState& st = states[atom];
    const double p_max = budget / st.weight;
    auto rate_at = [&](double p) {
        return st.weight * st.prefactor *
               (std::log2(1.0 + p / st.a) - std::log2(1.0 + p / st.b));
    };

    // Golden-section search; the one-dimensional objective is concave.
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double lo = 0.0, hi = p_max;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = rate_at(x1), f2 = rate_at(x2);
    for (int i = 0; i < 300 && hi - lo > 1e-15 * (1.0 + p_max); ++i) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = rate_at(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = rate_at(x1);
        }
    }
    return std::max({rate_at(lo), rate_at(hi), rate_at(0.5 * (lo + hi))});
}

} // namespace oracle
} // namespace secbc
