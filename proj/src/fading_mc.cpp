#include "fading_mc.hpp"

#include <algorithm>
#include <cmath>

namespace secbc {

namespace {

constexpr double kLn2 = 0.69314718055994530941723212145818;

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Uniform in the open interval (0, 1); keeps -log() finite on both tails.
double to_unit(uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

// Draw j of the stream belonging to sample i under this seed.
double stream_unit(uint64_t seed, uint64_t i, uint64_t j) {
    return to_unit(splitmix64(splitmix64(seed ^ (0xA0761D6478BD642FULL * (i + 1))) + j));
}

double log2_1p(double x) { return std::log1p(x) / kLn2; }

} // namespace

std::vector<EffectiveState> sample_states(const RayleighModel& model, const MCConfig& cfg) {
    if (!(model.sigma1 > 0.0) || !(model.sigma2 > 0.0))
        fail(errc::invalid_argument, "gain means must be positive");
    if (!(model.mu_sq > 0.0) || !(model.nu_sq > 0.0))
        fail(errc::invalid_argument, "noise variances must be positive");
    if (cfg.n_samples == 0)
        fail(errc::invalid_argument, "sample count must be positive");

    std::vector<EffectiveState> states;
    states.reserve(cfg.n_samples);
    const double w = 1.0 / static_cast<double>(cfg.n_samples);
    for (size_t i = 0; i < cfg.n_samples; ++i) {
        const double u1 = stream_unit(cfg.seed, i, 1);
        double u2;
        switch (model.correlation) {
            case GainCorrelation::independent: u2 = stream_unit(cfg.seed, i, 2); break;
            case GainCorrelation::identical: u2 = u1; break;
            case GainCorrelation::anti: u2 = 1.0 - u1; break;
            default: fail(errc::invalid_argument, "unknown correlation mode");
        }
        FadingState fs;
        fs.h1_sq = -model.sigma1 * std::log(u1);
        fs.h2_sq = -model.sigma2 * std::log(u2);
        fs.mu_sq = model.mu_sq;
        fs.nu_sq = model.nu_sq;
        states.push_back(effective_state(fs, 1.0, w));
    }
    return states;
}

std::vector<Weights> weight_grid(size_t size, double ratio_lo, double ratio_hi) {
    if (size < 2)
        fail(errc::invalid_argument, "weight grid needs at least the two endpoints");
    if (!(ratio_lo > 0.0) || !(ratio_hi > ratio_lo))
        fail(errc::invalid_argument, "ratio range must be positive and increasing");
    std::vector<Weights> grid;
    grid.reserve(size);
    grid.push_back(Weights{1.0, 0.0});
    const size_t inner = size - 2;
    for (size_t k = 0; k < inner; ++k) {
        const double f = inner == 1 ? 0.5 : static_cast<double>(k) / (inner - 1);
        grid.push_back(Weights{1.0, ratio_lo * std::pow(ratio_hi / ratio_lo, f)});
    }
    grid.push_back(Weights{0.0, 1.0});
    return grid;
}

std::vector<BoundaryPoint> ergodic_boundary(const RayleighModel& model, double budget,
                                            const MCConfig& cfg) {
    const std::vector<EffectiveState> states = sample_states(model, cfg);
    const std::vector<Weights> grid = weight_grid(cfg.weight_grid_size);
    std::vector<BoundaryPoint> curve;
    curve.reserve(grid.size());
    for (const Weights& w : grid) {
        const AllocationResult res = optimal_allocation(states, w, budget);
        curve.push_back(BoundaryPoint{w.gamma0, w.gamma1,
                                      RatePoint{res.rates.common(), res.rates.r1}, res.tag});
    }
    return curve;
}

Estimate wiretap_capacity_estimate(std::span<const EffectiveState> states, double budget) {
    const WiretapResult res = wiretap_allocation(states, budget);
    const size_t n = states.size();
    double mean = 0.0;
    std::vector<double> contrib(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        const EffectiveState& st = states[i];
        if (st.in_A && res.alloc[i].p1 > 0.0)
            contrib[i] = st.prefactor *
                         (log2_1p(res.alloc[i].p1 / st.a) - log2_1p(res.alloc[i].p1 / st.b));
        mean += contrib[i];
    }
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (size_t i = 0; i < n; ++i)
        var += (contrib[i] - mean) * (contrib[i] - mean);
    var /= static_cast<double>(n > 1 ? n - 1 : 1);
    return Estimate{res.capacity, std::sqrt(var / static_cast<double>(n))};
}

Estimate common_capacity_estimate(std::span<const EffectiveState> states, double budget) {
    const AllocationResult res = optimal_allocation(states, Weights{1.0, 0.0}, budget);
    const size_t n = states.size();
    const bool first_binds = res.rates.r01 <= res.rates.r02;
    double mean = 0.0;
    std::vector<double> contrib(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        const EffectiveState& st = states[i];
        const double noise = first_binds ? st.a : st.b;
        contrib[i] = st.prefactor * log2_1p(res.alloc[i].p0 / noise);
        mean += contrib[i];
    }
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (size_t i = 0; i < n; ++i)
        var += (contrib[i] - mean) * (contrib[i] - mean);
    var /= static_cast<double>(n > 1 ? n - 1 : 1);
    return Estimate{res.rates.common(), std::sqrt(var / static_cast<double>(n))};
}

double uniform_baseline_rate(std::span<const EffectiveState> states, double budget) {
    if (!(budget >= 0.0))
        fail(errc::invalid_argument, "power budget must be nonnegative");
    double pr_a = 0.0;
    for (const EffectiveState& st : states)
        if (st.in_A)
            pr_a += st.weight;
    if (pr_a == 0.0)
        return 0.0;
    const double p = budget / pr_a;
    double rate = 0.0;
    for (const EffectiveState& st : states)
        if (st.in_A)
            rate += st.weight * st.prefactor * (log2_1p(p / st.a) - log2_1p(p / st.b));
    return rate;
}

std::vector<OutagePointResult> outage_curve(std::span<const EffectiveState> states,
                                            const TargetRates& targets,
                                            std::span<const double> budget_grid, PlanMode mode) {
    std::vector<OutagePointResult> curve;
    curve.reserve(budget_grid.size());
    for (double budget : budget_grid) {
        const OutagePlan plan = plan_for_targets(states, targets, budget, mode);
        curve.push_back(OutagePointResult{budget, plan.outage});
    }
    return curve;
}

std::vector<OutagePointResult> equal_power_outage(std::span<const EffectiveState> states,
                                                  const TargetRates& targets,
                                                  std::span<const double> budget_grid) {
    std::vector<OutagePointResult> curve;
    curve.reserve(budget_grid.size());
    for (double budget : budget_grid) {
        if (!(budget >= 0.0))
            fail(errc::invalid_argument, "power budget must be nonnegative");
        double out = 0.0;
        for (const EffectiveState& st : states)
            if (!region_contains(st, budget, targets))
                out += st.weight;
        curve.push_back(OutagePointResult{budget, out});
    }
    return curve;
}

} // namespace secbc
