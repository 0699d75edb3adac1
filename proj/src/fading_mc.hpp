#ifndef SECBC_FADING_MC_HPP
#define SECBC_FADING_MC_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "channel.hpp"
#include "outage.hpp"
#include "power_alloc.hpp"

namespace secbc {

// How the two gain processes are coupled. The identical and anti modes tie
// both gains to one underlying uniform draw (same quantile, or mirrored).
enum class GainCorrelation { independent, identical, anti };

// Rayleigh fading: |h1|^2 and |h2|^2 are exponential with means sigma1 and
// sigma2 over unit-variance-scaled noises mu_sq, nu_sq.
struct RayleighModel {
    double sigma1 = 1.0;
    double sigma2 = 1.0;
    double mu_sq = 1.0;
    double nu_sq = 1.0;
    GainCorrelation correlation = GainCorrelation::independent;
};

struct MCConfig {
    size_t n_samples = 10000;
    uint64_t seed = 1;
    size_t weight_grid_size = 15;
};

// Equal-weight effective states, prefactor 1. Each sample's draws come from
// a stream keyed by (seed, index), so the list does not depend on evaluation
// order and repeats exactly for a given seed.
std::vector<EffectiveState> sample_states(const RayleighModel& model, const MCConfig& cfg);

// Boundary-tracing weight pairs: the common-only endpoint, log-spaced
// gamma1/gamma0 ratios, then the confidential-only endpoint.
std::vector<Weights> weight_grid(size_t size, double ratio_lo = 0.05, double ratio_hi = 50.0);

struct BoundaryPoint {
    double gamma0 = 1.0;
    double gamma1 = 0.0;
    RatePoint point;
    CaseTag tag;
};

// Ergodic secrecy boundary estimated on a sampled state set.
std::vector<BoundaryPoint> ergodic_boundary(const RayleighModel& model, double budget,
                                            const MCConfig& cfg);

// Mean and standard error of a sample-average estimate.
struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
};

// Wiretap secrecy capacity (confidential-only endpoint) with its Monte Carlo
// standard error, computed from the per-sample rate contributions.
Estimate wiretap_capacity_estimate(std::span<const EffectiveState> states, double budget);

// Max-min common rate (common-only endpoint) with its standard error taken
// along the binding receiver.
Estimate common_capacity_estimate(std::span<const EffectiveState> states, double budget);

// Confidential rate of the flat allocation spreading budget/Pr(A) over A.
double uniform_baseline_rate(std::span<const EffectiveState> states, double budget);

struct OutagePointResult {
    double budget = 0.0;
    double outage = 1.0;
};

// Outage of the threshold plan at each budget in the grid.
std::vector<OutagePointResult> outage_curve(std::span<const EffectiveState> states,
                                            const TargetRates& targets,
                                            std::span<const double> budget_grid, PlanMode mode);

// Outage when every state gets the same power regardless of its quality.
std::vector<OutagePointResult> equal_power_outage(std::span<const EffectiveState> states,
                                                  const TargetRates& targets,
                                                  std::span<const double> budget_grid);

} // namespace secbc

#endif
