#ifndef SECBC_RATE_REGION_HPP
#define SECBC_RATE_REGION_HPP

#include <span>
#include <utility>
#include <vector>

#include "channel.hpp"

namespace secbc {

// Target rates for a block: common rate r0 and confidential rate r1 (bits/use).
struct TargetRates {
    double r0 = 0.0;
    double r1 = 0.0;
};

// Rates achieved by an allocation over a weighted state list:
//   r01 = sum w c log2(1 + p0/(a + p1[in A]))
//   r02 = sum w c log2(1 + p0/(b + p1[in A]))
//   r1  = sum over A of w c (log2(1 + p1/a) - log2(1 + p1/b))
RateTriple weighted_rate_triple(std::span<const EffectiveState> states,
                                std::span<const PowerPair> alloc);

// Single Gaussian subchannel with a fraction beta of the budget spent on the
// confidential layer and the rest superposed on top of it.
RatePoint gaussian_bcc_point(double power, const GaussianSubchannel& sc, double beta,
                             double prefactor);

// True iff the target pair lies in the single-state region at transmit power p.
// Both common-rate bounds are enforced (the weaker receiver binds).
bool region_contains(const EffectiveState& st, double power, const TargetRates& targets);

struct ParallelCommonCapacity {
    double min_of_sums = 0.0;  // coding across subchannels
    double sum_of_mins = 0.0;  // coding each subchannel separately
};

// Common-message capacity of parallel deterministic links with per-link
// capacities (c1, c2) to the two receivers.
ParallelCommonCapacity parallel_common_capacity(std::span<const std::pair<double, double>> links);

} // namespace secbc

#endif
