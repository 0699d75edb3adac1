#ifndef SECBC_CHANNEL_HPP
#define SECBC_CHANNEL_HPP

#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "errors.hpp"

namespace secbc {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// A real Gaussian subchannel: noise variances at receiver 1 and receiver 2.
struct GaussianSubchannel {
    double mu_sq;
    double nu_sq;
};

// One fading realization: power gains to the two receivers plus noise variances.
struct FadingState {
    double h1_sq;
    double h2_sq;
    double mu_sq;
    double nu_sq;
};

// A subchannel or fading realization reduced to effective noise levels.
//   a = mu^2 / |h1|^2   effective noise on the link to receiver 1
//   b = nu^2 / |h2|^2   effective noise on the link to receiver 2
// Zero gain maps to infinite effective noise. A state is in the set A when
// receiver 1 has the strictly better link (a < b); confidential power is
// only ever placed on A. Ties a == b go to the complement.
struct EffectiveState {
    double a = kInf;
    double b = kInf;
    double prefactor = 0.5;  // 1/2 for real channels, 1 for proper complex ones
    double weight = 1.0;
    bool in_A = false;
};

// Per-state transmit powers: p0 carries the common message, p1 the
// confidential one. p1 must be zero on states outside A.
struct PowerPair {
    double p0 = 0.0;
    double p1 = 0.0;
};

using PowerAllocation = std::vector<PowerPair>;

// The two common-rate bounds and the confidential rate, in bits per use.
// The achievable common rate is min(r01, r02).
struct RateTriple {
    double r01 = 0.0;
    double r02 = 0.0;
    double r1 = 0.0;

    double common() const { return r01 < r02 ? r01 : r02; }
};

struct RatePoint {
    double r0 = 0.0;
    double r1 = 0.0;
};

EffectiveState effective_state(const GaussianSubchannel& sc, double prefactor, double weight);
EffectiveState effective_state(const FadingState& fs, double prefactor, double weight);

// Weighted total transmit power of an allocation.
double total_power(std::span<const EffectiveState> states, std::span<const PowerPair> alloc);

// Checks sizes, nonnegativity and the p1-on-A restriction.
void validate_allocation(std::span<const EffectiveState> states, std::span<const PowerPair> alloc);

} // namespace secbc

#endif
