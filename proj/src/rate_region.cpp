#include "rate_region.hpp"

#include <algorithm>
#include <cmath>

namespace secbc {

namespace {

constexpr double kLn2 = 0.69314718055994530941723212145818;

// log2(1 + x) without cancellation near x = 0. x/inf gives a clean zero.
double log2_1p(double x) { return std::log1p(x) / kLn2; }

} // namespace

RateTriple weighted_rate_triple(std::span<const EffectiveState> states,
                                std::span<const PowerPair> alloc) {
    validate_allocation(states, alloc);
    RateTriple rt;
    for (size_t i = 0; i < states.size(); ++i) {
        const EffectiveState& st = states[i];
        const double wc = st.weight * st.prefactor;
        const double p0 = alloc[i].p0;
        const double p1 = st.in_A ? alloc[i].p1 : 0.0;
        rt.r01 += wc * log2_1p(p0 / (st.a + p1));
        rt.r02 += wc * log2_1p(p0 / (st.b + p1));
        if (st.in_A)
            rt.r1 += std::max(0.0, wc * (log2_1p(p1 / st.a) - log2_1p(p1 / st.b)));
    }
    return rt;
}

RatePoint gaussian_bcc_point(double power, const GaussianSubchannel& sc, double beta,
                             double prefactor) {
    if (!(beta >= 0.0 && beta <= 1.0))
        fail(errc::invalid_argument, "beta must lie in [0, 1]");
    if (!(power >= 0.0))
        fail(errc::invalid_argument, "power must be nonnegative");
    const EffectiveState st = effective_state(sc, prefactor, 1.0);
    const double p1 = beta * power;
    const double p0 = (1.0 - beta) * power;
    const double c = st.prefactor;
    RatePoint pt;
    pt.r0 = c * std::min(log2_1p(p0 / (st.a + p1)), log2_1p(p0 / (st.b + p1)));
    pt.r1 = std::max(0.0, c * (log2_1p(p1 / st.a) - log2_1p(p1 / st.b)));
    return pt;
}

bool region_contains(const EffectiveState& st, double power, const TargetRates& targets) {
    if (!(power >= 0.0))
        fail(errc::invalid_argument, "power must be nonnegative");
    const double c = st.prefactor;

    // Confidential layer first: smallest power q achieving r1.
    double q = 0.0;
    if (targets.r1 > 0.0) {
        if (!st.in_A)
            return false;
        const double k1 = std::exp2(targets.r1 / c);
        if (!(targets.r1 / c < std::log2(st.b / st.a)))
            return false;
        q = (k1 - 1.0) / (1.0 / st.a - k1 / st.b);
        if (q > power)
            return false;
    }

    // Common layer on top of it; the larger effective noise binds.
    if (targets.r0 > 0.0) {
        const double k0 = std::exp2(targets.r0 / c);
        const double worst = std::max(st.a, st.b);
        if (std::isinf(worst))
            return false;
        if (power < q + (k0 - 1.0) * (worst + q))
            return false;
    }
    return true;
}

ParallelCommonCapacity parallel_common_capacity(
    std::span<const std::pair<double, double>> links) {
    ParallelCommonCapacity out;
    double sum1 = 0.0;
    double sum2 = 0.0;
    for (const auto& [c1, c2] : links) {
        if (!(c1 >= 0.0) || !(c2 >= 0.0))
            fail(errc::invalid_argument, "link capacities must be nonnegative");
        sum1 += c1;
        sum2 += c2;
        out.sum_of_mins += std::min(c1, c2);
    }
    out.min_of_sums = std::min(sum1, sum2);
    return out;
}

} // namespace secbc
