#ifndef SECBC_TEST_HELPERS_HPP
#define SECBC_TEST_HELPERS_HPP

#include <cmath>
#include <random>
#include <vector>

#include "channel.hpp"
#include "power_alloc.hpp"
#include "rate_region.hpp"

namespace secbc::test {

inline EffectiveState state(double a, double b, double prefactor = 0.5, double weight = 1.0) {
    EffectiveState st;
    st.a = a;
    st.b = b;
    st.prefactor = prefactor;
    st.weight = weight;
    st.in_A = a < b;
    return st;
}

inline std::vector<EffectiveState> gaussian_states(const std::vector<double>& mu_sq,
                                                   const std::vector<double>& nu_sq) {
    std::vector<EffectiveState> states;
    for (size_t i = 0; i < mu_sq.size(); ++i)
        states.push_back(effective_state(GaussianSubchannel{mu_sq[i], nu_sq[i]}, 0.5, 1.0));
    return states;
}

// A random parallel-Gaussian instance small enough for the grid oracle.
struct RandomInstance {
    std::vector<EffectiveState> states;
    Weights weights;
    double budget = 1.0;
};

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

// Draws noise variances in [0.25, 4], gamma ratio in [0.1, 10] and a budget
// capped so the delta-resolution grid oracle stays under its point limit.
inline RandomInstance random_instance(std::mt19937_64& rng, double resolution) {
    RandomInstance inst;
    std::uniform_int_distribution<int> nchan(1, 3);
    const int n = nchan(rng);
    std::vector<double> mu(n), nu(n);
    for (int i = 0; i < n; ++i) {
        mu[i] = log_uniform(rng, 0.25, 4.0);
        nu[i] = log_uniform(rng, 0.25, 4.0);
    }
    inst.states = gaussian_states(mu, nu);

    size_t dims = 0;
    for (const EffectiveState& st : inst.states)
        dims += st.in_A ? 2 : 1;
    // Budget ceilings keeping C(m + d, d) comfortably below 1e8 at m = P/delta.
    static const double cap_by_dims[] = {0.0, 10.0, 4.0, 0.35, 0.12, 0.0};
    double cap = dims <= 4 ? cap_by_dims[dims] : 0.0;
    while (cap < 0.1) {
        // Too many confidential dimensions; flip a state out of A.
        for (EffectiveState& st : inst.states)
            if (st.in_A) {
                std::swap(st.a, st.b);
                st.in_A = false;
                break;
            }
        dims -= 1;
        cap = dims <= 4 ? cap_by_dims[dims] : 0.0;
    }
    std::uniform_real_distribution<double> pu(0.1, cap);
    inst.budget = std::max(0.1, std::min(cap, pu(rng)));
    inst.budget = std::round(inst.budget / resolution) * resolution;

    inst.weights.gamma0 = 1.0;
    inst.weights.gamma1 = log_uniform(rng, 0.1, 10.0);
    return inst;
}

// Gradient bound of the weighted objective over the instance box, used to
// size the grid-oracle comparison slack.
inline double objective_lipschitz(const RandomInstance& inst) {
    double bound = 0.0;
    for (const EffectiveState& st : inst.states) {
        const double noise = std::min(st.a, st.b);
        bound += st.weight * st.prefactor * (inst.weights.gamma0 + inst.weights.gamma1) /
                 (noise * 0.6931471805599453);
    }
    return bound;
}

} // namespace secbc::test

#endif
