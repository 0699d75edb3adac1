#include "channel.hpp"

namespace secbc {

namespace {

void check_prefactor(double prefactor) {
    if (prefactor != 0.5 && prefactor != 1.0)
        fail(errc::invalid_argument, "prefactor must be 0.5 (real channel) or 1 (complex channel)");
}

void check_weight(double weight) {
    if (!(weight >= 0.0) || std::isinf(weight))
        fail(errc::invalid_argument, "state weight must be finite and nonnegative");
}

EffectiveState make_state(double a, double b, double prefactor, double weight) {
    EffectiveState st;
    st.a = a;
    st.b = b;
    st.prefactor = prefactor;
    st.weight = weight;
    st.in_A = a < b;
    return st;
}

} // namespace

EffectiveState effective_state(const GaussianSubchannel& sc, double prefactor, double weight) {
    if (!(sc.mu_sq > 0.0) || !(sc.nu_sq > 0.0))
        fail(errc::invalid_argument, "noise variances must be positive");
    check_prefactor(prefactor);
    check_weight(weight);
    return make_state(sc.mu_sq, sc.nu_sq, prefactor, weight);
}

EffectiveState effective_state(const FadingState& fs, double prefactor, double weight) {
    if (!(fs.mu_sq > 0.0) || !(fs.nu_sq > 0.0))
        fail(errc::invalid_argument, "noise variances must be positive");
    if (!(fs.h1_sq >= 0.0) || !(fs.h2_sq >= 0.0))
        fail(errc::invalid_argument, "power gains must be nonnegative");
    check_prefactor(prefactor);
    check_weight(weight);
    const double a = fs.h1_sq > 0.0 ? fs.mu_sq / fs.h1_sq : kInf;
    const double b = fs.h2_sq > 0.0 ? fs.nu_sq / fs.h2_sq : kInf;
    return make_state(a, b, prefactor, weight);
}

double total_power(std::span<const EffectiveState> states, std::span<const PowerPair> alloc) {
    if (states.size() != alloc.size())
        fail(errc::invalid_argument, "allocation and state list differ in length");
    double total = 0.0;
    for (size_t i = 0; i < states.size(); ++i)
        total += states[i].weight * (alloc[i].p0 + alloc[i].p1);
    return total;
}

void validate_allocation(std::span<const EffectiveState> states, std::span<const PowerPair> alloc) {
    if (states.size() != alloc.size())
        fail(errc::invalid_argument, "allocation and state list differ in length");
    for (size_t i = 0; i < states.size(); ++i) {
        if (!(alloc[i].p0 >= 0.0) || !(alloc[i].p1 >= 0.0))
            fail(errc::invalid_argument, "powers must be nonnegative");
        if (!states[i].in_A && alloc[i].p1 > 0.0)
            fail(errc::invalid_argument, "confidential power on a state outside A");
    }
}

} // namespace secbc
