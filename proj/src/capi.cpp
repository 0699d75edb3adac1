#include "secbc.h"

#include <memory>
#include <new>
#include <string>
#include <vector>

#include "channel.hpp"
#include "discrete.hpp"
#include "errors.hpp"
#include "fading_mc.hpp"
#include "oracle.hpp"
#include "outage.hpp"
#include "power_alloc.hpp"
#include "rate_region.hpp"

struct sbc_states {
    std::vector<secbc::EffectiveState> list;
};

struct sbc_plan {
    secbc::OutagePlan plan;
};

struct sbc_dm {
    std::vector<secbc::DiscreteJoint> subchannels;
};

namespace {

thread_local std::string g_last_error;

sbc_status to_status(secbc::errc code) {
    switch (code) {
        case secbc::errc::invalid_argument: return SBC_ERR_INVALID_ARGUMENT;
        case secbc::errc::infeasible: return SBC_ERR_INFEASIBLE;
        case secbc::errc::too_large: return SBC_ERR_TOO_LARGE;
        default: return SBC_ERR_INTERNAL;
    }
}

sbc_status set_error(sbc_status status, const char* what) {
    g_last_error = what;
    return status;
}

// Runs the body, translating exceptions into status codes.
template <typename Fn>
sbc_status guarded(Fn&& fn) {
    try {
        fn();
        return SBC_OK;
    } catch (const secbc::error& e) {
        return set_error(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(SBC_ERR_TOO_LARGE, "out of memory");
    } catch (const std::exception& e) {
        return set_error(SBC_ERR_INTERNAL, e.what());
    }
}

const sbc_states* require(const sbc_states* states) {
    if (states == nullptr)
        secbc::fail(secbc::errc::invalid_argument, "state handle is null");
    return states;
}

void require_ptr(const void* p, const char* name) {
    if (p == nullptr)
        secbc::fail(secbc::errc::invalid_argument, std::string(name) + " is null");
}

const secbc::EffectiveState& state_at(const sbc_states* states, size_t index) {
    if (index >= states->list.size())
        secbc::fail(secbc::errc::invalid_argument, "state index out of range");
    return states->list[index];
}

void store(double* out, double value) {
    if (out != nullptr)
        *out = value;
}

secbc::PlanMode to_mode(sbc_plan_mode mode) {
    switch (mode) {
        case SBC_PLAN_JOINT: return secbc::PlanMode::joint;
        case SBC_PLAN_CONFIDENTIAL: return secbc::PlanMode::confidential_only;
        case SBC_PLAN_CONSTANT_COMMON: return secbc::PlanMode::constant_common;
        default:
            secbc::fail(secbc::errc::invalid_argument, "unknown plan mode");
    }
}

sbc_case to_case(secbc::AllocCase c) {
    switch (c) {
        case secbc::AllocCase::one: return SBC_CASE_1;
        case secbc::AllocCase::two: return SBC_CASE_2;
        default: return SBC_CASE_3;
    }
}

} // namespace

extern "C" {

const char* sbc_version(void) { return "1.0.0"; }

const char* sbc_status_name(sbc_status status) {
    switch (status) {
        case SBC_OK: return "ok";
        case SBC_ERR_INVALID_ARGUMENT: return "invalid argument";
        case SBC_ERR_INFEASIBLE: return "infeasible";
        case SBC_ERR_TOO_LARGE: return "too large";
        default: return "internal error";
    }
}

const char* sbc_last_error(void) { return g_last_error.c_str(); }

sbc_status sbc_states_from_gaussian(const double* mu_sq, const double* nu_sq, size_t count,
                                    sbc_states** out) {
    return guarded([&] {
        require_ptr(out, "output handle");
        require_ptr(mu_sq, "mu_sq");
        require_ptr(nu_sq, "nu_sq");
        auto handle = std::make_unique<sbc_states>();
        handle->list.reserve(count);
        for (size_t i = 0; i < count; ++i)
            handle->list.push_back(secbc::effective_state(
                secbc::GaussianSubchannel{mu_sq[i], nu_sq[i]}, 0.5, 1.0));
        *out = handle.release();
    });
}

sbc_status sbc_states_from_fading(const double* h1_sq, const double* h2_sq, double mu_sq,
                                  double nu_sq, const double* weights, size_t count,
                                  sbc_states** out) {
    return guarded([&] {
        require_ptr(out, "output handle");
        require_ptr(h1_sq, "h1_sq");
        require_ptr(h2_sq, "h2_sq");
        if (count == 0)
            secbc::fail(secbc::errc::invalid_argument, "state count must be positive");
        auto handle = std::make_unique<sbc_states>();
        handle->list.reserve(count);
        const double equal = 1.0 / static_cast<double>(count);
        for (size_t i = 0; i < count; ++i)
            handle->list.push_back(secbc::effective_state(
                secbc::FadingState{h1_sq[i], h2_sq[i], mu_sq, nu_sq}, 1.0,
                weights != nullptr ? weights[i] : equal));
        *out = handle.release();
    });
}

sbc_status sbc_states_sample_rayleigh(double sigma1, double sigma2, double mu_sq, double nu_sq,
                                      sbc_correlation correlation, size_t count, uint64_t seed,
                                      sbc_states** out) {
    return guarded([&] {
        require_ptr(out, "output handle");
        secbc::RayleighModel model;
        model.sigma1 = sigma1;
        model.sigma2 = sigma2;
        model.mu_sq = mu_sq;
        model.nu_sq = nu_sq;
        switch (correlation) {
            case SBC_CORR_INDEPENDENT: model.correlation = secbc::GainCorrelation::independent; break;
            case SBC_CORR_IDENTICAL: model.correlation = secbc::GainCorrelation::identical; break;
            case SBC_CORR_ANTI: model.correlation = secbc::GainCorrelation::anti; break;
            default: secbc::fail(secbc::errc::invalid_argument, "unknown correlation mode");
        }
        secbc::MCConfig cfg;
        cfg.n_samples = count;
        cfg.seed = seed;
        auto handle = std::make_unique<sbc_states>();
        handle->list = secbc::sample_states(model, cfg);
        *out = handle.release();
    });
}

void sbc_states_free(sbc_states* states) { delete states; }

size_t sbc_states_count(const sbc_states* states) {
    return states == nullptr ? 0 : states->list.size();
}

sbc_status sbc_states_get(const sbc_states* states, size_t index, double* a, double* b,
                          double* weight, int* in_A) {
    return guarded([&] {
        const secbc::EffectiveState& st = state_at(require(states), index);
        store(a, st.a);
        store(b, st.b);
        store(weight, st.weight);
        if (in_A != nullptr)
            *in_A = st.in_A ? 1 : 0;
    });
}

sbc_status sbc_rate_triple(const sbc_states* states, const double* p0, const double* p1,
                           double* r01, double* r02, double* r1) {
    return guarded([&] {
        require(states);
        require_ptr(p0, "p0");
        require_ptr(p1, "p1");
        secbc::PowerAllocation alloc(states->list.size());
        for (size_t i = 0; i < alloc.size(); ++i)
            alloc[i] = secbc::PowerPair{p0[i], p1[i]};
        const secbc::RateTriple rt = secbc::weighted_rate_triple(states->list, alloc);
        store(r01, rt.r01);
        store(r02, rt.r02);
        store(r1, rt.r1);
    });
}

sbc_status sbc_gaussian_point(double power, double mu_sq, double nu_sq, double prefactor,
                              double beta, double* r0, double* r1) {
    return guarded([&] {
        const secbc::RatePoint pt = secbc::gaussian_bcc_point(
            power, secbc::GaussianSubchannel{mu_sq, nu_sq}, beta, prefactor);
        store(r0, pt.r0);
        store(r1, pt.r1);
    });
}

sbc_status sbc_region_contains(const sbc_states* states, size_t index, double power, double r0,
                               double r1, int* contains) {
    return guarded([&] {
        require_ptr(contains, "contains");
        const secbc::EffectiveState& st = state_at(require(states), index);
        *contains = secbc::region_contains(st, power, secbc::TargetRates{r0, r1}) ? 1 : 0;
    });
}

sbc_status sbc_parallel_common_capacity(const double* cap1, const double* cap2, size_t count,
                                        double* min_of_sums, double* sum_of_mins) {
    return guarded([&] {
        if (count > 0) {
            require_ptr(cap1, "cap1");
            require_ptr(cap2, "cap2");
        }
        std::vector<std::pair<double, double>> links(count);
        for (size_t i = 0; i < count; ++i)
            links[i] = {cap1[i], cap2[i]};
        const secbc::ParallelCommonCapacity cc = secbc::parallel_common_capacity(links);
        store(min_of_sums, cc.min_of_sums);
        store(sum_of_mins, cc.sum_of_mins);
    });
}

sbc_status sbc_optimal_allocation(const sbc_states* states, double gamma0, double gamma1,
                                  double power, double* p0, double* p1, sbc_case* tag,
                                  double* alpha, double* lambda, double* r01, double* r02,
                                  double* r1) {
    return guarded([&] {
        require(states);
        require_ptr(p0, "p0");
        require_ptr(p1, "p1");
        const secbc::AllocationResult res =
            secbc::optimal_allocation(states->list, secbc::Weights{gamma0, gamma1}, power);
        for (size_t i = 0; i < res.alloc.size(); ++i) {
            p0[i] = res.alloc[i].p0;
            p1[i] = res.alloc[i].p1;
        }
        if (tag != nullptr)
            *tag = to_case(res.tag.which);
        store(alpha, res.tag.alpha);
        store(lambda, res.lambda);
        store(r01, res.rates.r01);
        store(r02, res.rates.r02);
        store(r1, res.rates.r1);
    });
}

sbc_status sbc_wiretap_allocation(const sbc_states* states, double power, double* p1,
                                  double* capacity) {
    return guarded([&] {
        require(states);
        require_ptr(p1, "p1");
        const secbc::WiretapResult res = secbc::wiretap_allocation(states->list, power);
        for (size_t i = 0; i < res.alloc.size(); ++i)
            p1[i] = res.alloc[i].p1;
        store(capacity, res.capacity);
    });
}

sbc_status sbc_boundary_sweep(const sbc_states* states, double power, const double* gamma0,
                              const double* gamma1, size_t grid_count, double* r0, double* r1,
                              sbc_case* tags) {
    return guarded([&] {
        require(states);
        require_ptr(gamma0, "gamma0");
        require_ptr(gamma1, "gamma1");
        require_ptr(r0, "r0");
        require_ptr(r1, "r1");
        std::vector<secbc::Weights> grid(grid_count);
        for (size_t i = 0; i < grid_count; ++i)
            grid[i] = secbc::Weights{gamma0[i], gamma1[i]};
        const std::vector<secbc::SweepPoint> sweep =
            secbc::boundary_sweep(states->list, power, grid);
        for (size_t i = 0; i < sweep.size(); ++i) {
            r0[i] = sweep[i].point.r0;
            r1[i] = sweep[i].point.r1;
            if (tags != nullptr)
                tags[i] = to_case(sweep[i].tag.which);
        }
    });
}

sbc_status sbc_uniform_baseline_rate(const sbc_states* states, double power, double* rate) {
    return guarded([&] {
        require(states);
        store(rate, secbc::uniform_baseline_rate(states->list, power));
    });
}

sbc_status sbc_min_power_pair(const sbc_states* states, size_t index, double r0, double r1,
                              double* pmin) {
    return guarded([&] {
        const secbc::EffectiveState& st = state_at(require(states), index);
        store(pmin, secbc::min_power_pair(st, secbc::TargetRates{r0, r1}));
    });
}

sbc_status sbc_min_power_confidential(const sbc_states* states, size_t index, double r1,
                                      double* pmin) {
    return guarded([&] {
        const secbc::EffectiveState& st = state_at(require(states), index);
        store(pmin, secbc::min_power_confidential(st, r1));
    });
}

sbc_status sbc_common_power(const sbc_states* states, size_t index, double r0, double* p) {
    return guarded([&] {
        const secbc::EffectiveState& st = state_at(require(states), index);
        store(p, secbc::common_power(st, r0));
    });
}

sbc_status sbc_delta_min_power(const sbc_states* states, size_t index, double r0, double r1,
                               double* delta) {
    return guarded([&] {
        const secbc::EffectiveState& st = state_at(require(states), index);
        store(delta, secbc::delta_min_power(st, secbc::TargetRates{r0, r1}));
    });
}

sbc_status sbc_plan_build(const sbc_states* states, double r0, double r1, sbc_plan_mode mode,
                          double power, sbc_plan** out) {
    return guarded([&] {
        require(states);
        require_ptr(out, "output handle");
        auto handle = std::make_unique<sbc_plan>();
        handle->plan = secbc::plan_for_targets(states->list, secbc::TargetRates{r0, r1}, power,
                                               to_mode(mode));
        *out = handle.release();
    });
}

void sbc_plan_free(sbc_plan* plan) { delete plan; }

sbc_status sbc_plan_info(const sbc_plan* plan, double* s_star, double* w_star, double* outage,
                         double* spent) {
    return guarded([&] {
        if (plan == nullptr)
            secbc::fail(secbc::errc::invalid_argument, "plan handle is null");
        store(s_star, plan->plan.s_star);
        store(w_star, plan->plan.w_star);
        store(outage, plan->plan.outage);
        store(spent, plan->plan.spent);
    });
}

sbc_status sbc_plan_power(const sbc_plan* plan, size_t index, double uniform_draw,
                          double* power) {
    return guarded([&] {
        if (plan == nullptr)
            secbc::fail(secbc::errc::invalid_argument, "plan handle is null");
        store(power, secbc::plan_allocation(plan->plan, index, uniform_draw));
    });
}

sbc_status sbc_equal_power_outage(const sbc_states* states, double r0, double r1, double power,
                                  double* outage) {
    return guarded([&] {
        require(states);
        const double grid[1] = {power};
        const auto curve = secbc::equal_power_outage(states->list,
                                                     secbc::TargetRates{r0, r1}, grid);
        store(outage, curve.front().outage);
    });
}

sbc_status sbc_dm_create(sbc_dm** out) {
    return guarded([&] {
        require_ptr(out, "output handle");
        *out = new sbc_dm();
    });
}

void sbc_dm_free(sbc_dm* dm) { delete dm; }

sbc_status sbc_dm_add_subchannel(sbc_dm* dm, size_t nq, size_t nu, size_t nx, size_t ny,
                                 size_t nz, const double* pq, const double* pu_given_q,
                                 const double* px_given_u, const double* pyz_given_x) {
    return guarded([&] {
        if (dm == nullptr)
            secbc::fail(secbc::errc::invalid_argument, "channel handle is null");
        require_ptr(pq, "pq");
        require_ptr(pu_given_q, "pu_given_q");
        require_ptr(px_given_u, "px_given_u");
        require_ptr(pyz_given_x, "pyz_given_x");
        secbc::DiscreteJoint ch;
        ch.nq = nq;
        ch.nu = nu;
        ch.nx = nx;
        ch.ny = ny;
        ch.nz = nz;
        ch.pq.assign(pq, pq + nq);
        ch.pu_given_q.assign(pu_given_q, pu_given_q + nq * nu);
        ch.px_given_u.assign(px_given_u, px_given_u + nu * nx);
        ch.pyz_given_x.assign(pyz_given_x, pyz_given_x + nx * ny * nz);
        ch.validate();
        dm->subchannels.push_back(std::move(ch));
    });
}

sbc_status sbc_dm_rate_point(const sbc_dm* dm, double* r01, double* r02, double* r1) {
    return guarded([&] {
        if (dm == nullptr)
            secbc::fail(secbc::errc::invalid_argument, "channel handle is null");
        const secbc::RateTriple rt = secbc::dm_rate_point(dm->subchannels);
        store(r01, rt.r01);
        store(r02, rt.r02);
        store(r1, rt.r1);
    });
}

sbc_status sbc_oracle_grid_search(const sbc_states* states, double gamma0, double gamma1,
                                  double power, double resolution, double* p0, double* p1,
                                  double* objective) {
    return guarded([&] {
        require(states);
        const secbc::oracle::GridBest best = secbc::oracle::grid_search_weighted(
            states->list, secbc::Weights{gamma0, gamma1}, power, resolution);
        for (size_t i = 0; i < best.alloc.size(); ++i) {
            if (p0 != nullptr)
                p0[i] = best.alloc[i].p0;
            if (p1 != nullptr)
                p1[i] = best.alloc[i].p1;
        }
        store(objective, best.objective);
    });
}

sbc_status sbc_oracle_brute_plan(const sbc_states* states, double r0, double r1, double power,
                                 double* outage) {
    return guarded([&] {
        require(states);
        store(outage, secbc::oracle::brute_force_plan(states->list,
                                                      secbc::TargetRates{r0, r1}, power));
    });
}

sbc_status sbc_oracle_two_state(int anti, double power, double mu_sq, double* rate) {
    return guarded([&] {
        const auto coupling = anti != 0 ? secbc::oracle::TwoStateCoupling::anti
                                        : secbc::oracle::TwoStateCoupling::identical;
        store(rate, secbc::oracle::two_state_secrecy(coupling, power, mu_sq));
    });
}

} // extern "C"
