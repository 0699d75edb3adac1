#ifndef SECBC_POWER_ALLOC_HPP
#define SECBC_POWER_ALLOC_HPP

#include <span>
#include <vector>

#include "channel.hpp"
#include "rate_region.hpp"

namespace secbc {

// Boundary-tracing weights for the objective gamma0 * min(r01, r02) + gamma1 * r1.
struct Weights {
    double gamma0 = 1.0;
    double gamma1 = 1.0;
};

enum class AllocCase { one = 1, two = 2, three = 3 };

// Which of the three stationary families produced an allocation. Case three
// carries the tilt alpha mixing the two common-rate bounds.
struct CaseTag {
    AllocCase which = AllocCase::one;
    double alpha = 1.0;
};

struct SolverKnobs {
    double power_rel_tol = 1e-12;  // budget residual, relative to the budget
    double rate_rel_tol = 1e-10;   // case-3 residual |r01 - r02|, relative
    int max_bisect_iters = 200;
};

// Roots of the per-state marginal utilities on A, in effective-noise form.
// With t = c*gamma0/(lambda ln 2):
//   x0  where the common-layer utility crosses zero,
//   x1  where the confidential-layer utility crosses zero,
//   xr  where the two utilities cross each other (+inf when gamma0 = 0).
struct CaseRoots {
    double x0 = 0.0;
    double x1 = 0.0;
    double xr = 0.0;
};

CaseRoots case_roots(const EffectiveState& st, const Weights& w, double lambda,
                     const CaseTag& tag);

// Closed-form maximizer of the per-state Lagrangian at water level lambda.
PowerPair per_state_alloc(const EffectiveState& st, const Weights& w, double lambda,
                          const CaseTag& tag);

struct LambdaSolution {
    double lambda = kInf;
    PowerAllocation alloc;
};

// Bisects the water level until the weighted total power meets the budget
// (total power is continuous and nonincreasing in lambda). When the budget
// cannot be bound (nothing useful to spend on), the largest useful
// allocation is returned with the budget left slack.
LambdaSolution solve_lambda(std::span<const EffectiveState> states, const Weights& w,
                            double budget, const CaseTag& tag,
                            const SolverKnobs& knobs = {});

struct AlphaSolution {
    double alpha = 0.0;
    double lambda = kInf;
    PowerAllocation alloc;
};

// Case 3: finds the tilt alpha in [0, 1] equalizing the two common-rate
// bounds. A coarse scan brackets a sign change of r01 - r02, then bisection
// refines it; with several brackets the one with the best objective wins.
AlphaSolution solve_alpha(std::span<const EffectiveState> states, const Weights& w,
                          double budget, const SolverKnobs& knobs = {});

struct AllocationResult {
    PowerAllocation alloc;
    CaseTag tag;
    double lambda = kInf;
    RateTriple rates;
};

// The three-step search over the stationary families: accept the first
// family whose defining inequality holds at its own optimum.
AllocationResult optimal_allocation(std::span<const EffectiveState> states, const Weights& w,
                                    double budget, const SolverKnobs& knobs = {});

struct WiretapResult {
    PowerAllocation alloc;
    double lambda = kInf;
    double capacity = 0.0;
};

// Confidential-only service: water-fills the secrecy rate over A.
WiretapResult wiretap_allocation(std::span<const EffectiveState> states, double budget,
                                 const SolverKnobs& knobs = {});

struct SweepPoint {
    Weights weights;
    RatePoint point;
    RateTriple rates;
    PowerAllocation alloc;
    CaseTag tag;
};

// One boundary point per weight pair, sorted by the common rate.
std::vector<SweepPoint> boundary_sweep(std::span<const EffectiveState> states, double budget,
                                       std::span<const Weights> weight_grid,
                                       const SolverKnobs& knobs = {});

inline double weighted_objective(const Weights& w, const RateTriple& rt) {
    return w.gamma0 * rt.common() + w.gamma1 * rt.r1;
}

} // namespace secbc

#endif
