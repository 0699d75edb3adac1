/* secbc: secrecy-capacity regions, boundary-achieving power allocations and
 * outage-minimizing power plans for Gaussian and fading broadcast channels
 * with a confidential message.
 *
 * The library is a C++ core behind this C interface. All functions return an
 * sbc_status; outputs are written through pointers. Aggregates (state lists,
 * outage plans, discrete-channel descriptions) are opaque handles created and
 * destroyed here. Handles are immutable after construction and safe to share
 * across threads; sbc_last_error() is thread-local.
 */
#ifndef SECBC_H
#define SECBC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SBC_VERSION_MAJOR 1
#define SBC_VERSION_MINOR 0
#define SBC_VERSION_PATCH 0

/* Version of the linked library, "major.minor.patch". */
const char* sbc_version(void);

typedef enum sbc_status {
    SBC_OK = 0,
    SBC_ERR_INVALID_ARGUMENT = 1, /* malformed input */
    SBC_ERR_INFEASIBLE = 2,       /* budget or rate target cannot be met */
    SBC_ERR_TOO_LARGE = 3,        /* request exceeds hard sizing limits */
    SBC_ERR_INTERNAL = 4
} sbc_status;

const char* sbc_status_name(sbc_status status);

/* Message describing the most recent failure on this thread. */
const char* sbc_last_error(void);

/* ------------------------------------------------------------------ */
/* Effective channel states                                           */

typedef struct sbc_states sbc_states;

/* Parallel real Gaussian subchannels: unit weights, prefactor 1/2. */
sbc_status sbc_states_from_gaussian(const double* mu_sq, const double* nu_sq, size_t count,
                                    sbc_states** out);

/* Explicit fading realizations: per-state power gains and weights, shared
 * noise variances, prefactor 1. Pass weights = NULL for equal weights 1/n. */
sbc_status sbc_states_from_fading(const double* h1_sq, const double* h2_sq, double mu_sq,
                                  double nu_sq, const double* weights, size_t count,
                                  sbc_states** out);

typedef enum sbc_correlation {
    SBC_CORR_INDEPENDENT = 0,
    SBC_CORR_IDENTICAL = 1,
    SBC_CORR_ANTI = 2
} sbc_correlation;

/* Rayleigh fading sampler: |h1|^2, |h2|^2 exponential with means sigma1 and
 * sigma2. Deterministic in (seed, index); equal weights, prefactor 1. */
sbc_status sbc_states_sample_rayleigh(double sigma1, double sigma2, double mu_sq, double nu_sq,
                                      sbc_correlation correlation, size_t count, uint64_t seed,
                                      sbc_states** out);

void sbc_states_free(sbc_states* states);
size_t sbc_states_count(const sbc_states* states);

/* Effective noises, weight and A-membership of one state. Any output pointer
 * may be NULL. */
sbc_status sbc_states_get(const sbc_states* states, size_t index, double* a, double* b,
                          double* weight, int* in_A);

/* ------------------------------------------------------------------ */
/* Rate functionals                                                   */

/* Rates of an explicit allocation (arrays of length count). */
sbc_status sbc_rate_triple(const sbc_states* states, const double* p0, const double* p1,
                           double* r01, double* r02, double* r1);

/* Single Gaussian subchannel, confidential share beta of the budget. */
sbc_status sbc_gaussian_point(double power, double mu_sq, double nu_sq, double prefactor,
                              double beta, double* r0, double* r1);

/* Whether (r0, r1) is achievable on one state at the given power. */
sbc_status sbc_region_contains(const sbc_states* states, size_t index, double power, double r0,
                               double r1, int* contains);

/* Common-message capacity of parallel deterministic links. */
sbc_status sbc_parallel_common_capacity(const double* cap1, const double* cap2, size_t count,
                                        double* min_of_sums, double* sum_of_mins);

/* ------------------------------------------------------------------ */
/* Boundary-achieving power allocation                                */

typedef enum sbc_case { SBC_CASE_1 = 1, SBC_CASE_2 = 2, SBC_CASE_3 = 3 } sbc_case;

/* Maximizes gamma0*min(r01,r02) + gamma1*r1 under the average power budget.
 * p0/p1 are arrays of length count; tag, alpha, lambda, rates optional. */
sbc_status sbc_optimal_allocation(const sbc_states* states, double gamma0, double gamma1,
                                  double power, double* p0, double* p1, sbc_case* tag,
                                  double* alpha, double* lambda, double* r01, double* r02,
                                  double* r1);

/* Confidential-only water-filling; p1 has length count. */
sbc_status sbc_wiretap_allocation(const sbc_states* states, double power, double* p1,
                                  double* capacity);

/* One boundary point per (gamma0[i], gamma1[i]) pair, sorted by common rate. */
sbc_status sbc_boundary_sweep(const sbc_states* states, double power, const double* gamma0,
                              const double* gamma1, size_t grid_count, double* r0, double* r1,
                              sbc_case* tags);

/* Flat confidential-only baseline: budget/Pr(A) on every state in A. */
sbc_status sbc_uniform_baseline_rate(const sbc_states* states, double power, double* rate);

/* ------------------------------------------------------------------ */
/* Outage service                                                     */

/* Smallest powers supporting the targets on one state. Infinity encodes an
 * infeasible state. */
sbc_status sbc_min_power_pair(const sbc_states* states, size_t index, double r0, double r1,
                              double* pmin);
sbc_status sbc_min_power_confidential(const sbc_states* states, size_t index, double r1,
                                      double* pmin);
sbc_status sbc_common_power(const sbc_states* states, size_t index, double r0, double* p);
sbc_status sbc_delta_min_power(const sbc_states* states, size_t index, double r0, double r1,
                               double* delta);

typedef enum sbc_plan_mode {
    SBC_PLAN_JOINT = 0,             /* outage when either target rate fails */
    SBC_PLAN_CONFIDENTIAL = 1,      /* confidential target only */
    SBC_PLAN_CONSTANT_COMMON = 2    /* common rate guaranteed on every state */
} sbc_plan_mode;

typedef struct sbc_plan sbc_plan;

/* Outage-minimizing threshold plan for the given targets and budget.
 * SBC_PLAN_CONSTANT_COMMON fails with SBC_ERR_INFEASIBLE when the budget
 * cannot cover the always-on common layer. */
sbc_status sbc_plan_build(const sbc_states* states, double r0, double r1, sbc_plan_mode mode,
                          double power, sbc_plan** out);
void sbc_plan_free(sbc_plan* plan);

/* Threshold s*, boundary service probability w*, outage probability and
 * expected spent power. Any output pointer may be NULL. */
sbc_status sbc_plan_info(const sbc_plan* plan, double* s_star, double* w_star, double* outage,
                         double* spent);

/* Power the plan spends on one state; uniform_draw in [0,1) resolves the
 * randomized boundary atom. */
sbc_status sbc_plan_power(const sbc_plan* plan, size_t index, double uniform_draw,
                          double* power);

/* Outage when every state is given the same power. */
sbc_status sbc_equal_power_outage(const sbc_states* states, double r0, double r1, double power,
                                  double* outage);

/* ------------------------------------------------------------------ */
/* Discrete memoryless evaluator                                      */

typedef struct sbc_dm sbc_dm;

sbc_status sbc_dm_create(sbc_dm** out);
void sbc_dm_free(sbc_dm* dm);

/* Appends one subchannel with the Markov structure Q -> U -> X -> (Y, Z).
 * Tables are row-major: pq[q], pu_given_q[q*nu+u], px_given_u[u*nx+x],
 * pyz_given_x[x*ny*nz + y*nz + z]. Rows must sum to one within 1e-12. */
sbc_status sbc_dm_add_subchannel(sbc_dm* dm, size_t nq, size_t nu, size_t nx, size_t ny,
                                 size_t nz, const double* pq, const double* pu_given_q,
                                 const double* px_given_u, const double* pyz_given_x);

/* r01 = sum I(Q;Y), r02 = sum I(Q;Z), r1 = sum [I(U;Y|Q) - I(U;Z|Q)];
 * r1 may be negative for poor auxiliary choices. */
sbc_status sbc_dm_rate_point(const sbc_dm* dm, double* r01, double* r02, double* r1);

/* ------------------------------------------------------------------ */
/* Brute-force oracles                                                */

/* Exhaustive grid search over allocations (at most 3 states; refuses grids
 * past 1e8 points with SBC_ERR_TOO_LARGE). */
sbc_status sbc_oracle_grid_search(const sbc_states* states, double gamma0, double gamma1,
                                  double power, double resolution, double* p0, double* p1,
                                  double* objective);

/* Exhaustive served-subset search (at most 12 states). */
sbc_status sbc_oracle_brute_plan(const sbc_states* states, double r0, double r1, double power,
                                 double* outage);

/* Binary-gain coupled pair: secrecy rate under identical or mirrored gains,
 * found by direct one-dimensional search. */
sbc_status sbc_oracle_two_state(int anti, double power, double mu_sq, double* rate);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SECBC_H */
