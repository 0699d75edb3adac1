#include "power_alloc.hpp"

#include <algorithm>
#include <cmath>

namespace secbc {

namespace {

constexpr double kLn2 = 0.69314718055994530941723212145818;
constexpr double kLambdaFloor = 1e-300;
constexpr double kLambdaCeil = 1e307;

void check_weights(const Weights& w) {
    if (!(w.gamma0 >= 0.0) || !(w.gamma1 >= 0.0) || (w.gamma0 == 0.0 && w.gamma1 == 0.0))
        fail(errc::invalid_argument, "weights must be nonnegative and not both zero");
}

void check_tag(const CaseTag& tag) {
    if (tag.which == AllocCase::three && !(tag.alpha >= 0.0 && tag.alpha <= 1.0))
        fail(errc::invalid_argument, "case-3 tilt must lie in [0, 1]");
}

// Tilt equivalent of each case: case 1 weighs the receiver-1 bound only,
// case 2 the receiver-2 bound only.
double tag_alpha(const CaseTag& tag) {
    switch (tag.which) {
        case AllocCase::one: return 1.0;
        case AllocCase::two: return 0.0;
        default: return tag.alpha;
    }
}

// Largest root of alpha/(a + x) + (1-alpha)/(b + x) = 1/t, the zero of the
// tilted common-layer utility. Expanding gives
//   x^2 + (a + b - t) x + (ab - t d) = 0,  d = alpha b + (1-alpha) a,
// whose discriminant (b - a - t)^2 + 4 alpha t (b - a) is nonnegative for
// any sign of b - a. The product form avoids cancellation when the sum of
// the roots is negative.
double tilted_common_root(double a, double b, double t, double alpha) {
    if (t <= 0.0)
        return -std::min(a, b);
    // At the tilt endpoints the utility has a single pole and a single root;
    // the quadratic below would add a spurious root behind the vanished pole.
    if (alpha == 1.0)
        return t - a;
    if (alpha == 0.0)
        return t - b;
    const double abar = 1.0 - alpha;
    if (std::isinf(a) && std::isinf(b))
        return -kInf;
    if (std::isinf(a))
        return abar * t - b;
    if (std::isinf(b))
        return alpha * t - a;
    const double u = b - a;
    const double disc = (u - t) * (u - t) + 4.0 * alpha * t * u;
    const double root = std::sqrt(std::max(0.0, disc));
    const double sum = a + b - t;
    if (sum > 0.0)
        return 2.0 * (t * (alpha * b + abar * a) - a * b) / (sum + root);
    return 0.5 * (root - sum);
}

// Zero of the confidential-layer utility c gamma1 (1/(a+x) - 1/(b+x))/ln2 - lambda,
// i.e. the unconstrained confidential water level. s = c*gamma1/(lambda ln 2).
double confidential_root(double a, double b, double s) {
    if (s <= 0.0)
        return -a;
    if (std::isinf(b))
        return s - a;
    const double u = b - a;
    return 0.5 * std::sqrt(u * (u + 4.0 * s)) - 0.5 * (a + b);
}

// Crossing point of the common and confidential utilities on A.
double utility_crossing(double a, double b, double alpha, double gamma0, double gamma1) {
    if (gamma0 <= 0.0)
        return kInf;
    const double ratio = gamma1 / gamma0;
    if (std::isinf(b)) {
        // The two utilities are proportional; they never cross at finite x.
        if (ratio > alpha)
            return kInf;
        if (ratio < alpha)
            return -kInf;
        return -a;
    }
    return ratio * (b - a) - (alpha * b + (1.0 - alpha) * a);
}

} // namespace

CaseRoots case_roots(const EffectiveState& st, const Weights& w, double lambda,
                     const CaseTag& tag) {
    if (!st.in_A)
        fail(errc::invalid_argument, "case roots are defined on A only");
    if (!(lambda > 0.0))
        fail(errc::invalid_argument, "water level must be positive");
    check_weights(w);
    check_tag(tag);

    const double scale = st.prefactor / (lambda * kLn2);
    const double t = w.gamma0 * scale;
    const double s = w.gamma1 * scale;
    const double alpha = tag_alpha(tag);

    CaseRoots roots;
    switch (tag.which) {
        case AllocCase::one: roots.x0 = t - st.a; break;
        case AllocCase::two: roots.x0 = t - st.b; break;
        case AllocCase::three: roots.x0 = tilted_common_root(st.a, st.b, t, alpha); break;
    }
    roots.x1 = confidential_root(st.a, st.b, s);
    roots.xr = utility_crossing(st.a, st.b, alpha, w.gamma0, w.gamma1);
    return roots;
}

PowerPair per_state_alloc(const EffectiveState& st, const Weights& w, double lambda,
                          const CaseTag& tag) {
    if (!(lambda > 0.0))
        fail(errc::invalid_argument, "water level must be positive");
    check_weights(w);
    check_tag(tag);

    PowerPair pp;
    if (st.in_A) {
        const CaseRoots roots = case_roots(st, w, lambda, tag);
        if (roots.xr > 0.0) {
            pp.p0 = std::max(0.0, roots.x0 - roots.xr);
            pp.p1 = std::max(0.0, std::min(roots.x1, roots.xr));
        } else {
            pp.p0 = std::max(0.0, roots.x0);
            pp.p1 = 0.0;
        }
    } else {
        const double t = w.gamma0 * st.prefactor / (lambda * kLn2);
        double x0;
        switch (tag.which) {
            case AllocCase::one: x0 = t - st.a; break;
            case AllocCase::two: x0 = t - st.b; break;
            default: x0 = tilted_common_root(st.a, st.b, t, tag.alpha); break;
        }
        pp.p0 = std::max(0.0, x0);
        pp.p1 = 0.0;
    }
    return pp;
}

LambdaSolution solve_lambda(std::span<const EffectiveState> states, const Weights& w,
                            double budget, const CaseTag& tag, const SolverKnobs& knobs) {
    check_weights(w);
    check_tag(tag);
    if (!(budget >= 0.0))
        fail(errc::invalid_argument, "power budget must be nonnegative");

    LambdaSolution sol;
    sol.alloc.assign(states.size(), PowerPair{});
    if (budget == 0.0 || states.empty())
        return sol;

    PowerAllocation scratch(states.size());
    auto spend = [&](double lambda) {
        double total = 0.0;
        for (size_t i = 0; i < states.size(); ++i) {
            scratch[i] = per_state_alloc(states[i], w, lambda, tag);
            total += states[i].weight * (scratch[i].p0 + scratch[i].p1);
        }
        return total;
    };

    const double tol = knobs.power_rel_tol * budget;

    // Bracket the water level: total power is nonincreasing in lambda.
    double hi = 1.0;
    double spent_hi = spend(hi);
    while (spent_hi > budget && hi < kLambdaCeil) {
        hi *= 2.0;
        spent_hi = spend(hi);
    }
    double lo = hi;
    double spent_lo = spent_hi;
    while (spent_lo < budget && lo > kLambdaFloor) {
        lo *= 0.5;
        spent_lo = spend(lo);
    }
    if (spent_lo < budget) {
        // Budget cannot be bound; spend everything that is useful.
        sol.lambda = lo;
        sol.alloc = scratch;
        return sol;
    }

    double best_lambda = hi;
    double best_spent = spend(hi);
    if (best_spent > budget)
        fail(errc::internal, "water level could not be bracketed from above");
    sol.alloc = scratch;
    for (int i = 0; i < knobs.max_bisect_iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double spent = spend(mid);
        if (spent <= budget) {
            hi = mid;
            if (spent > best_spent) {
                best_spent = spent;
                best_lambda = mid;
                sol.alloc = scratch;
            }
        } else {
            lo = mid;
        }
        if (budget - best_spent <= tol)
            break;
    }
    sol.lambda = best_lambda;
    return sol;
}

AlphaSolution solve_alpha(std::span<const EffectiveState> states, const Weights& w,
                          double budget, const SolverKnobs& knobs) {
    check_weights(w);

    struct Probe {
        double alpha;
        LambdaSolution sol;
        double gap;        // r01 - r02
        double objective;
        bool balanced;
    };

    auto probe = [&](double alpha) {
        Probe p;
        p.alpha = alpha;
        p.sol = solve_lambda(states, w, budget, CaseTag{AllocCase::three, alpha}, knobs);
        const RateTriple rt = weighted_rate_triple(states, p.sol.alloc);
        p.gap = rt.r01 - rt.r02;
        p.objective = weighted_objective(w, rt);
        p.balanced = std::fabs(p.gap) <= knobs.rate_rel_tol * std::max(rt.r01, rt.r02);
        return p;
    };

    constexpr int kScanPoints = 33;
    std::vector<Probe> scan;
    scan.reserve(kScanPoints);
    for (int k = 0; k < kScanPoints; ++k)
        scan.push_back(probe(static_cast<double>(k) / (kScanPoints - 1)));

    auto as_solution = [](const Probe& p) {
        return AlphaSolution{p.alpha, p.sol.lambda, p.sol.alloc};
    };

    bool found = false;
    Probe best{};
    auto consider = [&](const Probe& p) {
        if (!found || p.objective > best.objective) {
            best = p;
            found = true;
        }
    };

    for (const Probe& p : scan)
        if (p.balanced)
            consider(p);

    for (int k = 0; k + 1 < kScanPoints; ++k) {
        if (scan[k].balanced || scan[k + 1].balanced)
            continue;
        if ((scan[k].gap > 0.0) == (scan[k + 1].gap > 0.0))
            continue;
        Probe lo = scan[k];
        Probe hi = scan[k + 1];
        Probe mid = lo;
        for (int i = 0; i < 80; ++i) {
            mid = probe(0.5 * (lo.alpha + hi.alpha));
            if (mid.balanced)
                break;
            if ((mid.gap > 0.0) == (lo.gap > 0.0))
                lo = mid;
            else
                hi = mid;
        }
        if (mid.balanced)
            consider(mid);
    }

    if (!found)
        fail(errc::infeasible, "case 3: r01 - r02 does not change sign on [0, 1]");
    return as_solution(best);
}

AllocationResult optimal_allocation(std::span<const EffectiveState> states, const Weights& w,
                                    double budget, const SolverKnobs& knobs) {
    check_weights(w);
    if (!(budget >= 0.0))
        fail(errc::invalid_argument, "power budget must be nonnegative");

    AllocationResult res;
    if (w.gamma0 == 0.0) {
        // Pure confidential service shares the wiretap path.
        LambdaSolution sol = solve_lambda(states, w, budget, CaseTag{AllocCase::one, 1.0}, knobs);
        res.alloc = std::move(sol.alloc);
        res.tag = CaseTag{AllocCase::one, 1.0};
        res.lambda = sol.lambda;
        res.rates = weighted_rate_triple(states, res.alloc);
        return res;
    }

    {
        LambdaSolution sol = solve_lambda(states, w, budget, CaseTag{AllocCase::one, 1.0}, knobs);
        const RateTriple rt = weighted_rate_triple(states, sol.alloc);
        if (rt.r01 < rt.r02) {
            res.alloc = std::move(sol.alloc);
            res.tag = CaseTag{AllocCase::one, 1.0};
            res.lambda = sol.lambda;
            res.rates = rt;
            return res;
        }
    }
    {
        LambdaSolution sol = solve_lambda(states, w, budget, CaseTag{AllocCase::two, 0.0}, knobs);
        const RateTriple rt = weighted_rate_triple(states, sol.alloc);
        if (rt.r01 > rt.r02) {
            res.alloc = std::move(sol.alloc);
            res.tag = CaseTag{AllocCase::two, 0.0};
            res.lambda = sol.lambda;
            res.rates = rt;
            return res;
        }
    }
    AlphaSolution sol = solve_alpha(states, w, budget, knobs);
    res.alloc = std::move(sol.alloc);
    res.tag = CaseTag{AllocCase::three, sol.alpha};
    res.lambda = sol.lambda;
    res.rates = weighted_rate_triple(states, res.alloc);
    return res;
}

WiretapResult wiretap_allocation(std::span<const EffectiveState> states, double budget,
                                 const SolverKnobs& knobs) {
    LambdaSolution sol =
        solve_lambda(states, Weights{0.0, 1.0}, budget, CaseTag{AllocCase::one, 1.0}, knobs);
    WiretapResult res;
    res.lambda = sol.lambda;
    res.capacity = weighted_rate_triple(states, sol.alloc).r1;
    res.alloc = std::move(sol.alloc);
    return res;
}

std::vector<SweepPoint> boundary_sweep(std::span<const EffectiveState> states, double budget,
                                       std::span<const Weights> weight_grid,
                                       const SolverKnobs& knobs) {
    if (weight_grid.empty())
        fail(errc::invalid_argument, "weight grid must not be empty");
    std::vector<SweepPoint> points;
    points.reserve(weight_grid.size());
    for (const Weights& w : weight_grid) {
        AllocationResult res = optimal_allocation(states, w, budget, knobs);
        SweepPoint pt;
        pt.weights = w;
        pt.rates = res.rates;
        pt.point = RatePoint{res.rates.common(), res.rates.r1};
        pt.alloc = std::move(res.alloc);
        pt.tag = res.tag;
        points.push_back(std::move(pt));
    }
    std::sort(points.begin(), points.end(),
              [](const SweepPoint& x, const SweepPoint& y) { return x.point.r0 < y.point.r0; });
    return points;
}

} // namespace secbc
