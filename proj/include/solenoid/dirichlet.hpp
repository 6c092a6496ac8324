#pragma once

#include <vector>

#include "solenoid/baer.hpp"
#include "solenoid/numbers.hpp"

namespace solenoid {

struct DirichletPartial {
    double value = 0;      // sum_{n<=N} O(n) / n^s in fixed order
    double tail_bound = 0; // 2 N^{A+1-s} / (s-1-A), infinite if s <= A+1
    double exponent = 0;   // fitted polynomial exponent A of F(n) <= n^A
};

/// Partial orbit Dirichlet series for a cofinite-S system at real s > 1.
DirichletPartial dirichlet_partial(const SolenoidSystem& sys, double s, long N);

/// Closed-form orbit Dirichlet series of x -> 2x on the ring of rationals
/// with no 3s or 5s in the denominator, evaluated termwise as printed.
double dirichlet_reference_3_5(double s);

/// Differenced Mertens sums (M(N) - M(N/10)) / log 10, the slope estimate
/// for the leading k log N term.  Finite-S systems, N >= 10^3.
double mertens_slope(const SolenoidSystem& sys, long N);

/// Exact value the Mertens slope converges to: the expected value of the
/// correction factor prod p^{-v_p(a^n - b^n)} over the S-primes not
/// dividing ab, with n averaged over the profinite integers.
QQ mertens_density_constant(const SolenoidSystem& sys);

struct PolylogFit {
    double K_hat = 0;
    double C_hat = 0;
};

/// Least-squares fit of log pi(n) against log log n over [N/100, N];
/// K_hat estimates the polylog exponent of orbit totals.
PolylogFit pi_polylog_fit(const SolenoidSystem& sys, long N);

/// Staged product construction: index 0 of the per-n arrays is unused, and
/// stage arrays (multiplicities, components) start at stage 2.  Targets a
/// stage could not meet (unreachable from below, or already overshot
/// beyond the 2^k window by the accumulated prefix) are replaced by the
/// reachable value; the amendment is reported, and sandwich flags are
/// kept against both target lists.
struct GrowthConstruction {
    std::vector<long> multiplicities;            // n_k for k = 2..K
    std::vector<SolenoidSystem> component_systems;
    std::vector<ZZ> F_product;                   // indexed by n, size K + 1
    std::vector<ZZ> theta_effective;             // indexed by n, size K + 1
    std::vector<bool> sandwich_ok;               // vs theta_effective
    std::vector<bool> sandwich_ok_original;      // vs the input targets
    std::vector<long> amended_at;                // stages with lowered targets
};

GrowthConstruction growth_construction(const std::vector<ZZ>& theta);

} // namespace solenoid
