#pragma once

#include <vector>

#include "solenoid/baer.hpp"

namespace solenoid {

/// Tabulated invariants for n = 1..upto; index 0 of each list is unused.
struct OrbitProfile {
    long upto = 0;
    std::vector<ZZ> F;
    std::vector<ZZ> O;
    std::vector<double> M;
    std::vector<ZZ> pi;
};

/// Fixed-point count of the n-th iterate.  With r = a/b and S the infinite
/// height set: finite S gives |a^n - b^n| with every p-part for p in S
/// removed; cofinite S excluding E gives the product of the p-parts of
/// a^n - b^n over p in E.  Always a positive integer.
ZZ fixed_points(const SolenoidSystem& sys, long n);

/// log of fixed_points without forming big integers; absolute error <= 1e-9.
double log_fixed_points(const SolenoidSystem& sys, long n);

/// O[n] = (1/n) sum_{d|n} mu(n/d) F(d) for n = 1..N, exact.  Raises
/// invariant_violation if any value fails to be a nonnegative integer.
std::vector<ZZ> orbit_counts(const SolenoidSystem& sys, long N);

/// M(N) = sum_{n<=N} O(n) e^{-hn}, evaluated in log space.
double mertens_sum(const SolenoidSystem& sys, long N);

/// The whole curve M(1..N), one pass; index 0 unused.
std::vector<double> mertens_curve(const SolenoidSystem& sys, long N);

/// pi(N) = sum_{n<=N} O(n), exact.
ZZ pi_sum(const SolenoidSystem& sys, long N);

struct GrowthEstimate {
    double at_N = 0;
    double sup_window = 0;
    double inf_window = 0;
};

/// (1/N) log F(N) plus the extremes of (1/n) log F(n) over n in [N/2, N].
GrowthEstimate growth_estimate(const SolenoidSystem& sys, long N);

/// S_k = {2} plus the primes dividing 2^n - 1 for some n <= k; k <= 40.
PrimeSet mersenne_prime_set(long k);

/// Entropy is log max(|a|, |b|) in both map modes; entropy_argument exposes
/// the exact integer max(|a|, |b|) behind the logarithm.
ZZ entropy_argument(const SolenoidSystem& sys);
double entropy(const SolenoidSystem& sys);

/// Bulk table for the CLI: exact F and O, log-space M, exact pi.
OrbitProfile orbit_profile(const SolenoidSystem& sys, long N);

} // namespace solenoid
