#pragma once

#include <string>
#include <vector>

#include "solenoid/baer.hpp"
#include "solenoid/matrix.hpp"
#include "solenoid/poly.hpp"

namespace solenoid {

/// Coefficients c_0..c_order of a power series, exact rationals.
struct TruncatedPowerSeries {
    long order = 0;
    std::vector<QQ> coeffs;
};

/// num/den with integer coefficients, coprime over Q, both primitive with
/// positive constant term.  den(0) != 0 always holds for a zeta function.
struct RationalFunctionZ {
    ZPoly num;
    ZPoly den;
};

bool operator==(const RationalFunctionZ& f, const RationalFunctionZ& g);
std::string to_string(const RationalFunctionZ& f);

/// Product of two truncated series, kept to the shorter order.
std::vector<QQ> series_mul(const std::vector<QQ>& f, const std::vector<QQ>& g,
                           long order);

/// Reciprocal series of f (f[0] != 0) to the given order.
std::vector<QQ> series_recip(const std::vector<QQ>& f, long order);

/// Expansion of num/den to the given order, exact.
std::vector<QQ> rational_series(const RationalFunctionZ& f, long order);

/// exp(sum_{n<=N} F[n]/n z^n) via the recurrence
/// c_k = (1/k) sum_{j=1..k} F[j] c_{k-j}, exact.  F is 1-based conceptually:
/// F[0] in the input vector is the count at n = 1.
TruncatedPowerSeries zeta_series(const std::vector<ZZ>& F);

/// Formal logarithm of a series with constant term 1; returns l_1..l_order
/// with l_0 = 0, satisfying f' = f * log(f)'.
std::vector<QQ> series_log(const TruncatedPowerSeries& f);

/// Closed-form zeta of x -> ax on the full solenoid: (1-z)/(1-az) for
/// a >= 2 and (1+z)/(1-|a|z) for a <= -2.
RationalFunctionZ rational_zeta_integer_map(const ZZ& a);

/// True when det A = +-1 and no eigenvalue is a root of unity (checked by
/// gcd of the characteristic polynomial with every cyclotomic of degree <= d).
bool toral_ergodic(const IntMat& A);

/// |det(A^n - I)|, exact; requires an ergodic toral automorphism.
ZZ toral_fixed_points(const IntMat& A, long n);

/// Reconstructs the zeta function of an ergodic toral automorphism from its
/// fixed-point counts: fit a linear recurrence of order <= 2^{d+1} on the
/// counts, rebuild num/den from the zeta series, reduce, and re-expand to
/// verify every coefficient up to order N.  Requires N >= 4 * 2^d.
RationalFunctionZ toral_zeta(const IntMat& A, long N);

struct RealizabilityVerdict {
    bool ok = true;
    long fail_at = 0;
    ZZ witness;
};

/// Checks 0 <= sum_{d|n} mu(n/d) a_d = 0 (mod n) for every n; on failure
/// reports the first bad index and the offending divisor sum.
RealizabilityVerdict realizable_as_map(const std::vector<ZZ>& a);

/// True iff F[m] divides F[n] whenever m | n within the list.
bool is_divisibility_sequence(const std::vector<ZZ>& F);

struct EnglandSmythVerdict {
    bool ok = true;
    long k = 0;
    long l = 0;
    std::string reason;
};

/// Conditions for a_1..a_K to arise from a solenoid with ratio n/m:
/// a_k | |n^k - m^k| for every k <= K, and gcd(a_k, |n^l - m^l| / a_l) = 1
/// for every pair k != l.  Reports the first violated pair.
EnglandSmythVerdict england_smyth_check(const std::vector<ZZ>& a, const ZZ& n,
                                        const ZZ& m, long K);

/// The primes p <= prime_bound dividing some cofactor |n^l - m^l| / a_l.
/// Regenerates the sequence from the recovered set and insists on an exact
/// round trip; a mismatch means prime_bound was too small.
PrimeSet s_set_recover(const std::vector<ZZ>& a, const ZZ& n, const ZZ& m,
                       const ZZ& prime_bound, long K);

/// All ratios r' = a'/b' built from primes of S with max(|a'|, b') at most
/// max(|a|, b|) + bound whose fixed-point counts match sys for n <= N.
/// Finite-S automorphism systems only.  Sorted by value.
std::vector<ReducedRational> zeta_class_enumerate(const SolenoidSystem& sys,
                                                  long N, long bound);

struct BoundaryPoint {
    double radius = 0;
    double angle = 0;
    double re = 0;
    double im = 0;
    double magnitude = 0;
};

/// Partial sums sum_{n<=N} F(n)/n z^n at z = radius e^{2 pi i angle}, one
/// row per (radius, angle) pair.  Exploratory probe; requires every
/// radius * max(|a|, b) <= 1 so the terms stay bounded.
std::vector<BoundaryPoint> boundary_profile(const SolenoidSystem& sys,
                                            const std::vector<double>& radii,
                                            const std::vector<double>& angles,
                                            long N);

} // namespace solenoid
