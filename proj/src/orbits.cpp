#include "solenoid/orbits.hpp"

#include <cmath>
#include <stdexcept>

#include "solenoid/errors.hpp"
#include "solenoid/factor.hpp"
#include "solenoid/valuation.hpp"

namespace solenoid {

namespace {

// Per-prime data for evaluating v_p(a^n - b^n) in O(log n) time.
struct PrimeData {
    ZZ p;
    double logp;
    long m;      // order of a/b mod p (odd p)
    long e;      // v_p(a^m - b^m) (odd p)
    long e_odd;  // p = 2: v_2(a - b)
    long c_even; // p = 2: v_2(a-b) + v_2(a+b) - 1
};

struct SystemProfile {
    ZZ a, b;
    ZZ big, small_;
    int sign_a;
    bool finite_s;
    std::vector<PrimeData> ps; // listed primes not dividing a*b
    double h;

    explicit SystemProfile(const SolenoidSystem& sys)
        : a(sys.r.num), b(sys.r.den), finite_s(sys.s.is_finite())
    {
        big = std::max(abs_z(a), b);
        small_ = std::min(abs_z(a), b);
        sign_a = sgn(a);
        h = std::log(to_double(big));
        for (auto& p : sys.s.primes) {
            if (divides(p, a) || divides(p, b)) continue; // |a^n - b^n|_p = 1
            PrimeData d;
            d.p = p;
            d.logp = std::log(to_double(p));
            if (p == 2) {
                d.m = d.e = 0;
                d.e_odd = padic_valuation(ZZ(a - b), p);
                d.c_even = d.e_odd + padic_valuation(ZZ(a + b), p) - 1;
            } else {
                d.m = multiplicative_order(a, b, p);
                d.e = valuation_of_power_difference(a, b, p, ZZ(d.m));
                d.e_odd = d.c_even = 0;
            }
            ps.push_back(d);
        }
    }

    long val(const PrimeData& d, long n) const
    {
        if (d.p == 2) {
            if (n % 2) return d.e_odd;
            long v2n = 0;
            while (n % 2 == 0) { n /= 2; ++v2n; }
            return d.c_even + v2n;
        }
        if (n % d.m != 0) return 0;
        long q = n / d.m, extra = 0;
        ZZ pl = d.p;
        while (q % pl == 0) { pl *= d.p; ++extra; }
        return d.e + extra;
    }

    ZZ exact_fixed(long n) const
    {
        if (finite_s) {
            ZZ diff = abs_z(pow_z(a, n) - pow_z(b, n));
            for (auto& d : ps) {
                long v = val(d, n);
                if (v) diff = divexact(diff, pow_z(d.p, v));
            }
            return diff;
        }
        ZZ out = 1;
        for (auto& d : ps) {
            long v = val(d, n);
            if (v) out *= pow_z(d.p, v);
        }
        return out;
    }

    double log_fixed(long n) const
    {
        double listed = 0;
        for (auto& d : ps) listed += val(d, n) * d.logp;
        if (!finite_s) return listed;
        // log|a^n - b^n| = n log big + log|1 - s (small/big)^n|, s = sgn(a)^n
        double ratio_term = 0;
        double q = std::exp(n * (std::log(to_double(small_)) - std::log(to_double(big))));
        double s = (n % 2 == 0) ? 1.0 : sign_a;
        ratio_term = std::log(std::fabs(1.0 - s * q));
        return n * h + ratio_term - listed;
    }
};

void require_positive(long n, const char* who)
{
    if (n < 1) throw std::domain_error(std::string(who) + ": n must be >= 1");
}

} // namespace

ZZ fixed_points(const SolenoidSystem& sys, long n)
{
    require_positive(n, "fixed_points");
    return SystemProfile(sys).exact_fixed(n);
}

double log_fixed_points(const SolenoidSystem& sys, long n)
{
    require_positive(n, "log_fixed_points");
    return SystemProfile(sys).log_fixed(n);
}

std::vector<ZZ> orbit_counts(const SolenoidSystem& sys, long N)
{
    require_positive(N, "orbit_counts");
    SystemProfile prof(sys);
    std::vector<ZZ> F(N + 1), S(N + 1), O(N + 1);
    for (long n = 1; n <= N; ++n) F[n] = prof.exact_fixed(n);
    auto mu = mobius_sieve(N);
    for (long d = 1; d <= N; ++d)
        for (long n = d; n <= N; n += d) {
            int m = mu[n / d];
            if (m == 1) S[n] += F[d];
            else if (m == -1) S[n] -= F[d];
        }
    for (long n = 1; n <= N; ++n) {
        if (S[n] < 0 || !divides(ZZ(n), S[n]))
            throw invariant_violation("orbit_counts: O(" + std::to_string(n) +
                                      ") is not a nonnegative integer");
        O[n] = divexact(S[n], ZZ(n));
    }
    return O;
}

std::vector<double> mertens_curve(const SolenoidSystem& sys, long N)
{
    require_positive(N, "mertens_curve");
    SystemProfile prof(sys);
    std::vector<double> logF(N + 1);
    for (long n = 1; n <= N; ++n) logF[n] = prof.log_fixed(n);
    auto mu = mobius_sieve(N);
    // term[n] = sum_{d|n} mu(n/d) exp(log F(d) - h n); M accumulates term/n
    std::vector<double> term(N + 1, 0.0);
    for (long d = 1; d <= N; ++d) {
        double lfd = logF[d];
        for (long n = d; n <= N; n += d) {
            int m = mu[n / d];
            if (m) term[n] += m * std::exp(lfd - prof.h * n);
        }
    }
    std::vector<double> M(N + 1, 0.0);
    for (long n = 1; n <= N; ++n) M[n] = M[n - 1] + term[n] / n;
    return M;
}

double mertens_sum(const SolenoidSystem& sys, long N)
{
    return mertens_curve(sys, N)[N];
}

ZZ pi_sum(const SolenoidSystem& sys, long N)
{
    require_positive(N, "pi_sum");
    auto O = orbit_counts(sys, N);
    ZZ s = 0;
    for (long n = 1; n <= N; ++n) s += O[n];
    return s;
}

GrowthEstimate growth_estimate(const SolenoidSystem& sys, long N)
{
    if (N < 10) throw std::domain_error("growth_estimate: N must be >= 10");
    SystemProfile prof(sys);
    GrowthEstimate g;
    g.at_N = prof.log_fixed(N) / N;
    g.sup_window = -1e300;
    g.inf_window = 1e300;
    for (long n = N / 2; n <= N; ++n) {
        double v = prof.log_fixed(n) / n;
        g.sup_window = std::max(g.sup_window, v);
        g.inf_window = std::min(g.inf_window, v);
    }
    return g;
}

PrimeSet mersenne_prime_set(long k)
{
    if (k < 1) throw std::domain_error("mersenne_prime_set: k must be >= 1");
    if (k > 40) throw capability_error("mersenne_prime_set: k capped at 40");
    std::vector<ZZ> ps{2};
    for (long n = 1; n <= k; ++n)
        for (auto& [p, e] : factor(pow_z(ZZ(2), n) - 1)) ps.push_back(p);
    return PrimeSet::finite(std::move(ps));
}

ZZ entropy_argument(const SolenoidSystem& sys)
{
    return std::max(abs_z(sys.r.num), sys.r.den);
}

double entropy(const SolenoidSystem& sys)
{
    return std::log(to_double(entropy_argument(sys)));
}

OrbitProfile orbit_profile(const SolenoidSystem& sys, long N)
{
    require_positive(N, "orbit_profile");
    OrbitProfile prof;
    prof.upto = N;
    SystemProfile sp(sys);
    prof.F.resize(N + 1);
    for (long n = 1; n <= N; ++n) prof.F[n] = sp.exact_fixed(n);
    prof.O = orbit_counts(sys, N);
    prof.M = mertens_curve(sys, N);
    prof.pi.resize(N + 1);
    prof.pi[0] = 0;
    for (long n = 1; n <= N; ++n) prof.pi[n] = prof.pi[n - 1] + prof.O[n];
    return prof;
}

} // namespace solenoid
