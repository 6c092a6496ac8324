#include "solenoid/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "solenoid/errors.hpp"
#include "solenoid/factor.hpp"
#include "solenoid/orbits.hpp"
#include "solenoid/valuation.hpp"

namespace solenoid {

DirichletPartial dirichlet_partial(const SolenoidSystem& sys, double s, long N)
{
    if (sys.s.is_finite())
        throw std::domain_error(
            "dirichlet_partial targets cofinite systems (polynomial orbit growth)");
    if (!(s > 1)) throw std::domain_error("dirichlet_partial requires s > 1");
    if (N < 1) throw std::domain_error("dirichlet_partial requires N >= 1");

    auto O = orbit_counts(sys, N);
    double value = 0;
    for (long n = 1; n <= N; ++n)
        if (O[n] != 0) value += to_double(O[n]) * std::pow((double)n, -s);

    DirichletPartial out;
    out.value = value;
    double A = 0;
    for (long n = std::max(2L, N / 2); n <= N; ++n)
        A = std::max(A, log_fixed_points(sys, n) / std::log((double)n));
    out.exponent = A;
    out.tail_bound = (s > A + 1)
                         ? 2.0 * std::pow((double)N, A + 1 - s) / (s - 1 - A)
                         : INFINITY;
    return out;
}

double dirichlet_reference_3_5(double s)
{
    if (s == 0) throw std::domain_error("dirichlet_reference_3_5: pole at s = 0");
    if (s < 0) throw std::domain_error("dirichlet_reference_3_5 requires s > 0");
    double w = s + 1;
    double p3 = 1.0 - std::pow(3.0, -s);
    double p5 = 1.0 - std::pow(5.0, -s);
    double term1 = 1.0 - std::pow(2.0, -w);
    double term2 = (3.0 / std::pow(2.0, w)) *
                   (1.0 - std::pow(3.0, -w) - std::pow(2.0, -w) +
                    std::pow(6.0, -w)) /
                   p3;
    double term3 = (15.0 / std::pow(4.0, w)) *
                   (1.0 - std::pow(3.0, -w) - std::pow(5.0, -w) +
                    std::pow(15.0, -w)) /
                   (p3 * p5);
    return term1 + term2 + term3;
}

double mertens_slope(const SolenoidSystem& sys, long N)
{
    if (!sys.s.is_finite())
        throw std::domain_error("mertens_slope targets finite-S systems");
    if (N < 1000) throw std::domain_error("mertens_slope requires N >= 10^3");
    auto M = mertens_curve(sys, N);
    return (M[N] - M[N / 10]) / std::log(10.0);
}

namespace {

/// One profinite coordinate of the averaged variable n: exact outcomes
/// v = 0..T-1 plus a collapsed tail v >= T.
struct Coordinate {
    ZZ ell;
    long T = 1;
};

/// An S-prime contributing p^{-v_p(a^n - b^n)}; odd primes switch on when
/// the multiplicative order divides n, the prime 2 switches by parity.
struct LocalFactor {
    ZZ p;
    ZZ order;     // odd p only
    long e = 0;   // v_p at the order (odd), v_2(a - b) for p = 2
    long c = 0;   // p = 2 only: v_2(a^2 - b^2) - 1
};

} // namespace

QQ mertens_density_constant(const SolenoidSystem& sys)
{
    if (!sys.s.is_finite())
        throw std::domain_error("mertens_density_constant targets finite-S systems");
    ZZ a = sys.r.num, b = sys.r.den;
    ZZ ab = abs_z(ZZ(a * b));

    std::vector<LocalFactor> odd_factors;
    bool has2 = false;
    LocalFactor two;
    for (const ZZ& p : sys.s.primes) {
        if (divides(p, ab)) continue;
        if (p == 2) {
            has2 = true;
            two.p = 2;
            two.e = padic_valuation(ZZ(a - b), ZZ(2));
            two.c = padic_valuation(ZZ(a * a - b * b), ZZ(2)) - 1;
        } else {
            LocalFactor f;
            f.p = p;
            f.order = multiplicative_order(a, b, p);
            f.e = (long)valuation_of_power_difference(a, b, p, f.order);
            odd_factors.push_back(f);
        }
    }

    // Coordinates: every prime dividing some order, every odd S'-prime
    // itself, and 2 when it carries a local factor.
    std::set<ZZ> coord_primes;
    for (const LocalFactor& f : odd_factors) {
        coord_primes.insert(f.p);
        for (const auto& [q, e] : factor(f.order)) coord_primes.insert(q);
    }
    if (has2) coord_primes.insert(ZZ(2));

    std::vector<Coordinate> coords;
    for (const ZZ& ell : coord_primes) {
        Coordinate c;
        c.ell = ell;
        c.T = 1;
        for (const LocalFactor& f : odd_factors)
            c.T = std::max(c.T, padic_valuation(f.order, ell));
        coords.push_back(c);
    }

    // Enumerate one outcome per coordinate; outcome == T means the tail.
    QQ total(0);
    std::vector<long> pick(coords.size(), 0);
    while (true) {
        // Activity of each odd factor: order | n given the chosen profile.
        std::vector<int> coupled(coords.size(), 0);
        QQ constant(1);
        bool even_branch = false;
        for (size_t i = 0; i < coords.size(); ++i)
            if (has2 && coords[i].ell == 2) even_branch = pick[i] >= 1;
        for (const LocalFactor& f : odd_factors) {
            bool active = true;
            for (size_t i = 0; i < coords.size(); ++i) {
                long need = padic_valuation(f.order, coords[i].ell);
                if (need > 0 && pick[i] < need) active = false;
            }
            if (active) {
                constant /= QQ(pow_z(f.p, f.e));
                for (size_t i = 0; i < coords.size(); ++i)
                    if (coords[i].ell == f.p) coupled[i] = 1;
            }
        }
        if (has2) {
            if (even_branch) {
                constant /= QQ(pow_z(ZZ(2), two.c));
                for (size_t i = 0; i < coords.size(); ++i)
                    if (coords[i].ell == 2) coupled[i] = 1;
            } else {
                constant /= QQ(pow_z(ZZ(2), two.e));
            }
        }

        QQ weight = constant;
        for (size_t i = 0; i < coords.size(); ++i) {
            const ZZ& ell = coords[i].ell;
            QQ base(ZZ(ell - 1), ell);             // P(v = 0) = 1 - 1/ell
            QQ y(ZZ(1), pow_z(ell, 1 + coupled[i])); // per-level decay
            QQ yk(1);
            long steps = std::min(pick[i], coords[i].T);
            for (long j = 0; j < steps; ++j) yk *= y;
            if (pick[i] < coords[i].T) {
                weight *= base * yk;
            } else {
                QQ tail_rest(QQ(1) - y);
                weight *= base * yk / tail_rest;
            }
        }
        total += weight;

        size_t pos = 0;
        while (pos < coords.size() && pick[pos] == coords[pos].T) pick[pos++] = 0;
        if (pos == coords.size()) break;
        ++pick[pos];
    }
    return total;
}

PolylogFit pi_polylog_fit(const SolenoidSystem& sys, long N)
{
    if (sys.s.is_finite())
        throw std::domain_error("pi_polylog_fit targets cofinite systems");
    if (N < 10000) throw std::domain_error("pi_polylog_fit requires N >= 10^4");

    auto O = orbit_counts(sys, N);
    ZZ pi(0);
    long lo = std::max(3L, N / 100);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long count = 0;
    for (long n = 1; n <= N; ++n) {
        pi += O[n];
        if (n < lo) continue;
        double x = std::log(std::log((double)n));
        double y = std::log(to_double(pi));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    PolylogFit fit;
    double varx = sxx - sx * sx / count;
    if (varx < 1e-12) {
        fit.K_hat = 0;
        fit.C_hat = to_double(pi);
        return fit;
    }
    fit.K_hat = (sxy - sx * sy / count) / varx;
    fit.C_hat = std::exp((sy - fit.K_hat * sx) / count);
    return fit;
}

GrowthConstruction growth_construction(const std::vector<ZZ>& theta)
{
    for (const ZZ& t : theta)
        if (t < 1) throw std::domain_error("growth_construction needs targets >= 1");
    if ((long)theta.size() > 39)
        throw capability_error("growth_construction supports at most 39 stages");

    long K = (long)theta.size() + 1; // targets cover n = 2..K
    GrowthConstruction g;
    g.F_product.assign(K + 1, ZZ(1));
    g.theta_effective.assign(K + 1, ZZ(1));
    g.sandwich_ok.assign(K + 1, true);
    g.sandwich_ok_original.assign(K + 1, true);

    for (long k = 2; k <= K; ++k) {
        SolenoidSystem comp =
            validate_system(chi_with_infinite_set(mersenne_prime_set(k - 1)),
                            ReducedRational(ZZ(2), ZZ(1)), MapMode::automorphism);
        ZZ prefix(1);
        for (long j = 2; j < k; ++j)
            prefix *= pow_z(fixed_points(g.component_systems[j - 2], k),
                            g.multiplicities[j - 2]);
        ZZ base = fixed_points(comp, k);
        ZZ target = theta[k - 2];

        long nk = 0;
        ZZ reach = prefix;
        while (reach < target && base > 1) {
            reach *= base;
            ++nk;
        }
        ZZ effective = target;
        if (reach < target || reach > target * pow_z(ZZ(2), k)) {
            // The stage cannot meet the target: either base == 1 so no
            // number of copies reaches it, or the accumulated prefix
            // already overshoots beyond the 2^k window (the closed-form
            // copy count would be negative).  Amend the target to the
            // reachable value and record the stage.
            effective = reach;
            g.amended_at.push_back(k);
        }
        g.multiplicities.push_back(nk);
        g.component_systems.push_back(comp);
        g.theta_effective[k] = effective;

        for (long n = 1; n <= K; ++n)
            g.F_product[n] *= pow_z(fixed_points(comp, n), nk);
    }

    for (long n = 2; n <= K; ++n) {
        ZZ cap = pow_z(ZZ(2), n);
        const ZZ& F = g.F_product[n];
        g.sandwich_ok[n] =
            F >= g.theta_effective[n] && F <= g.theta_effective[n] * cap;
        g.sandwich_ok_original[n] =
            F >= theta[n - 2] && F <= theta[n - 2] * cap;
    }
    return g;
}

} // namespace solenoid
