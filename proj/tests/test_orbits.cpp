#include <doctest.h>

#include <cmath>
#include <set>

#include "solenoid/errors.hpp"
#include "solenoid/factor.hpp"
#include "solenoid/orbits.hpp"
#include "solenoid/valuation.hpp"

using namespace solenoid;

namespace {

SolenoidSystem finite_sys(std::vector<long> s, const std::string& r,
                          MapMode mode = MapMode::automorphism)
{
    std::vector<ZZ> ps(s.begin(), s.end());
    return validate_system(chi_with_infinite_set(PrimeSet::finite(ps)), parse_ratio(r), mode);
}

SolenoidSystem cofinite_sys(std::vector<long> excluded, const std::string& r,
                            MapMode mode = MapMode::automorphism)
{
    std::vector<ZZ> ps(excluded.begin(), excluded.end());
    return validate_system(chi_with_infinite_set(PrimeSet::cofinite(ps)), parse_ratio(r), mode);
}

std::vector<ZZ> f_row(const SolenoidSystem& sys, long N)
{
    std::vector<ZZ> out;
    for (long n = 1; n <= N; ++n) out.push_back(fixed_points(sys, n));
    return out;
}

std::vector<ZZ> zz_row(std::vector<long> v)
{
    return std::vector<ZZ>(v.begin(), v.end());
}

} // namespace

TEST_SUITE("orbit-counts") {

TEST_CASE("fixed point rows for the doubling maps")
{
    CHECK_EQ(f_row(finite_sys({2}, "2"), 5), zz_row({1, 3, 7, 15, 31}));
    CHECK_EQ(f_row(finite_sys({2, 3}, "2"), 5), zz_row({1, 1, 7, 5, 31}));
    CHECK_EQ(f_row(finite_sys({2, 3, 7}, "2"), 5), zz_row({1, 1, 1, 5, 31}));
    CHECK_EQ(f_row(finite_sys({2, 3, 5, 7}, "2"), 5), zz_row({1, 1, 1, 1, 31}));
    CHECK_EQ(fixed_points(cofinite_sys({3}, "2"), 2), ZZ(3));
    CHECK_THROWS_AS(fixed_points(finite_sys({2}, "2"), 0), std::domain_error);
}

TEST_CASE("fixed points for endomorphisms and negative ratios")
{
    // x -> 2x on the circle: F(n) = 2^n - 1
    auto circle = finite_sys({}, "2", MapMode::endomorphism);
    CHECK_EQ(f_row(circle, 6), zz_row({1, 3, 7, 15, 31, 63}));
    // x -> -2x: F(n) = |(-2)^n - 1| = 2^n - (-1)^n
    auto neg = finite_sys({2}, "-2");
    CHECK_EQ(f_row(neg, 5), zz_row({3, 3, 9, 15, 33}));
    // x -> (3/2)x needs both 2 and 3 inverted
    auto three_half = finite_sys({2, 3}, "3/2");
    CHECK_EQ(f_row(three_half, 4), zz_row({1, 5, 19, 65}));
    // 3^n - 2^n with the 5-part removed
    auto with5 = finite_sys({2, 3, 5}, "3/2");
    CHECK_EQ(f_row(with5, 4), zz_row({1, 1, 19, 13}));
}

TEST_CASE("cofinite fixed points via excluded primes only")
{
    // x -> 2x on Z[1/21]-style data: S cofinite excluding {3, 7}
    auto sys = cofinite_sys({3, 7}, "2");
    for (long n = 1; n <= 60; ++n) {
        ZZ expect = 1;
        for (long p : {3, 7}) {
            ZZ diff = pow_z(ZZ(2), n) - 1;
            while (divides(ZZ(p), diff)) { diff = divexact(diff, ZZ(p)); expect *= p; }
        }
        REQUIRE_EQ(fixed_points(sys, n), expect);
    }
}

TEST_CASE("log_fixed_points agrees with the exact values")
{
    auto s2 = finite_sys({2}, "2");
    CHECK_EQ(log_fixed_points(s2, 5), doctest::Approx(std::log(31.0)).epsilon(1e-12));
    CHECK_EQ(log_fixed_points(s2, 1), doctest::Approx(0.0).epsilon(1e-12));
    auto s23 = finite_sys({2, 3}, "2");
    CHECK_EQ(log_fixed_points(s23, 6), doctest::Approx(std::log(7.0)).epsilon(1e-12));

    for (auto& sys : {finite_sys({2}, "2"), finite_sys({2, 3}, "2"), finite_sys({2, 3}, "-3/2"),
                      cofinite_sys({3, 7}, "2"), finite_sys({2, 3, 5, 7}, "5/3")}) {
        for (long n = 1; n <= 200; ++n) {
            double exact = std::log(to_double(fixed_points(sys, n)));
            REQUIRE(std::fabs(log_fixed_points(sys, n) - exact) <= 1e-9);
        }
    }
}

TEST_CASE("orbit counts by Moebius inversion")
{
    CHECK_EQ(orbit_counts(finite_sys({2}, "2"), 6),
             zz_row({0, 1, 1, 2, 3, 6, 9}));
    CHECK_EQ(orbit_counts(finite_sys({2, 3}, "2"), 4), zz_row({0, 1, 0, 2, 1}));
    CHECK_EQ(orbit_counts(finite_sys({2}, "2"), 1), zz_row({0, 1}));
}

TEST_CASE("Moebius round trip restores F")
{
    for (auto& sys : {finite_sys({2, 3}, "2"), finite_sys({2}, "-2"),
                      cofinite_sys({3, 5}, "2"), finite_sys({2, 3, 5}, "5/2")}) {
        long N = 80;
        auto O = orbit_counts(sys, N);
        for (long n = 1; n <= N; ++n) {
            ZZ sum = 0;
            for (auto& d : divisors(ZZ(n))) sum += d * O[d.get_si()];
            REQUIRE_EQ(sum, fixed_points(sys, n));
        }
    }
}

TEST_CASE("orbit counts stay integral and nonnegative across random systems")
{
    const char* ratios[] = {"2", "-2", "3", "3/2", "-5/2", "7/3", "10/3"};
    for (const char* r : ratios) {
        auto rr = parse_ratio(r);
        std::vector<long> base;
        for (auto& [p, e] : factor(rr.num * rr.den)) base.push_back(p.get_si());
        CHECK_NOTHROW(orbit_counts(finite_sys(base, r), 50));
        std::vector<long> more = base;
        more.push_back(11);
        more.push_back(13);
        CHECK_NOTHROW(orbit_counts(finite_sys(more, r), 50));
    }
    CHECK_NOTHROW(orbit_counts(cofinite_sys({3}, "2"), 50));
    CHECK_NOTHROW(orbit_counts(cofinite_sys({5, 11}, "3"), 50));
}

TEST_CASE("divisibility: F(m) | F(n) whenever m | n")
{
    for (auto& sys : {finite_sys({2}, "2"), finite_sys({2, 3}, "2"), finite_sys({2, 5}, "-2"),
                      cofinite_sys({3, 7}, "2"), cofinite_sys({5}, "3"),
                      finite_sys({2, 3}, "3/2"), finite_sys({}, "2", MapMode::endomorphism)}) {
        auto F = f_row(sys, 60);
        for (long n = 1; n <= 60; ++n)
            for (long m = 1; m <= n; ++m)
                if (n % m == 0) REQUIRE(divides(F[m - 1], F[n - 1]));
    }
}

TEST_CASE("mertens partial sums")
{
    auto s2 = finite_sys({2}, "2");
    CHECK_EQ(mertens_sum(s2, 1), doctest::Approx(0.5).epsilon(1e-12));
    CHECK_EQ(mertens_sum(s2, 3), doctest::Approx(1.0).epsilon(1e-10));
    // against the exact big-integer evaluation at moderate N
    for (auto& sys : {finite_sys({2, 3}, "2"), cofinite_sys({3}, "2")}) {
        long N = 60;
        auto O = orbit_counts(sys, N);
        double h = entropy(sys);
        double exact = 0;
        for (long n = 1; n <= N; ++n) exact += to_double(O[n]) * std::exp(-h * n);
        CHECK_EQ(mertens_sum(sys, N), doctest::Approx(exact).epsilon(1e-8));
        auto curve = mertens_curve(sys, N);
        for (long n = 2; n <= N; ++n) REQUIRE(curve[n] >= curve[n - 1] - 1e-12);
    }
}

TEST_CASE("pi partial sums")
{
    CHECK_EQ(pi_sum(finite_sys({2}, "2"), 4), ZZ(7));
    CHECK_EQ(pi_sum(cofinite_sys({3, 5}, "2"), 1), ZZ(1));
    CHECK_EQ(pi_sum(finite_sys({2}, "2"), 1), ZZ(1));
    // nondecreasing
    auto prof = orbit_profile(finite_sys({2, 3}, "2"), 40);
    for (long n = 2; n <= 40; ++n) REQUIRE(prof.pi[n] >= prof.pi[n - 1]);
}

TEST_CASE("growth estimates")
{
    auto g = growth_estimate(finite_sys({2}, "2"), 100);
    CHECK_EQ(g.at_N, doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(g.at_N <= std::log(2.0) + 1e-12);

    auto g23 = growth_estimate(finite_sys({2, 3}, "2"), 200);
    CHECK(std::fabs(g23.at_N - std::log(2.0)) <= 5.0 * std::log(200.0) / 200.0);
    CHECK(g23.inf_window <= g23.at_N + 1e-12);
    CHECK(g23.at_N <= g23.sup_window + 1e-12);

    auto gc = growth_estimate(cofinite_sys({3}, "2"), 100);
    CHECK(gc.at_N >= 0.0);
    CHECK(gc.at_N <= 2.0 * std::log(100.0) / 100.0);
    CHECK_THROWS_AS(growth_estimate(finite_sys({2}, "2"), 5), std::domain_error);
}

TEST_CASE("finite-S valuation product sandwich")
{
    // prod_{p in S} |a^n - b^n|_p lies between A/n^B and 1
    for (auto& sys : {finite_sys({2, 3}, "2"), finite_sys({2, 3, 5, 7}, "2")}) {
        ZZ a = sys.r.num, b = sys.r.den;
        std::vector<double> s(501, 0.0);
        double B = 0;
        for (long n = 1; n <= 500; ++n) {
            double logs = 0;
            for (auto& p : sys.s.primes) {
                if (divides(p, a) || divides(p, b)) continue;
                logs -= valuation_of_power_difference(a, b, p, ZZ(n)) *
                        std::log(to_double(p));
            }
            s[n] = logs;
            REQUIRE(logs <= 1e-12);
            if (n >= 2) B = std::max(B, -logs / std::log(double(n)));
        }
        CHECK(B <= 6.0);
        double logA = 0;
        for (long n = 2; n <= 500; ++n) logA = std::min(logA, s[n] + B * std::log(double(n)));
        CHECK(logA >= std::log(1e-6));
        for (long n = 2; n <= 500; ++n)
            REQUIRE(s[n] >= logA - B * std::log(double(n)) - 1e-9);
    }
}

TEST_CASE("same-type sequences give the same F")
{
    auto c1 = CharacteristicSequence(Height::finite(0), {{ZZ(2), Height::infinity()}});
    auto c2 = CharacteristicSequence(
        Height::finite(0),
        {{ZZ(2), Height::infinity()}, {ZZ(5), Height::finite(3)}, {ZZ(7), Height::finite(1)}});
    REQUIRE(same_type(c1, c2));
    auto s1 = validate_system(c1, parse_ratio("2"), MapMode::automorphism);
    auto s2 = validate_system(c2, parse_ratio("2"), MapMode::automorphism);
    for (long n = 1; n <= 50; ++n) REQUIRE_EQ(fixed_points(s1, n), fixed_points(s2, n));
}

TEST_CASE("primes showing up in F are exactly those outside S and the map")
{
    auto sys = finite_sys({2}, "2");
    std::set<long> seen, expect;
    auto small = primes_upto(100);
    for (long n = 1; n <= 100; ++n) {
        ZZ F = fixed_points(sys, n);
        for (uint64_t p : small)
            if (divides(ZZ((long)p), F)) seen.insert((long)p);
    }
    for (uint64_t p : small)
        if (p != 2) expect.insert((long)p);
    CHECK(seen == expect);

    auto sys2 = finite_sys({2, 3, 5}, "5/2");
    seen.clear();
    expect.clear();
    for (long n = 1; n <= 100; ++n) {
        ZZ F = fixed_points(sys2, n);
        for (uint64_t p : small)
            if (divides(ZZ((long)p), F)) seen.insert((long)p);
    }
    for (uint64_t p : small)
        if (p != 2 && p != 3 && p != 5) expect.insert((long)p);
    CHECK(seen == expect);
}

TEST_CASE("mersenne prime sets")
{
    CHECK_EQ(mersenne_prime_set(1).primes, std::vector<ZZ>{ZZ(2)});
    CHECK_EQ(mersenne_prime_set(2).primes, std::vector<ZZ>({ZZ(2), ZZ(3)}));
    CHECK_EQ(mersenne_prime_set(3).primes, std::vector<ZZ>({ZZ(2), ZZ(3), ZZ(7)}));
    CHECK_EQ(mersenne_prime_set(4).primes, std::vector<ZZ>({ZZ(2), ZZ(3), ZZ(5), ZZ(7)}));
    CHECK_THROWS_AS(mersenne_prime_set(0), std::domain_error);
    CHECK_THROWS_AS(mersenne_prime_set(41), capability_error);

    // the F-table rows induced by S_1..S_4
    std::vector<std::vector<long>> rows = {
        {1, 3, 7, 15, 31}, {1, 1, 7, 5, 31}, {1, 1, 1, 5, 31}, {1, 1, 1, 1, 31}};
    for (long k = 1; k <= 4; ++k) {
        auto sys = validate_system(chi_with_infinite_set(mersenne_prime_set(k)),
                                   parse_ratio("2"), MapMode::automorphism);
        REQUIRE_EQ(f_row(sys, 5), zz_row(rows[k - 1]));
    }
}

TEST_CASE("entropy argument")
{
    CHECK_EQ(entropy_argument(finite_sys({2}, "2")), ZZ(2));
    CHECK_EQ(entropy_argument(finite_sys({2, 3}, "-3/2")), ZZ(3));
    CHECK_EQ(entropy_argument(finite_sys({2, 3}, "2/3")), ZZ(3));
    CHECK_EQ(entropy(finite_sys({2, 3}, "3/2")), doctest::Approx(std::log(3.0)));
    CHECK_EQ(entropy(cofinite_sys({}, "2")), doctest::Approx(std::log(2.0)));
}

} // TEST_SUITE
