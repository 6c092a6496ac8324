#include "solenoid/factor.hpp"

#include <algorithm>
#include <stdexcept>

#include "solenoid/errors.hpp"

namespace solenoid {

namespace {

bool miller_rabin_round(const ZZ& n, const ZZ& d, unsigned long s, const ZZ& a)
{
    ZZ x = powm(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime(const ZZ& n)
{
    if (n < 2) return false;
    static const unsigned long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned long p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    ZZ d = n - 1;
    unsigned long s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    for (unsigned long a : small)
        if (!miller_rabin_round(n, d, s, ZZ(a))) return false;
    return true;
}

namespace {

ZZ rho_brent(const ZZ& n)
{
    // n odd composite, no factor below the trial-division bound
    for (unsigned long c = 1;; ++c) {
        ZZ x = 2, y = 2, d = 1;
        ZZ q = 1;
        unsigned long lam = 1;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < lam; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < lam && d == 1) {
                ZZ ys = y;
                unsigned long lim = std::min<unsigned long>(128, lam - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs_z(x - y) % n;
                }
                d = gcd_z(q, n);
                if (d == n) {
                    // backtrack one step at a time
                    d = 1;
                    y = ys;
                    do {
                        y = (y * y + c) % n;
                        d = gcd_z(abs_z(x - y), n);
                    } while (d == 1);
                    break;
                }
                k += lim;
            }
            lam *= 2;
        }
        if (d != n) return d;
    }
}

void factor_into(ZZ n, std::vector<std::pair<ZZ, unsigned>>& out)
{
    if (n == 1) return;
    if (is_prime(n)) {
        out.emplace_back(n, 1);
        return;
    }
    ZZ d = rho_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::vector<std::pair<ZZ, unsigned>> factor(const ZZ& n_in)
{
    ZZ n = abs_z(n_in);
    if (n == 0) throw std::domain_error("factor: zero input");
    std::vector<std::pair<ZZ, unsigned>> out;
    for (unsigned long p = 2; p < 1000000ul && ZZ(p) * p <= n; p == 2 ? p = 3 : p += 2) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(ZZ(p), e);
        }
    }
    if (n > 1) {
        std::vector<std::pair<ZZ, unsigned>> rest;
        factor_into(n, rest);
        std::sort(rest.begin(), rest.end());
        // merge equal primes from recursive splits
        for (auto& pe : rest) {
            if (!out.empty() && out.back().first == pe.first)
                out.back().second += pe.second;
            else
                out.push_back(pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int mobius(const ZZ& n)
{
    if (n < 1) throw std::domain_error("mobius: n must be positive");
    if (n == 1) return 1;
    auto fs = factor(n);
    for (auto& [p, e] : fs)
        if (e > 1) return 0;
    return fs.size() % 2 == 0 ? 1 : -1;
}

std::vector<ZZ> divisors(const ZZ& n)
{
    if (n == 0) throw std::domain_error("divisors: zero input");
    std::vector<ZZ> out{1};
    for (auto& [p, e] : factor(n)) {
        size_t sz = out.size();
        ZZ pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint64_t> primes_upto(uint64_t n)
{
    std::vector<bool> comp(n + 1, false);
    std::vector<uint64_t> ps;
    for (uint64_t i = 2; i <= n; ++i) {
        if (!comp[i]) {
            ps.push_back(i);
            for (uint64_t j = i * i; j <= n; j += i) comp[j] = true;
        }
    }
    return ps;
}

long euler_phi(long n)
{
    if (n < 1) throw std::domain_error("euler_phi requires n >= 1");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<int8_t> mobius_sieve(uint64_t N)
{
    std::vector<int8_t> mu(N + 1, 1);
    std::vector<bool> comp(N + 1, false);
    std::vector<uint64_t> ps;
    for (uint64_t i = 2; i <= N; ++i) {
        if (!comp[i]) { ps.push_back(i); mu[i] = -1; }
        for (uint64_t p : ps) {
            if (i * p > N) break;
            comp[i * p] = true;
            if (i % p == 0) { mu[i * p] = 0; break; }
            mu[i * p] = -mu[i];
        }
    }
    return mu;
}

} // namespace solenoid
