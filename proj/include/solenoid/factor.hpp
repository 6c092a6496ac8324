#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "solenoid/numbers.hpp"

namespace solenoid {

/// Deterministic Miller-Rabin for |n| < 3.3e24 (fixed witness set 2..37);
/// the same fixed witnesses are used above, so behaviour is always deterministic.
bool is_prime(const ZZ& n);

/// Prime factorization, sorted by prime.  Trial division up to 10^6, then
/// Brent's cycle-finding rho for the remaining cofactors.
std::vector<std::pair<ZZ, unsigned>> factor(const ZZ& n);

/// Moebius function; n >= 1 required.
int mobius(const ZZ& n);

/// All positive divisors of |n|, sorted ascending.
std::vector<ZZ> divisors(const ZZ& n);

std::vector<uint64_t> primes_upto(uint64_t n);

/// Euler totient; n >= 1 required.
long euler_phi(long n);

/// mu[0] unused; mu[n] = mobius(n) for 1 <= n <= N.
std::vector<int8_t> mobius_sieve(uint64_t N);

} // namespace solenoid
