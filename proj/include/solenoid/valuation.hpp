#pragma once

#include "solenoid/numbers.hpp"

namespace solenoid {

// v_p(n) for n != 0; throws std::domain_error on n == 0 or non-prime p.
long padic_valuation(const ZZ& n, const ZZ& p);

// v_p extended to nonzero rationals: v_p(num) - v_p(den).
long padic_valuation(const QQ& q, const ZZ& p);

// Least m >= 1 with a^m == b^m (mod p), for a prime p not dividing a*b.
// Equals the order of a/b in (Z/p)^* and divides p - 1.
long multiplicative_order(const ZZ& a, const ZZ& b, const ZZ& p);

// v_p(a^n - b^n) for coprime a, b with a != +-b, p not dividing a*b, n >= 1.
// Uses the lifting lemma: zero unless m = multiplicative_order(a, b, p)
// divides n, and then
//   p odd:  v_p(a^m - b^m) + v_p(n/m)
//   p == 2: v_2(a - b) for odd n, else v_2(a-b) + v_2(a+b) + v_2(n) - 1.
long valuation_of_power_difference(const ZZ& a, const ZZ& b, const ZZ& p, const ZZ& n);

// Checks |q| * prod_p |q|_p == 1 over the primes dividing numerator or
// denominator, in exact arithmetic. Always true; exposed as a self-test hook.
bool product_formula_check(const QQ& q);

} // namespace solenoid
