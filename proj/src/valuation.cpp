#include "solenoid/valuation.hpp"

#include <stdexcept>

#include "solenoid/errors.hpp"
#include "solenoid/factor.hpp"

namespace solenoid {

long padic_valuation(const ZZ& n, const ZZ& p)
{
    if (n == 0) throw std::domain_error("padic_valuation: v_p(0) undefined");
    if (!is_prime(p)) throw std::domain_error("padic_valuation: p not prime");
    ZZ m = abs_z(n);
    long v = 0;
    while (divides(p, m)) { m = divexact(m, p); ++v; }
    return v;
}

long padic_valuation(const QQ& q, const ZZ& p)
{
    if (q == 0) throw std::domain_error("padic_valuation: v_p(0) undefined");
    return padic_valuation(q.get_num(), p) - padic_valuation(q.get_den(), p);
}

long multiplicative_order(const ZZ& a, const ZZ& b, const ZZ& p)
{
    if (!is_prime(p)) throw std::domain_error("multiplicative_order: p not prime");
    if (divides(p, a) || divides(p, b))
        throw std::domain_error("multiplicative_order: p divides a*b");
    ZZ r = a * powm(b, p - 2, p) % p;
    if (r < 0) r += p;
    ZZ ord = p - 1;
    for (auto& [q, e] : factor(p - 1)) {
        for (unsigned i = 0; i < e; ++i) {
            ZZ t = divexact(ord, q);
            if (powm(r, t, p) == 1) ord = t;
            else break;
        }
    }
    if (!ord.fits_slong_p())
        throw capability_error("multiplicative_order: order does not fit a machine word");
    return ord.get_si();
}

long valuation_of_power_difference(const ZZ& a, const ZZ& b, const ZZ& p, const ZZ& n)
{
    if (n < 1) throw std::domain_error("valuation_of_power_difference: n must be >= 1");
    if (a == b || a == -b) throw std::domain_error("valuation_of_power_difference: a = +-b");
    if (gcd_z(a, b) != 1) throw std::domain_error("valuation_of_power_difference: a, b not coprime");
    if (!is_prime(p)) throw std::domain_error("valuation_of_power_difference: p not prime");
    if (divides(p, a) || divides(p, b))
        throw std::domain_error("valuation_of_power_difference: p divides a*b");

    if (p == 2) {
        // a and b are both odd here
        long v = padic_valuation(ZZ(a - b), p);
        if (divides(ZZ(2), n))
            v += padic_valuation(ZZ(a + b), p) + padic_valuation(n, p) - 1;
        return v;
    }

    ZZ m(multiplicative_order(a, b, p));
    if (!divides(m, n)) return 0;
    // v_p(a^m - b^m), lifting modulo growing powers of p rather than forming
    // the full power difference.
    long e = 0;
    unsigned long K = 8;
    for (;;) {
        ZZ pk = pow_z(p, K);
        ZZ d = (powm(a, m, pk) - powm(b, m, pk)) % pk;
        if (d < 0) d += pk;
        if (d != 0) {
            e = padic_valuation(d, p);
            break;
        }
        K *= 2;
        if (K > (1ul << 20))
            throw std::runtime_error("valuation_of_power_difference: lift did not stabilize");
    }
    return e + padic_valuation(divexact(n, m), p);
}

bool product_formula_check(const QQ& q)
{
    if (q == 0) throw std::domain_error("product_formula_check: zero input");
    ZZ prod_num = 1, prod_den = 1;
    if (abs_z(q.get_num()) != 1)
        for (auto& [p, e] : factor(q.get_num())) prod_num *= pow_z(p, e);
    if (q.get_den() != 1)
        for (auto& [p, e] : factor(q.get_den())) prod_den *= pow_z(p, e);
    return prod_num == abs_z(q.get_num()) && prod_den == q.get_den();
}

} // namespace solenoid
