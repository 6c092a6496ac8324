#pragma once
#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace solenoid {

typedef mpz_class ZZ;
typedef mpq_class QQ;

inline ZZ abs_z(const ZZ& a)
{
    ZZ r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline int sgn(const ZZ& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sgn(const QQ& q) { return mpq_sgn(q.get_mpq_t()); }

inline ZZ pow_z(const ZZ& base, unsigned long e)
{
    ZZ r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline ZZ gcd_z(const ZZ& a, const ZZ& b)
{
    ZZ r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline ZZ lcm_z(const ZZ& a, const ZZ& b)
{
    ZZ r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// floor(a/b) exact when b | a; callers use this only in the exact case
inline ZZ divexact(const ZZ& a, const ZZ& b)
{
    ZZ r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const ZZ& d, const ZZ& a)
{
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline ZZ powm(const ZZ& base, const ZZ& e, const ZZ& mod)
{
    ZZ r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    return r;
}

inline std::string str(const ZZ& a) { return a.get_str(); }
inline std::string str(const QQ& q) { return q.get_str(); }

inline double to_double(const ZZ& a) { return a.get_d(); }
inline double to_double(const QQ& q) { return q.get_d(); }

} // namespace solenoid
