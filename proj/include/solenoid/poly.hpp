#pragma once

#include <string>
#include <utility>
#include <vector>

#include "solenoid/numbers.hpp"

namespace solenoid {

/// Dense integer polynomial; c[i] is the coefficient of x^i, trailing zeros
/// stripped, zero polynomial has an empty list.
struct ZPoly {
    std::vector<ZZ> c;

    ZPoly() = default;
    explicit ZPoly(std::vector<ZZ> coeffs);
    ZPoly(std::initializer_list<long> coeffs);

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const ZZ& lead() const { return c.back(); }
    ZZ at0() const { return c.empty() ? ZZ(0) : c.front(); }
    bool monic() const { return !c.empty() && c.back() == 1; }
    void normalize();
};

bool operator==(const ZPoly& f, const ZPoly& g);
ZPoly operator+(const ZPoly& f, const ZPoly& g);
ZPoly operator-(const ZPoly& f, const ZPoly& g);
ZPoly operator*(const ZPoly& f, const ZPoly& g);
ZPoly operator-(const ZPoly& f);
ZPoly operator*(const ZZ& k, const ZPoly& f);

ZPoly derivative(const ZPoly& f);
ZZ eval(const ZPoly& f, const ZZ& x);
/// gcd of the coefficients, always >= 0 (0 for the zero polynomial).
ZZ content(const ZPoly& f);
/// f divided by its content; sign of the leading coefficient preserved.
ZPoly primitive_part(const ZPoly& f);
/// Exact division; throws std::domain_error if g does not divide f.
ZPoly divexact(const ZPoly& f, const ZPoly& g);
/// Remainder of f modulo a monic g.
ZPoly mod_monic(const ZPoly& f, const ZPoly& g);
/// x^e modulo a monic g by binary exponentiation, exact integer arithmetic.
ZPoly powmod_x(const ZZ& e, const ZPoly& g);
/// The n-th cyclotomic polynomial.
ZPoly cyclotomic(long n);
/// Substitute -x for x.
ZPoly compose_neg(const ZPoly& f);
/// x^deg f(1/x).
ZPoly reversal(const ZPoly& f);

std::string to_string(const ZPoly& f);

/// Dense rational polynomial with the same conventions.
struct QPoly {
    std::vector<QQ> c;

    QPoly() = default;
    explicit QPoly(std::vector<QQ> coeffs);

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const QQ& lead() const { return c.back(); }
    void normalize();
};

bool operator==(const QPoly& f, const QPoly& g);
QPoly operator+(const QPoly& f, const QPoly& g);
QPoly operator-(const QPoly& f, const QPoly& g);
QPoly operator*(const QPoly& f, const QPoly& g);
QPoly operator*(const QQ& k, const QPoly& f);

QPoly to_qpoly(const ZPoly& f);
/// Smallest primitive integer multiple, lead sign preserved.
ZPoly clear_denominators(const QPoly& f);
QPoly derivative(const QPoly& f);
QQ eval(const QPoly& f, const QQ& x);
/// Division with remainder; g nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& f, const QPoly& g);
/// Monic gcd.
QPoly gcd(const QPoly& f, const QPoly& g);
QPoly make_monic(const QPoly& f);

/// Squarefree decomposition by repeated gcds: returns pairs (g_i, i) with
/// f = lead * prod g_i^i, the g_i squarefree, pairwise coprime and monic.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f);

} // namespace solenoid
