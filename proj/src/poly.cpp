#include "solenoid/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "solenoid/factor.hpp"

namespace solenoid {

ZPoly::ZPoly(std::vector<ZZ> coeffs) : c(std::move(coeffs)) { normalize(); }

ZPoly::ZPoly(std::initializer_list<long> coeffs)
{
    for (long v : coeffs) c.emplace_back(v);
    normalize();
}

void ZPoly::normalize()
{
    while (!c.empty() && c.back() == 0) c.pop_back();
}

bool operator==(const ZPoly& f, const ZPoly& g) { return f.c == g.c; }

ZPoly operator+(const ZPoly& f, const ZPoly& g)
{
    std::vector<ZZ> out(std::max(f.c.size(), g.c.size()), ZZ(0));
    for (size_t i = 0; i < f.c.size(); ++i) out[i] += f.c[i];
    for (size_t i = 0; i < g.c.size(); ++i) out[i] += g.c[i];
    return ZPoly(std::move(out));
}

ZPoly operator-(const ZPoly& f, const ZPoly& g)
{
    std::vector<ZZ> out(std::max(f.c.size(), g.c.size()), ZZ(0));
    for (size_t i = 0; i < f.c.size(); ++i) out[i] += f.c[i];
    for (size_t i = 0; i < g.c.size(); ++i) out[i] -= g.c[i];
    return ZPoly(std::move(out));
}

ZPoly operator*(const ZPoly& f, const ZPoly& g)
{
    if (f.is_zero() || g.is_zero()) return ZPoly();
    std::vector<ZZ> out(f.c.size() + g.c.size() - 1, ZZ(0));
    for (size_t i = 0; i < f.c.size(); ++i)
        for (size_t j = 0; j < g.c.size(); ++j) out[i + j] += f.c[i] * g.c[j];
    return ZPoly(std::move(out));
}

ZPoly operator-(const ZPoly& f)
{
    ZPoly out = f;
    for (auto& x : out.c) x = -x;
    return out;
}

ZPoly operator*(const ZZ& k, const ZPoly& f)
{
    if (k == 0) return ZPoly();
    ZPoly out = f;
    for (auto& x : out.c) x *= k;
    return out;
}

ZPoly derivative(const ZPoly& f)
{
    std::vector<ZZ> out;
    for (size_t i = 1; i < f.c.size(); ++i) out.push_back(ZZ(i) * f.c[i]);
    return ZPoly(std::move(out));
}

ZZ eval(const ZPoly& f, const ZZ& x)
{
    ZZ v = 0;
    for (size_t i = f.c.size(); i-- > 0;) v = v * x + f.c[i];
    return v;
}

ZZ content(const ZPoly& f)
{
    ZZ g = 0;
    for (auto& x : f.c) g = gcd_z(g, x);
    return g;
}

ZPoly primitive_part(const ZPoly& f)
{
    if (f.is_zero()) return f;
    ZZ ct = content(f);
    ZPoly out = f;
    for (auto& x : out.c) x = divexact(x, ct);
    return out;
}

ZPoly divexact(const ZPoly& f, const ZPoly& g)
{
    if (g.is_zero()) throw std::domain_error("ZPoly divexact: division by zero");
    ZPoly rem = f;
    std::vector<ZZ> q(f.c.size() > g.c.size() - 1 ? f.c.size() - g.c.size() + 1 : 0, ZZ(0));
    while (!rem.is_zero() && rem.degree() >= g.degree()) {
        if (!divides(g.lead(), rem.lead()))
            throw std::domain_error("ZPoly divexact: inexact division");
        ZZ coef = divexact(rem.lead(), g.lead());
        long shift = rem.degree() - g.degree();
        q[shift] = coef;
        std::vector<ZZ> sub(shift + g.c.size(), ZZ(0));
        for (size_t i = 0; i < g.c.size(); ++i) sub[shift + i] = coef * g.c[i];
        rem = rem - ZPoly(std::move(sub));
    }
    if (!rem.is_zero()) throw std::domain_error("ZPoly divexact: nonzero remainder");
    return ZPoly(std::move(q));
}

ZPoly mod_monic(const ZPoly& f, const ZPoly& g)
{
    if (!g.monic()) throw std::domain_error("mod_monic: modulus must be monic");
    ZPoly rem = f;
    while (!rem.is_zero() && rem.degree() >= g.degree()) {
        ZZ coef = rem.lead();
        long shift = rem.degree() - g.degree();
        std::vector<ZZ> sub(shift + g.c.size(), ZZ(0));
        for (size_t i = 0; i < g.c.size(); ++i) sub[shift + i] = coef * g.c[i];
        rem = rem - ZPoly(std::move(sub));
    }
    return rem;
}

ZPoly powmod_x(const ZZ& e, const ZPoly& g)
{
    if (!g.monic()) throw std::domain_error("powmod_x: modulus must be monic");
    if (g.degree() == 0) return ZPoly();
    ZPoly result({1});
    ZPoly base = mod_monic(ZPoly({0, 1}), g);
    ZZ k = e;
    while (k > 0) {
        if (divides(ZZ(2), k)) {
            base = mod_monic(base * base, g);
            k = divexact(k, ZZ(2));
        } else {
            result = mod_monic(result * base, g);
            k -= 1;
        }
    }
    return result;
}

ZPoly cyclotomic(long n)
{
    if (n < 1) throw std::domain_error("cyclotomic: n must be >= 1");
    // x^n - 1 divided by the cyclotomics of the proper divisors of n
    std::vector<ZZ> top(n + 1, ZZ(0));
    top[0] = -1;
    top[n] = 1;
    ZPoly phi(std::move(top));
    for (auto& d : divisors(ZZ(n)))
        if (d != n) phi = divexact(phi, cyclotomic(d.get_si()));
    return phi;
}

ZPoly compose_neg(const ZPoly& f)
{
    ZPoly out = f;
    for (size_t i = 1; i < out.c.size(); i += 2) out.c[i] = -out.c[i];
    out.normalize();
    return out;
}

ZPoly reversal(const ZPoly& f)
{
    std::vector<ZZ> out(f.c.rbegin(), f.c.rend());
    return ZPoly(std::move(out));
}

std::string to_string(const ZPoly& f)
{
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = f.degree(); i >= 0; --i) {
        const ZZ& a = f.c[i];
        if (a == 0) continue;
        ZZ mag = abs_z(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) os << mag;
        if (i >= 1) {
            os << "x";
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

QPoly::QPoly(std::vector<QQ> coeffs) : c(std::move(coeffs)) { normalize(); }

void QPoly::normalize()
{
    while (!c.empty() && c.back() == 0) c.pop_back();
}

bool operator==(const QPoly& f, const QPoly& g) { return f.c == g.c; }

QPoly operator+(const QPoly& f, const QPoly& g)
{
    std::vector<QQ> out(std::max(f.c.size(), g.c.size()), QQ(0));
    for (size_t i = 0; i < f.c.size(); ++i) out[i] += f.c[i];
    for (size_t i = 0; i < g.c.size(); ++i) out[i] += g.c[i];
    return QPoly(std::move(out));
}

QPoly operator-(const QPoly& f, const QPoly& g)
{
    std::vector<QQ> out(std::max(f.c.size(), g.c.size()), QQ(0));
    for (size_t i = 0; i < f.c.size(); ++i) out[i] += f.c[i];
    for (size_t i = 0; i < g.c.size(); ++i) out[i] -= g.c[i];
    return QPoly(std::move(out));
}

QPoly operator*(const QPoly& f, const QPoly& g)
{
    if (f.is_zero() || g.is_zero()) return QPoly();
    std::vector<QQ> out(f.c.size() + g.c.size() - 1, QQ(0));
    for (size_t i = 0; i < f.c.size(); ++i)
        for (size_t j = 0; j < g.c.size(); ++j) out[i + j] += f.c[i] * g.c[j];
    return QPoly(std::move(out));
}

QPoly operator*(const QQ& k, const QPoly& f)
{
    if (k == 0) return QPoly();
    QPoly out = f;
    for (auto& x : out.c) x *= k;
    return out;
}

QPoly to_qpoly(const ZPoly& f)
{
    std::vector<QQ> out;
    for (auto& x : f.c) out.emplace_back(x);
    return QPoly(std::move(out));
}

ZPoly clear_denominators(const QPoly& f)
{
    if (f.is_zero()) return ZPoly();
    ZZ lcm = 1;
    for (auto& x : f.c) lcm = lcm_z(lcm, x.get_den());
    std::vector<ZZ> out;
    for (auto& x : f.c) {
        QQ v = x * QQ(lcm);
        out.push_back(v.get_num());
    }
    return primitive_part(ZPoly(std::move(out)));
}

QPoly derivative(const QPoly& f)
{
    std::vector<QQ> out;
    for (size_t i = 1; i < f.c.size(); ++i) out.push_back(QQ(ZZ(i)) * f.c[i]);
    return QPoly(std::move(out));
}

QQ eval(const QPoly& f, const QQ& x)
{
    QQ v = 0;
    for (size_t i = f.c.size(); i-- > 0;) v = v * x + f.c[i];
    return v;
}

std::pair<QPoly, QPoly> divmod(const QPoly& f, const QPoly& g)
{
    if (g.is_zero()) throw std::domain_error("QPoly divmod: division by zero");
    QPoly rem = f;
    std::vector<QQ> q(f.c.size() > g.c.size() - 1 ? f.c.size() - g.c.size() + 1 : 0, QQ(0));
    while (!rem.is_zero() && rem.degree() >= g.degree()) {
        QQ coef = rem.lead() / g.lead();
        long shift = rem.degree() - g.degree();
        q[shift] = coef;
        std::vector<QQ> sub(shift + g.c.size(), QQ(0));
        for (size_t i = 0; i < g.c.size(); ++i) sub[shift + i] = coef * g.c[i];
        rem = rem - QPoly(std::move(sub));
    }
    return {QPoly(std::move(q)), rem};
}

QPoly make_monic(const QPoly& f)
{
    if (f.is_zero()) return f;
    return QQ(1) / f.lead() * f;
}

QPoly gcd(const QPoly& f, const QPoly& g)
{
    QPoly a = f, b = g;
    while (!b.is_zero()) {
        QPoly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return make_monic(a);
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f)
{
    std::vector<std::pair<QPoly, int>> out;
    if (f.degree() < 1) return out;
    QPoly a = make_monic(f);
    QPoly g = gcd(a, derivative(a));
    QPoly w = divmod(a, g).first; // product of squarefree parts
    int i = 1;
    while (w.degree() >= 1) {
        QPoly y = gcd(w, g);
        QPoly factor = divmod(w, y).first;
        if (factor.degree() >= 1) out.emplace_back(make_monic(factor), i);
        w = y;
        g = divmod(g, y).first;
        ++i;
    }
    return out;
}

} // namespace solenoid
