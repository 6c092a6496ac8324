#include "solenoid/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "solenoid/errors.hpp"
#include "solenoid/factor.hpp"
#include "solenoid/orbits.hpp"
#include "solenoid/valuation.hpp"

namespace solenoid {

bool operator==(const RationalFunctionZ& f, const RationalFunctionZ& g)
{
    return f.num == g.num && f.den == g.den;
}

std::string to_string(const RationalFunctionZ& f)
{
    return "(" + to_string(f.num) + ") / (" + to_string(f.den) + ")";
}

std::vector<QQ> series_mul(const std::vector<QQ>& f, const std::vector<QQ>& g,
                           long order)
{
    std::vector<QQ> h(order + 1, QQ(0));
    for (long i = 0; i <= order && i < (long)f.size(); ++i) {
        if (f[i] == 0) continue;
        for (long j = 0; i + j <= order && j < (long)g.size(); ++j)
            h[i + j] += f[i] * g[j];
    }
    return h;
}

std::vector<QQ> series_recip(const std::vector<QQ>& f, long order)
{
    if (f.empty() || f[0] == 0)
        throw std::domain_error("series_recip requires a nonzero constant term");
    std::vector<QQ> r(order + 1, QQ(0));
    r[0] = QQ(1) / f[0];
    for (long k = 1; k <= order; ++k) {
        QQ acc(0);
        for (long j = 1; j <= k && j < (long)f.size(); ++j)
            acc += f[j] * r[k - j];
        r[k] = -acc / f[0];
    }
    return r;
}

std::vector<QQ> rational_series(const RationalFunctionZ& f, long order)
{
    std::vector<QQ> num(f.num.c.begin(), f.num.c.end());
    std::vector<QQ> den(f.den.c.begin(), f.den.c.end());
    if (num.empty()) num.push_back(QQ(0));
    return series_mul(num, series_recip(den, order), order);
}

TruncatedPowerSeries zeta_series(const std::vector<ZZ>& F)
{
    for (const ZZ& f : F)
        if (f < 1) throw std::domain_error("zeta_series requires F[n] >= 1");
    long N = (long)F.size();
    TruncatedPowerSeries s;
    s.order = N;
    s.coeffs.assign(N + 1, QQ(0));
    s.coeffs[0] = 1;
    for (long k = 1; k <= N; ++k) {
        QQ acc(0);
        for (long j = 1; j <= k; ++j) acc += QQ(F[j - 1]) * s.coeffs[k - j];
        s.coeffs[k] = acc / k;
    }
    return s;
}

std::vector<QQ> series_log(const TruncatedPowerSeries& f)
{
    if (f.coeffs.empty() || f.coeffs[0] != 1)
        throw std::domain_error("series_log requires constant term 1");
    long N = f.order;
    std::vector<QQ> l(N + 1, QQ(0));
    for (long n = 1; n <= N; ++n) {
        QQ acc = QQ(n) * f.coeffs[n];
        for (long j = 1; j < n; ++j) acc -= QQ(j) * l[j] * f.coeffs[n - j];
        l[n] = acc / n;
    }
    return l;
}

RationalFunctionZ rational_zeta_integer_map(const ZZ& a)
{
    if (abs_z(a) < 2)
        throw std::domain_error("rational_zeta_integer_map requires |a| >= 2");
    RationalFunctionZ f;
    if (a > 0) {
        f.num = ZPoly{1, -1};
        f.den = ZPoly(std::vector<ZZ>{ZZ(1), -a});
    } else {
        f.num = ZPoly{1, 1};
        f.den = ZPoly(std::vector<ZZ>{ZZ(1), a});
    }
    return f;
}

bool toral_ergodic(const IntMat& A)
{
    if (!A.square() || A.rows == 0)
        throw std::domain_error("toral_ergodic requires a square matrix");
    ZZ d = det(A);
    if (d != 1 && d != -1) return false;
    long dim = A.rows;
    QPoly cp = to_qpoly(char_poly(A));
    for (long m = 1; m <= 2 * dim * dim + 2; ++m) {
        if (euler_phi(m) > dim) continue;
        QPoly g = gcd(cp, to_qpoly(cyclotomic(m)));
        if (g.degree() > 0) return false;
    }
    return true;
}

ZZ toral_fixed_points(const IntMat& A, long n)
{
    if (n < 1) throw std::domain_error("toral_fixed_points requires n >= 1");
    if (!toral_ergodic(A))
        throw std::domain_error("matrix is not an ergodic toral automorphism");
    IntMat D = mat_pow(A, n) - IntMat::identity(A.rows);
    return abs_z(det(D));
}

namespace {

struct LinearRecurrence {
    std::vector<QQ> connection;  // C_0 = 1; s_n = -sum_{i>=1} C_i s_{n-i}
    long order = 0;
};

/// Berlekamp-Massey over the rationals: shortest LFSR generating s.
LinearRecurrence berlekamp_massey(const std::vector<QQ>& s)
{
    std::vector<QQ> C{QQ(1)}, B{QQ(1)};
    long L = 0, m = 1;
    QQ b(1);
    for (size_t n = 0; n < s.size(); ++n) {
        QQ delta = s[n];
        for (long i = 1; i <= L && i < (long)C.size(); ++i)
            delta += C[i] * s[n - i];
        if (delta == 0) {
            ++m;
            continue;
        }
        std::vector<QQ> T = C;
        QQ coef = delta / b;
        if ((long)C.size() < (long)B.size() + m) C.resize(B.size() + m, QQ(0));
        for (size_t i = 0; i < B.size(); ++i) C[i + m] -= coef * B[i];
        if (2 * L <= (long)n) {
            L = (long)n + 1 - L;
            B = std::move(T);
            b = delta;
            m = 1;
        } else {
            ++m;
        }
    }
    while ((long)C.size() > L + 1 && C.back() == 0) C.pop_back();
    return {C, L};
}

QQ rational_content_gcd(const QQ& x, const QQ& y)
{
    if (x == 0) return QQ(abs(y));
    if (y == 0) return QQ(abs(x));
    ZZ n = gcd_z(ZZ(x.get_num() * y.get_den()), ZZ(y.get_num() * x.get_den()));
    return QQ(n) / QQ(x.get_den() * y.get_den());
}

/// Coefficient-for-coefficient conversion; every entry must be integral.
ZPoly to_zpoly_exact(const QPoly& f)
{
    std::vector<ZZ> c;
    c.reserve(f.c.size());
    for (const QQ& x : f.c) {
        if (x.get_den() != 1)
            throw capability_error("expected integral coefficients");
        c.push_back(x.get_num());
    }
    return ZPoly(c);
}

/// Reduce P/Q over the rationals and rescale by one common factor so both
/// are integral, jointly primitive, with positive denominator constant term.
RationalFunctionZ normalize_pair(const QPoly& P, const QPoly& Q)
{
    QPoly g = gcd(P, Q);
    QPoly p = divmod(P, g).first;
    QPoly q = divmod(Q, g).first;
    QQ scale(0);
    for (const QQ& coef : p.c) scale = rational_content_gcd(scale, coef);
    for (const QQ& coef : q.c) scale = rational_content_gcd(scale, coef);
    if (scale == 0) throw std::domain_error("normalize_pair on zero function");
    RationalFunctionZ f;
    f.num = to_zpoly_exact(QQ(1) / scale * p);
    f.den = to_zpoly_exact(QQ(1) / scale * q);
    if (f.den.at0() < 0 || (f.den.at0() == 0 && f.den.lead() < 0)) {
        f.num = -f.num;
        f.den = -f.den;
    }
    return f;
}

} // namespace

RationalFunctionZ toral_zeta(const IntMat& A, long N)
{
    if (!toral_ergodic(A))
        throw std::domain_error("matrix is not an ergodic toral automorphism");
    long dim = A.rows;
    long min_N = 4 * (1L << dim);
    if (N < min_N)
        throw std::domain_error("toral_zeta needs N >= 4 * 2^d terms");
    long bound = 1L << (dim + 1);

    std::vector<ZZ> F(N);
    std::vector<QQ> signed_seq(N), abs_seq(N);
    IntMat P = IntMat::identity(dim);
    for (long n = 1; n <= N; ++n) {
        P = P * A;
        ZZ d = det(P - IntMat::identity(dim));
        signed_seq[n - 1] = QQ(d);
        F[n - 1] = abs_z(d);
        abs_seq[n - 1] = QQ(F[n - 1]);
    }

    // A recurrence must exist at modest order for both the signed determinant
    // sequence and the absolute one; the latter drives the reconstruction.
    LinearRecurrence rec_signed = berlekamp_massey(signed_seq);
    LinearRecurrence rec_abs = berlekamp_massey(abs_seq);
    if (rec_signed.order > bound || rec_abs.order > bound)
        throw capability_error(
            "fixed-point counts admit no linear recurrence of order <= 2^(d+1)");

    TruncatedPowerSeries zeta = zeta_series(F);
    LinearRecurrence rec_zeta = berlekamp_massey(zeta.coeffs);
    if (rec_zeta.order > bound)
        throw capability_error(
            "zeta coefficients admit no linear recurrence of order <= 2^(d+1)");

    // Numerator = connection poly * series; coefficients vanish from the
    // recurrence order onward when the fit is genuine.
    std::vector<QQ> prod =
        series_mul(rec_zeta.connection, zeta.coeffs, N);
    long deg_num = -1;
    for (long i = 0; i <= N; ++i) {
        if (prod[i] == 0) continue;
        if (i >= (long)rec_zeta.connection.size())
            throw capability_error("recurrence fit fails beyond its order");
        deg_num = i;
    }
    std::vector<QQ> num_coeffs(prod.begin(), prod.begin() + deg_num + 1);

    RationalFunctionZ f =
        normalize_pair(QPoly(num_coeffs), QPoly(rec_zeta.connection));

    std::vector<QQ> expanded = rational_series(f, N);
    for (long n = 0; n <= N; ++n)
        if (expanded[n] != zeta.coeffs[n])
            throw capability_error(
                "reconstructed zeta fails re-expansion verification");
    return f;
}

RealizabilityVerdict realizable_as_map(const std::vector<ZZ>& a)
{
    RealizabilityVerdict v;
    for (long n = 1; n <= (long)a.size(); ++n) {
        ZZ s(0);
        for (const ZZ& d : divisors(ZZ(n)))
            s += ZZ(mobius(divexact(ZZ(n), d))) * a[d.get_si() - 1];
        if (s < 0 || s % n != 0) {
            v.ok = false;
            v.fail_at = n;
            v.witness = s;
            return v;
        }
    }
    return v;
}

bool is_divisibility_sequence(const std::vector<ZZ>& F)
{
    for (long m = 1; m <= (long)F.size(); ++m)
        for (long n = 2 * m; n <= (long)F.size(); n += m)
            if (!divides(F[m - 1], F[n - 1])) return false;
    return true;
}

EnglandSmythVerdict england_smyth_check(const std::vector<ZZ>& a, const ZZ& n,
                                        const ZZ& m, long K)
{
    if (gcd_z(n, m) != 1)
        throw std::domain_error("england_smyth_check requires gcd(n, m) = 1");
    if (K < 1 || K > (long)a.size())
        throw std::domain_error("england_smyth_check bound exceeds the sequence");
    for (long k = 1; k <= K; ++k)
        if (a[k - 1] < 1)
            throw std::domain_error("england_smyth_check requires a_k >= 1");

    std::vector<ZZ> D(K + 1);
    for (long k = 1; k <= K; ++k)
        D[k] = abs_z(ZZ(pow_z(n, k) - pow_z(m, k)));

    EnglandSmythVerdict v;
    for (long k = 1; k <= K; ++k) {
        if (!divides(a[k - 1], D[k])) {
            v.ok = false;
            v.k = k;
            v.reason = "divisibility";
            return v;
        }
    }
    for (long k = 1; k <= K; ++k) {
        for (long l = 1; l <= K; ++l) {
            if (k == l) continue;
            ZZ cof = divexact(D[l], a[l - 1]);
            if (gcd_z(a[k - 1], cof) != 1) {
                v.ok = false;
                v.k = k;
                v.l = l;
                v.reason = "coprimality";
                return v;
            }
        }
    }
    return v;
}

PrimeSet s_set_recover(const std::vector<ZZ>& a, const ZZ& n, const ZZ& m,
                       const ZZ& prime_bound, long K)
{
    EnglandSmythVerdict check = england_smyth_check(a, n, m, K);
    if (!check.ok)
        throw std::domain_error(
            "s_set_recover requires a sequence passing england_smyth_check");

    std::set<ZZ> found;
    for (long l = 1; l <= K; ++l) {
        ZZ D = abs_z(ZZ(pow_z(n, l) - pow_z(m, l)));
        ZZ cof = divexact(D, a[l - 1]);
        if (cof == 1) continue;
        for (const auto& [p, e] : factor(cof))
            if (p <= prime_bound) found.insert(p);
    }

    std::vector<ZZ> primes(found.begin(), found.end());
    for (long k = 1; k <= K; ++k) {
        ZZ regen = abs_z(ZZ(pow_z(n, k) - pow_z(m, k)));
        for (const ZZ& p : primes) {
            while (divides(p, regen)) regen = divexact(regen, p);
        }
        if (regen != a[k - 1])
            throw capability_error(
                "recovered prime set does not regenerate the sequence; "
                "prime_bound is too small");
    }
    return PrimeSet::finite(primes);
}

namespace {

void s_smooth_upto(const std::vector<ZZ>& primes, size_t i, const ZZ& cur,
                   const ZZ& cap, std::vector<ZZ>& out)
{
    if (i == primes.size()) {
        out.push_back(cur);
        return;
    }
    ZZ v = cur;
    while (v <= cap) {
        s_smooth_upto(primes, i + 1, v, cap, out);
        v *= primes[i];
    }
}

} // namespace

std::vector<ReducedRational> zeta_class_enumerate(const SolenoidSystem& sys,
                                                  long N, long bound)
{
    if (sys.s.kind != PrimeSet::Kind::finite)
        throw std::domain_error("zeta_class_enumerate requires a finite prime set");
    if (sys.mode != MapMode::automorphism)
        throw std::domain_error("zeta_class_enumerate requires an automorphism");
    if (N < 1 || bound < 0)
        throw std::domain_error("zeta_class_enumerate bad N or bound");

    std::vector<ZZ> target(N);
    for (long n = 1; n <= N; ++n) target[n - 1] = fixed_points(sys, n);

    ZZ cap = entropy_argument(sys) + bound;
    std::vector<ZZ> units;
    s_smooth_upto(sys.s.primes, 0, ZZ(1), cap, units);
    std::sort(units.begin(), units.end());

    std::vector<ReducedRational> hits;
    for (const ZZ& u : units) {
        for (const ZZ& v : units) {
            if (u == v) continue;  // |r| = 1 is never ergodic
            if (gcd_z(u, v) != 1) continue;
            for (int sign = 0; sign < 2; ++sign) {
                ZZ num = sign ? ZZ(-u) : u;
                SolenoidSystem cand =
                    validate_system(chi_with_infinite_set(sys.s),
                                    ReducedRational(num, v),
                                    MapMode::automorphism);
                bool match = true;
                for (long n = 1; n <= N && match; ++n)
                    if (fixed_points(cand, n) != target[n - 1]) match = false;
                if (match) hits.push_back(cand.r);
            }
        }
    }
    std::sort(hits.begin(), hits.end(),
              [](const ReducedRational& x, const ReducedRational& y) {
                  return x.value() < y.value();
              });
    return hits;
}

std::vector<BoundaryPoint> boundary_profile(const SolenoidSystem& sys,
                                            const std::vector<double>& radii,
                                            const std::vector<double>& angles,
                                            long N)
{
    if (sys.s.kind != PrimeSet::Kind::finite)
        throw std::domain_error("boundary_profile requires a finite prime set");
    double big = to_double(entropy_argument(sys));
    for (double r : radii)
        if (r < 0 || r * big > 1 + 1e-9)
            throw std::domain_error(
                "boundary_profile radius outside the disc of convergence");

    std::vector<double> logF(N + 1, 0.0);
    for (long n = 1; n <= N; ++n) logF[n] = log_fixed_points(sys, n);

    std::vector<BoundaryPoint> table;
    table.reserve(radii.size() * angles.size());
    const double two_pi = 2.0 * std::acos(-1.0);
    for (double r : radii) {
        double logr = std::log(r);
        for (double ang : angles) {
            double re = 0, im = 0;
            for (long n = 1; n <= N; ++n) {
                double mag = std::exp(logF[n] + n * logr) / (double)n;
                re += mag * std::cos(two_pi * ang * n);
                im += mag * std::sin(two_pi * ang * n);
            }
            table.push_back({r, ang, re, im, std::hypot(re, im)});
        }
    }
    return table;
}

} // namespace solenoid
