#include "solenoid/mahler.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "solenoid/errors.hpp"
#include "solenoid/factor.hpp"
#include "solenoid/zeta.hpp"

namespace solenoid {

namespace {

using CLD = std::complex<long double>;

long double qq_to_ld(const QQ& q)
{
    return static_cast<long double>(q.get_num().get_d()) /
           static_cast<long double>(q.get_den().get_d());
}

double log_zz(const ZZ& n)
{
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 53)
        return std::log(std::fabs(mpz_get_d(n.get_mpz_t())));
    long e = 0;
    double d = mpz_get_d_2exp(&e, n.get_mpz_t());
    return std::log(std::fabs(d)) + e * std::log(2.0);
}

/// Value and derivative by one Horner pass.
std::pair<CLD, CLD> horner2(const std::vector<long double>& cf, const CLD& z)
{
    CLD v(cf.back(), 0.0L), dv(0.0L, 0.0L);
    for (long i = (long)cf.size() - 2; i >= 0; --i) {
        dv = dv * z + v;
        v = v * z + cf[i];
    }
    return {v, dv};
}

/// Roots of a squarefree monic rational polynomial: companion-matrix
/// eigenvalues polished by Newton steps in extended precision.  Squarefree
/// input keeps the roots simple, so the polish converges quadratically.
std::vector<CLD> squarefree_roots(const QPoly& g)
{
    long d = g.degree();
    std::vector<long double> cf(d + 1);
    for (long i = 0; i <= d; ++i) cf[i] = qq_to_ld(g.c[i] / g.lead());

    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
    for (long i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (long i = 0; i < d; ++i) comp(i, d - 1) = -(double)cf[i];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(comp);

    std::vector<CLD> roots;
    roots.reserve(d);
    for (long i = 0; i < d; ++i) {
        CLD z((long double)solver.eigenvalues()[i].real(),
              (long double)solver.eigenvalues()[i].imag());
        for (int it = 0; it < 80; ++it) {
            auto [v, dv] = horner2(cf, z);
            if (std::abs(dv) == 0.0L) break;
            CLD step = v / dv;
            z -= step;
            if (std::abs(step) <= 1e-18L * (1.0L + std::abs(z))) break;
        }
        roots.push_back(z);
    }
    return roots;
}

ZPoly monic_up(const ZPoly& f)
{
    return f.lead() < 0 ? -f : f;
}

/// Orbit of f under the measure-preserving symmetries, staying monic.
std::vector<ZPoly> symmetry_orbit(const ZPoly& f)
{
    std::vector<ZPoly> orbit{f};
    auto push = [&orbit](const ZPoly& p) {
        if (std::find(orbit.begin(), orbit.end(), p) == orbit.end())
            orbit.push_back(p);
    };
    for (size_t i = 0; i < orbit.size(); ++i) {
        ZPoly cur = orbit[i];
        push(monic_up(compose_neg(cur)));
        if (abs_z(cur.at0()) == 1) push(monic_up(reversal(cur)));
    }
    return orbit;
}

bool lex_less(const ZPoly& f, const ZPoly& g)
{
    return std::lexicographical_compare(f.c.begin(), f.c.end(), g.c.begin(),
                                        g.c.end());
}

} // namespace

EntropyRecord abramov_entropy(const ReducedRational& r)
{
    if (!r.ergodic())
        throw std::domain_error("abramov_entropy requires |r| outside {0, 1}");
    // The finite places contribute v_p(b) log p for p | b and the infinite
    // place contributes log+ (|a|/b); before collapsing to log max(|a|, b)
    // the finite part is recomposed and checked against b exactly.
    ZZ recomposed(1);
    for (const auto& [p, e] : factor(r.den)) recomposed *= pow_z(p, e);
    if (recomposed != r.den)
        throw invariant_violation(
            "local contributions fail to recompose the denominator");
    ZZ arg = abs_z(r.num) > r.den ? abs_z(r.num) : r.den;
    return EntropyRecord{log_zz(arg), arg};
}

double mahler_measure(const ZPoly& f)
{
    if (f.is_zero()) throw std::domain_error("mahler_measure of 0 is undefined");
    if (f.degree() == 0) return log_zz(f.c[0]);
    long double total = (long double)log_zz(f.lead());
    for (const auto& [g, mult] : squarefree_decomposition(to_qpoly(f))) {
        if (g.degree() == 0) continue;
        long double part = 0.0L;
        for (const CLD& z : squarefree_roots(g)) {
            long double m = std::abs(z);
            if (m > 1.0L) part += std::log(m);
        }
        total += (long double)mult * part;
    }
    return (double)total;
}

bool is_cyclotomic_product(const ZPoly& f)
{
    if (!f.monic())
        throw std::domain_error("is_cyclotomic_product requires a monic polynomial");
    // Method: for each squarefree factor g, every irreducible factor of g is
    // cyclotomic exactly when g divides x^L - 1 with L = lcm{m : phi(m) <=
    // deg g}; phi(m) >= sqrt(m/2) bounds the m to scan.  The divisibility
    // becomes x^L mod g == 1, decided by binary exponentiation over Z.
    for (const auto& [gq, mult] : squarefree_decomposition(to_qpoly(f))) {
        ZPoly g = clear_denominators(gq);
        long b = g.degree();
        if (b == 0) continue;
        ZZ L(1);
        for (long m = 1; m <= 2 * b * b + 4; ++m)
            if (euler_phi(m) <= b) L = lcm_z(L, ZZ(m));
        if (!(powmod_x(L, g) == ZPoly{1})) return false;
    }
    return true;
}

std::vector<LehmerHit> lehmer_scan(long max_degree, long max_height,
                                   double threshold)
{
    if (max_degree < 1 || max_height < 0)
        throw std::domain_error("lehmer_scan: bad degree or height bound");
    double budget = 0, layer = 1;
    for (long d = 1; d <= max_degree; ++d) {
        layer *= 2.0 * max_height + 1.0;
        budget += layer;
        if (budget > 1e7)
            throw capability_error("lehmer_scan: more than 10^7 candidates");
    }

    std::vector<LehmerHit> hits;
    for (long d = 1; d <= max_degree; ++d) {
        std::vector<long> digits(d, -max_height);
        bool done = false;
        while (!done) {
            std::vector<ZZ> cs(d + 1);
            for (long i = 0; i < d; ++i) cs[i] = ZZ(digits[i]);
            cs[d] = 1;
            ZPoly f(std::move(cs));
            bool canonical = true;
            for (const ZPoly& g : symmetry_orbit(f))
                if (lex_less(g, f)) { canonical = false; break; }
            if (canonical) {
                double est = mahler_measure(f);
                if (est < threshold) {
                    bool zero_measure = false;
                    if (est < 1e-4) {
                        // Strip roots at the origin, then decide m = 0
                        // exactly via the cyclotomic test.
                        size_t k = 0;
                        while (k < f.c.size() && f.c[k] == 0) ++k;
                        ZPoly core(std::vector<ZZ>(f.c.begin() + k, f.c.end()));
                        zero_measure = is_cyclotomic_product(core);
                    }
                    if (!zero_measure) hits.push_back(LehmerHit{f, est});
                }
            }
            long pos = 0;
            while (pos < d && digits[pos] == max_height) digits[pos++] = -max_height;
            if (pos == d) done = true;
            else ++digits[pos];
        }
    }
    std::sort(hits.begin(), hits.end(),
              [](const LehmerHit& x, const LehmerHit& y) {
                  if (x.measure != y.measure) return x.measure < y.measure;
                  if (x.poly.degree() != y.poly.degree())
                      return x.poly.degree() < y.poly.degree();
                  return lex_less(x.poly, y.poly);
              });
    return hits;
}

EntropyGrowthCheck toral_entropy_check(const IntMat& A, long N)
{
    if (N < 1) throw std::domain_error("toral_entropy_check requires N >= 1");
    double m = mahler_measure(char_poly(A));
    double growth = log_zz(toral_fixed_points(A, N)) / (double)N;
    return EntropyGrowthCheck{m, growth, std::fabs(m - growth)};
}

} // namespace solenoid
