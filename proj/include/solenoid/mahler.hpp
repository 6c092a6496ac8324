#pragma once

#include <vector>

#include "solenoid/matrix.hpp"
#include "solenoid/poly.hpp"
#include "solenoid/rational.hpp"

namespace solenoid {

struct EntropyRecord {
    double value = 0;
    ZZ exact_arg;
};

/// Entropy of x -> rx as a sum of local contributions log+ |r|_p over all
/// places; collapses to log max(|a|, b) and the collapse is re-verified in
/// exact arithmetic before the log is taken.
EntropyRecord abramov_entropy(const ReducedRational& r);

/// log|lead| + sum of log+ |root| over the complex roots, multiplicity
/// included.  Constant polynomials give log|c|.
double mahler_measure(const ZPoly& f);

/// Exact decision for a monic integer polynomial: is every irreducible
/// factor cyclotomic?  No floating point is involved.
bool is_cyclotomic_product(const ZPoly& f);

struct LehmerHit {
    ZPoly poly;
    double measure = 0;
};

/// Monic integer polynomials with degree in [1, max_degree], non-leading
/// coefficients bounded by max_height, and 0 < m(f) < threshold.  One
/// representative per orbit of f(x) -> +-x^d f(1/x), f(x) -> +-f(-x);
/// sorted by measure, then by coefficients.
std::vector<LehmerHit> lehmer_scan(long max_degree, long max_height,
                                   double threshold);

struct EntropyGrowthCheck {
    double mahler = 0;
    double growth = 0;
    double gap = 0;
};

/// Compares the Mahler measure of the characteristic polynomial with the
/// observed growth rate log(F(N))/N of the fixed-point counts.
EntropyGrowthCheck toral_entropy_check(const IntMat& A, long N);

} // namespace solenoid
