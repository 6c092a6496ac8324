#pragma once

#include <string>
#include <vector>

#include "solenoid/poly.hpp"

namespace solenoid {

/// Dense integer matrix, row-major.
struct IntMat {
    long rows = 0, cols = 0;
    std::vector<ZZ> a;

    IntMat() = default;
    IntMat(long r, long c) : rows(r), cols(c), a(r * c, ZZ(0)) {}
    static IntMat identity(long n);

    ZZ& at(long i, long j) { return a[i * cols + j]; }
    const ZZ& at(long i, long j) const { return a[i * cols + j]; }
    bool square() const { return rows == cols; }
};

bool operator==(const IntMat& x, const IntMat& y);
IntMat operator*(const IntMat& x, const IntMat& y);
IntMat operator+(const IntMat& x, const IntMat& y);
IntMat operator-(const IntMat& x, const IntMat& y);

IntMat transpose(const IntMat& m);
IntMat mat_pow(const IntMat& m, long n);
ZZ det(const IntMat& m);
/// Monic characteristic polynomial det(xI - A).
ZPoly char_poly(const IntMat& m);

/// Row Hermite form: returns H and a unimodular U with U*M = H; H is in
/// row-echelon form with positive pivots and reduced entries above pivots.
void hermite_with_transform(const IntMat& m, IntMat& h, IntMat& u);

/// Basis of the right kernel {x : M x = 0} as the rows of the returned
/// matrix, put into a canonical Hermite form (possibly with 0 rows removed).
IntMat integer_kernel(const IntMat& m);

/// Nontrivial invariant factors of xI - A over Q[x], ascending by
/// divisibility; two matrices are conjugate over Q iff these lists agree.
std::vector<QPoly> invariant_factors(const IntMat& a);

/// Accepts "[[2,1],[1,1]]" (whitespace ignored).
IntMat parse_matrix(const std::string& text);
std::string format_matrix(const IntMat& m);

} // namespace solenoid
