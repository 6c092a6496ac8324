#pragma once

#include <string>
#include <vector>

#include "solenoid/matrix.hpp"
#include "solenoid/primeset.hpp"

namespace solenoid {

/// Basis of {Q : QA = BQ} as a free abelian group, rows Hermite-reduced.
struct IntertwinerLattice {
    IntMat A, B;
    std::vector<IntMat> basis;
    long rank = 0;
};

IntertwinerLattice intertwiner_lattice(const IntMat& A, const IntMat& B);

/// a x^2 + b xy + c y^2.
struct QuadraticForm {
    ZZ a, b, c;

    ZZ eval(const ZZ& x, const ZZ& y) const
    {
        return ZZ(a * x * x + b * x * y + c * y * y);
    }
};

/// det(x Q1 + y Q2) for the canonical basis of a rank-2 lattice of 2x2
/// matrices; any other shape is a capability error.
QuadraticForm determinant_form(const IntertwinerLattice& lat);

struct ConjugacyDecision {
    enum class Status { conjugate, obstructed, unknown };

    Status status = Status::unknown;
    IntMat witness;    // conjugate: QA = BQ with det a unit
    ZZ det_value;      // conjugate: det of the witness
    ZZ modulus;        // obstructed: the prime q (0 when not even Q-conjugate)
    std::string reason;
    long bound = 0;    // unknown: the exhausted coordinate bound
};

/// Decides conjugacy of A and B over Z[1/p : p in allowed] by searching
/// lattice coordinates up to the bound for a witness whose determinant is a
/// unit, falling back to a local obstruction of the determinant form modulo
/// q and q^2 for primes q <= 50 outside the allowed set.
ConjugacyDecision conjugate_over_ring(const IntMat& A, const IntMat& B,
                                      const PrimeSet& allowed, long bound);

struct PosetLevel {
    std::string ring;
    std::vector<std::vector<long>> classes; // partition of matrix indices
    bool has_unknown = false;               // some pair was left undecided
};

/// Conjugacy classes per localization level, bottom Z up to Q, with the
/// refinement map between consecutive levels.
struct ConjugacyPoset {
    std::vector<PosetLevel> levels;
    std::vector<std::vector<long>> parent; // parent[i][j] = class at level i+1
};

ConjugacyPoset poset_build(const std::vector<IntMat>& mats,
                           const std::vector<ZZ>& prime_sequence, long bound);

std::string poset_dot(const ConjugacyPoset& poset);

} // namespace solenoid
