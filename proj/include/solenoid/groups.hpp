#pragma once

#include <string>
#include <vector>

#include "solenoid/numbers.hpp"

namespace solenoid {

struct GroupWitness {
    bool found = false;
    long order = 0;
    std::string group;   // e.g. "Z/4 x Z/2 x Z/3"
    std::string action;  // per-prime matrices of the automorphism
};

/// Exhaustive search over abelian groups of order up to M (one partition
/// of the exponent per prime) and their automorphisms for one whose
/// fixed-point counts repeat the given pattern: F(n) = pattern[(n-1) mod P].
/// Returns the first witness in enumeration order, or found = false.
/// M > 64 or an enumeration beyond the internal work budget raises a
/// capability error.
GroupWitness group_realizable_bruteforce(const std::vector<ZZ>& pattern,
                                         long M);

} // namespace solenoid
