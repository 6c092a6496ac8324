#pragma once

#include <string>
#include <vector>

#include "solenoid/numbers.hpp"

namespace solenoid {

/// Finite set of primes, or the complement of one.
struct PrimeSet {
    enum class Kind { finite, cofinite };

    Kind kind = Kind::finite;
    std::vector<ZZ> primes; // sorted, distinct; for cofinite these are the excluded primes

    static PrimeSet finite(std::vector<ZZ> ps);
    static PrimeSet cofinite(std::vector<ZZ> excluded);

    bool is_finite() const { return kind == Kind::finite; }
    bool contains(const ZZ& p) const;
    std::string to_string() const;
};

bool operator==(const PrimeSet& x, const PrimeSet& y);

/// Accepts a comma-separated prime list like "2,3,7" (whitespace ignored).
std::vector<ZZ> parse_prime_list(const std::string& text);

} // namespace solenoid
