#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "solenoid/primeset.hpp"
#include "solenoid/rational.hpp"

namespace solenoid {

/// A value in N union {infinity}.
struct Height {
    long k = 0;
    bool inf = false;

    static Height finite(long v) { return Height{v, false}; }
    static Height infinity() { return Height{0, true}; }
};

inline bool operator==(const Height& x, const Height& y)
{
    return x.inf == y.inf && (x.inf || x.k == y.k);
}
inline bool operator!=(const Height& x, const Height& y) { return !(x == y); }

std::string format_height(const Height& h);

/// Eventually-constant height sequence (k_p): a default height plus finitely
/// many exceptional primes.  Canonical form keeps only exceptions that differ
/// from the default.  Non-eventually-constant sequences are not representable.
struct CharacteristicSequence {
    Height default_height;
    std::vector<std::pair<ZZ, Height>> exceptions; // sorted by prime

    CharacteristicSequence() = default;
    CharacteristicSequence(Height def, std::vector<std::pair<ZZ, Height>> exc);

    Height at(const ZZ& p) const;
};

bool operator==(const CharacteristicSequence& x, const CharacteristicSequence& y);

/// Type equality: the sequences agree at all but finitely many primes and
/// every disagreement is finite-vs-finite.  With this representation that
/// means equal defaults and no finite-vs-infinite exception mismatch.
bool same_type(const CharacteristicSequence& c1, const CharacteristicSequence& c2);

/// Membership of q = a/b in the subgroup with heights (k_p):
/// v_p(b) <= k_p for every prime p dividing b.
bool contains(const CharacteristicSequence& c, const QQ& q);

/// The primes with k_p infinite, as a finite or cofinite PrimeSet.
PrimeSet infinite_height_set(const CharacteristicSequence& c);

/// Text form `default=<int|inf>; p1:k1, p2:k2, ...`; the exception list may
/// be empty ("default=0;").
CharacteristicSequence parse_characteristic(const std::string& text);
std::string format_characteristic(const CharacteristicSequence& c);

/// Seeded generator of canonical sequences: exceptions drawn at primes below
/// the bound with heights in {0..4, infinity}.  This only samples the
/// eventually-constant sequences, an approximation to a uniformly random
/// subgroup of the rationals.
CharacteristicSequence random_characteristic(uint64_t seed, unsigned long prime_bound);

enum class MapMode { automorphism, endomorphism };

/// A characteristic sequence together with a compatible map x -> r x.
struct SolenoidSystem {
    CharacteristicSequence chi;
    ReducedRational r;
    MapMode mode;
    PrimeSet s; // cached infinite_height_set(chi)
};

/// Checks the compatibility rule and returns the validated system:
/// automorphism mode needs k_p infinite at every prime of num*den,
/// endomorphism mode only at primes of den.  Also requires |r| != 0, 1.
/// Violations raise std::domain_error naming the offending prime.
SolenoidSystem validate_system(const CharacteristicSequence& c, const ReducedRational& r,
                               MapMode mode);

/// Convenience builders for the common cases: heights all zero except
/// infinity on the given finite set, or all infinity except zero on the
/// excluded set.
CharacteristicSequence chi_with_infinite_set(const PrimeSet& s);

} // namespace solenoid
