#pragma once

#include <string>

#include "solenoid/numbers.hpp"

namespace solenoid {

/// The map parameter r = a/b in lowest terms, den >= 1.
struct ReducedRational {
    ZZ num;
    ZZ den;

    ReducedRational(const ZZ& a, const ZZ& b);
    explicit ReducedRational(const QQ& q);

    QQ value() const { return QQ(num) / QQ(den); }

    /// |r| > 1 or 0 < |r| < 1; excludes 0 and +-1 (the ergodicity guard).
    bool ergodic() const { return num != 0 && abs_z(num) != den; }
};

inline bool operator==(const ReducedRational& x, const ReducedRational& y)
{
    return x.num == y.num && x.den == y.den;
}

/// Accepts "a" or "a/b" in decimal.
ReducedRational parse_ratio(const std::string& text);

std::string format_ratio(const ReducedRational& r);

} // namespace solenoid
