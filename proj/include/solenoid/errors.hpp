#pragma once
#include <stdexcept>
#include <string>

namespace solenoid {

// Domain violations (bad arguments) use std::domain_error directly.

/// A requested computation exceeds a documented bound or cap.
struct capability_error : std::runtime_error {
    explicit capability_error(const std::string& m) : std::runtime_error(m) {}
};

/// An internal consistency check failed (bad system, bug, or failed reconstruction).
struct invariant_violation : std::runtime_error {
    explicit invariant_violation(const std::string& m) : std::runtime_error(m) {}
};

} // namespace solenoid
