#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace solenoid {
namespace cli {

/// Entry point for the solenoid-lab tool.  args excludes the program name.
/// Returns the process exit code: 0 success, 2 domain error, 3 capability
/// error, 4 invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cli
} // namespace solenoid
