#pragma once

#include <iosfwd>

namespace biquad {

// Full command dispatch; returns the process exit code.  Streams are
// injectable so tests can capture output.  Exit codes: 0 success, 1
// malformed input, 2 domain precondition violation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace biquad
