#pragma once

#include <iosfwd>

namespace qhrep {

/// Full command-line entry point, parameterized over streams for testing.
/// Exit codes: 0 success / verification pass, 1 verification failure or
/// mathematical refusal, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qhrep
