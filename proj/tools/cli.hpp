#pragma once

#include <iosfwd>

namespace bohrlab {

/// Command-line entry point. Exit codes: 0 success, 1 a computed result
/// contradicts the closed-form registry, 2 invalid flags or parameters.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bohrlab
