#pragma once

#include <iosfwd>

namespace pizza {

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int usage = 1;
inline constexpr int domain = 2;
inline constexpr int solver = 3;  ///< no root, tolerance unmet, or a failed verify check
}  // namespace exit_code

/// Subcommands: areas, residual, solve, sweep, render, verify.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pizza
