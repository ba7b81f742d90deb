#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dvfactor::cli {

namespace exit_code {
inline constexpr int ok = 0;
/// verify: some verdict failed its oracle check or specialization evidence.
inline constexpr int validation_failed = 1;
/// Bad flags, parse errors, parameter violations, valuation/coefficient mismatch.
inline constexpr int usage = 2;
/// The factorization oracle hit one of its limits.
inline constexpr int resource = 3;
}  // namespace exit_code

/// Full command-line entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dvfactor::cli
