#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace siegel::cli {

/// Exit codes: a requested check failed (the computation itself was valid).
constexpr int kCheckFailed = 1;
/// Malformed input, bad flags or unsupported parameters.
constexpr int kUsageError = 2;

/// Runs one subcommand. args excludes the program name. JSON goes to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace siegel::cli
