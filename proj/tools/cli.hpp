#pragma once

#include <iosfwd>

namespace morpheq::cli {

/// Runs one subcommand. JSON goes to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 on bad input, 2 when a checked theorem fails.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace morpheq::cli
