#pragma once

#include <ostream>

namespace fuzzyces::cli {

/// Parses arguments, runs one subcommand and writes its report to `out` (or
/// to --out). Diagnostics go to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fuzzyces::cli
