#pragma once

#include <iosfwd>

namespace logitlab::cli {

/// Parses argv, runs one subcommand and returns the process exit code:
/// 0 on success, 1 on usage or input errors, 2 when a budget or a model
/// hypothesis rules the request out. Data goes to `out` (or the --output
/// file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace logitlab::cli
