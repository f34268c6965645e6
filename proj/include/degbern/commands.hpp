#pragma once

/**
 * @file commands.hpp
 * @brief The degbern command line, callable in-process.
 *
 * Subcommands: b, a, stirling, classical, verify. Each produces one document
 * (JSON, CSV or LaTeX) whose bytes depend only on the flags, never on the
 * thread count.
 *
 * Exit codes: 0 success (for verify: every report passed), 1 some report
 * failed, 2 bad flags or an argument outside a route's domain, 3 internal
 * inconsistency.
 */

#include <string>
#include <vector>

namespace degbern {

struct CommandOutput {
  std::string document;     ///< goes to stdout
  std::string diagnostics;  ///< goes to stderr
  int exit_code = 0;
};

/// `args` excludes the program name.
CommandOutput run_cli(const std::vector<std::string>& args);

}  // namespace degbern
