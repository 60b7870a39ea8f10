#pragma once

// Command-line driver: describe, classalg, points, idempotents, chartable,
// irrep, split-check, decompose and verify.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace centerpoint {

enum class OutputFormat { Json, Table };

struct RunConfig {
  std::string command;
  /// Positional argument: group file, or tensor file for decompose.
  std::string input;
  std::string builtin;
  /// Group file, or a builtin name when no such file exists.
  std::string group;
  /// Empty means Q with automatic escalation.
  std::string field;
  std::uint64_t seed = 0;
  std::size_t budget = 10000;
  OutputFormat format = OutputFormat::Json;
  std::string out;
  std::optional<std::size_t> component;
};

enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitVerificationFailure = 2 };

/// Runs one command. Output goes to `out` (or the --out file), diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace centerpoint
