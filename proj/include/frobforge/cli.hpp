#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "frobforge/taskfile.hpp"

namespace frobforge::cli {

inline constexpr const char* kSchema = "frobforge/1";
inline constexpr const char* kTool = "frobforge";
inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitUndecided = 2,
  kExitCounterexample = 3,
  kExitInternal = 4,
};

struct Options {
  std::string verb;
  std::optional<std::string> input;
  std::optional<std::string> json_out;
  std::uint64_t seed = 0;
  unsigned max_e = 6;
  unsigned window = 2;
  unsigned max_t = 3;
  std::int64_t degree_cap = 40;
  std::optional<std::int64_t> budget_ms;
  std::optional<std::string> theorem;
};

struct Outcome {
  int exit_code = kExitOk;
  nlohmann::json report;
  /// Human-readable lines, one per task.
  std::string summary;
};

/// Runs the file's `task <verb>` blocks, or the verb on every declared ideal
/// (ring for ring verbs) when the file has none.
Outcome run_command(const Options& options, const TaskFile& file);

/// Worst task status in the report: internal error, then usage, then
/// counterexample, then undecided.
int exit_code_for(const nlohmann::json& report);

/// Canonical text: sorted keys, integers only, trailing newline.
std::string emit_report(const nlohmann::json& report);

/// Drops every timing field, for determinism comparisons.
nlohmann::json strip_timings(nlohmann::json report);

/// Full command line (args[0] is the program name).
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobforge::cli
