#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "toricres/error.hpp"
#include "toricres/json_io.hpp"

namespace toricres::job {

using io::json;

enum class Mode { Default, Schedule, Refinement };

std::string_view to_string(Mode mode);

struct JobSpec {
  json raw;
  DualComplex complex;
  Integer r = 1;
  Mode mode = Mode::Default;
  std::vector<Label> schedule;
  json refinement;
  std::vector<std::string> commands;
  std::optional<std::uint64_t> seed;
  /// {"rows": [vertex refs], "columns": [[vertex refs]], "matrix": [[int]]}
  std::optional<json> intersection_override;
};

/// Throws InvalidInput (with the offending key) on malformed jobs.
JobSpec parse_job(const json& j);

struct Options {
  bool timing = false;
};

struct Outcome {
  json report;
  int exit_code = 0;
};

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 2;
constexpr int kExitInput = 3;
constexpr int kExitEngine = 4;

int exit_code_for(ErrorCode code);

/// Hex SHA-256 of the canonical serialization.
std::string input_hash(const json& j);

json engine_json();

struct Resolved {
  Refinement refinement;
  json resolution;  // null in refinement mode
};

/// Runs the selected mode. Throws NotTerminal when a schedule stops short.
Resolved obtain_refinement(const JobSpec& job);

/// Applies the override columns on top of the computed tables.
void apply_intersection_override(const Refinement& ref, const json& override,
                                 ObstructionTables& tables);

Outcome cmd_resolve(const JobSpec& job, const Options& options = {});
Outcome cmd_verify(const JobSpec& job, const Options& options = {});

/// Parses `raw` and runs `command`; errors become a structured report with
/// exit code 3 (input) or 4 (engine).
Outcome run_guarded(const std::string& command, const json& raw,
                    const std::function<Outcome(const JobSpec&)>& body);

}  // namespace toricres::job
