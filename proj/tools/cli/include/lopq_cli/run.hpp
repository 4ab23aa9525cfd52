#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "lopq/json_io.hpp"
#include "lopq_cli/config.hpp"

namespace lopq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitIrregular = 2;

struct JobResult {
  int exit_code = kExitOk;
  Json report;
};

/// Runs one job. Contract violations escape as exceptions.
JobResult execute(const JobConfig& config);

/// Runs the job and writes the report in the configured format. Any
/// exception becomes a single "error: ..." line on `err` and exit 1.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

/// Parses command-line arguments (args[0] is the program name) and runs.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses arguments into a validated JobConfig. Throws ConfigError.
/// Returns false when only help was requested (printed to `out`).
bool parse_args(const std::vector<std::string>& args, JobConfig& config, std::ostream& out);

/// Renders a report as aligned tables.
void render_table(const Json& report, std::ostream& out);

}  // namespace lopq::cli
