#pragma once

#include <string>

#include "linarg/config.hpp"

namespace linarg {

enum class OutputFormat { Csv, Json };

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 config rejected, 2 numeric failure
  std::string summary;  // human-readable, printed to stdout
};

// simulate: trajectory artifact (CSV or JSON) plus an envelope summary.
RunResult run_simulate(const RunConfig& config, const std::string& out_path,
                       OutputFormat format);

// reduce: ReductionResult JSON (root status is data, not a failure) plus
// the split-consistency deviation over the configured initial sets.
RunResult run_reduce(const RunConfig& config, const std::string& out_path);

// check: StabilityReport table to stdout, JSON artifact.
RunResult run_check(const RunConfig& config, const std::string& out_path);

// scan: BifurcationScan CSV.
RunResult run_scan(const RunConfig& config, const std::string& out_path);

// axioms: AxiomReport table to stdout, JSON artifact.
RunResult run_axioms(const RunConfig& config, const std::string& out_path);

// Parses the config file, dispatches the subcommand, prints the summary to
// stdout and diagnostics to stderr, and returns the process exit code.
int run_command(const std::string& subcommand, const std::string& config_path,
                const std::string& out_path, const std::string& format,
                const std::string& seed_override);

}  // namespace linarg
