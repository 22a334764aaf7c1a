#pragma once

#include <string>
#include <vector>

#include "report.hpp"
#include "sally/conjectures.hpp"

namespace sally::cli {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Exit codes: 0 success, 1 a verification mismatch, 2 a usage error.
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

/// Runs the command line `args` (program name excluded). Files named by
/// --out are written; everything else is captured in the result.
CliResult run_cli(const std::vector<std::string>& args);

/// Conjecture reports as the CSV rows used by `scan --format csv`.
Document scan_document(const std::vector<ConjectureReport>& reports);

}  // namespace sally::cli
