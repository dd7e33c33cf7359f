#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "report.hpp"

namespace tiltcara::cli {

enum ExitCode : int { kPass = 0, kAssertionFailure = 1, kUsageError = 2, kNonConvergence = 3 };

struct Options {
  std::vector<double> lambdas;
  std::vector<double> radii;
  std::size_t order = 64;
  std::uint64_t seed = 42;
  std::size_t seeds = 20;
  double tol = 1e-5;
  std::size_t lattice = 512;
  /// Scales every certified bound; 1 leaves them untouched.
  double fault_scale = 1.0;
  std::string bound;
};

/// Closed-form bound table, one row per (lambda, r).
ReportRecord cmd_bounds(const Options& o);
/// Property and sharpness suite; pass is false when any check fails.
ReportRecord cmd_verify(const Options& o);
/// Robertson radius per lambda.
ReportRecord cmd_radius(const Options& o);
/// Sharpness certificate of one registered bound.
ReportRecord cmd_scan(const Options& o);

/// Parses argv, runs the subcommand and writes the report to `out` (or the
/// --out file). Diagnostics go to `err`. Returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tiltcara::cli
