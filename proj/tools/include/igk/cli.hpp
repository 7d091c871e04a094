#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace igk::cli {

/// Everything a run needs after flag parsing. Empty strings mean "not given".
struct RunConfig {
  std::string command;
  std::string example;  // paper-example name
  std::string model;    // builtin:NAME or a model JSON path
  std::string statistic;
  std::string kernel;
  std::string measure;
  std::vector<std::string> xi;       // comma or semicolon separated values
  std::vector<std::string> xi_grid;  // a:b:n, one per parameter coordinate
  std::string k;                     // comma separated; "inf" allowed where it makes sense
  std::size_t order = 2;
  std::size_t grid_points = 0;
  std::size_t s_cells = 200;
  std::size_t t_cells = 100;
  double dom_tol = 1e-10;
  std::optional<double> tol;
  std::optional<double> cross_check_k;
  std::size_t random = 0;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string output;
};

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitContract = 3;
inline constexpr int kExitIo = 4;

/// Runs a validated configuration and returns the rendered report.
/// Throws igk::Error subclasses.
std::string execute(const RunConfig& config);

/// Full front end: parses argv, runs, writes the report to `out` (or the
/// --output file) and diagnostics to `err`. Returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace igk::cli
