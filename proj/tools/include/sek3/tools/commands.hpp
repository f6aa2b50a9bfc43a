#pragma once

// Command implementations behind the sek3 executable. Each returns the
// process exit code and writes diagnostics to err, so tests can drive them
// without spawning a process.
//
// Velocity log, one JSON object per line:
//   {"t": 0.5, "omega": [wx, wy, wz], "nu": [[x, y, z], ...K], "frame": "left"}
// Record i holds its velocity over (t_{i-1}, t_i], with t_0 = 0.
//
// Registration points, one block per line:  {"points": [[x, y, z], ...K]}
// Registration observations, one per line:
//   {"block": b, "slot": m, "target": [x, y, z], "weight": w}   (weight optional)

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace sek3::tools {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsageOrParse = 2,
  kDimensionMismatch = 3,
  kRankDeficient = 4,
  kNonDecreasingCost = 5,
  kRuntimeFailure = 6,
};

struct DeadReckonOptions {
  std::string input;
  int k = 2;
  double dt = 0.01;
  /// Empty writes the CSV to the output stream.
  std::string output;
  /// GroupElement JSON file for the state at t = 0; identity when absent.
  std::optional<std::string> initial;
};

struct RegisterOptions {
  std::string points;
  std::string observations;
  int k = 1;
  int max_iters = 50;
  double tol = 1e-10;
  std::optional<std::string> initial;
};

struct VerifyOptions {
  int k = 2;
  int trials = 100;
  std::uint64_t seed = 1;
};

int cmd_deadreckon(const DeadReckonOptions& opts, std::ostream& out, std::ostream& err);
int cmd_register(const RegisterOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace sek3::tools
