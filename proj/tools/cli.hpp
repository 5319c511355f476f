#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

namespace ccodes::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInfeasible = 2,
  kGuard = 3,
  kMismatch = 4,
};

/// Runs the command line (args[0] is the program name) writing results to
/// out and diagnostics to err. Returns the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

struct DemoOptions {
  std::uint32_t p = 7;
  std::optional<std::uint32_t> alpha;
};

/// Reproduces the worked three-message, seven-symbol example step by step.
int run_demo(const DemoOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace ccodes::cli
