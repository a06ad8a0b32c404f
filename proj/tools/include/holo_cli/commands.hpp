#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holo_cli/session.hpp"

namespace holo::cli {

struct CommandOptions {
  std::optional<int> K;
  std::optional<std::uint64_t> seed;
  int trials = 100;
  int degree = 3;
  int size = 4;
  int diagonal = 1;
  std::string dump;
  std::string load;
};

struct CommandResult {
  std::string output;
  int exit_code; // 0 success, 1 verification failure, 2 usage error
};

std::string usage();

/// args[0] is the command name; the remaining arguments are joined by
/// spaces where a word or expression is expected.
CommandResult run_command(const Session &session, const std::vector<std::string> &args,
                          const CommandOptions &opt);

} // namespace holo::cli
