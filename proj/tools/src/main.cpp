#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holo_cli/commands.hpp"
#include "holo_cli/parse.hpp"

int main(int argc, char **argv) {
  CLI::App app{"Exact universal holonomy workbench"};
  app.allow_extras(false);

  std::vector<std::string> command;
  std::string session_path;
  holo::cli::CommandOptions opt;
  int k = 0;
  std::uint64_t seed = 0;

  app.add_option("--session", session_path, "session file");
  auto *k_opt = app.add_option("--K", k, "truncation order");
  auto *seed_opt = app.add_option("--seed", seed, "random seed");
  app.add_option("--trials", opt.trials, "random trials");
  app.add_option("--degree", opt.degree, "polynomial degree for examples");
  app.add_option("--size", opt.size, "maximum weight or word length");
  app.add_option("--diagonal", opt.diagonal, "diagonal index for example");
  app.add_option("--dump", opt.dump, "write computed holonomies to a cache file");
  app.add_option("--load", opt.load, "preload holonomies from a cache file");

  // positionals bypass CLI11, whose container syntax would split "[d1,d2]"
  std::vector<std::string> flags;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a.rfind("--", 0) == 0 || a == "-h") {
      flags.push_back(a);
      if (a.find('=') == std::string::npos && a != "--help" && a != "-h" && i + 1 < argc)
        flags.push_back(argv[++i]);
    } else {
      command.push_back(a);
    }
  }
  std::reverse(flags.begin(), flags.end());

  try {
    app.parse(flags);
  } catch (const CLI::CallForHelp &e) {
    std::cout << app.help() << holo::cli::usage();
    return 0;
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n" << holo::cli::usage();
    return 2;
  }
  if (*k_opt)
    opt.K = k;
  if (*seed_opt)
    opt.seed = seed;

  holo::cli::Session session;
  if (!session_path.empty()) {
    try {
      session = holo::cli::load_session(session_path);
    } catch (const std::exception &e) {
      std::cerr << session_path << ": " << e.what() << "\n";
      return 2;
    }
  }
  auto result = holo::cli::run_command(session, command, opt);
  (result.exit_code == 2 ? std::cerr : std::cout) << result.output;
  return result.exit_code;
}
