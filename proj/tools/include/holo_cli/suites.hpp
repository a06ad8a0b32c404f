#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "holo/holonomy.hpp"
#include "holo/word.hpp"

namespace holo::cli {

struct Check {
  std::string name;
  bool pass;
  std::string detail;

  /// `CHECK <name>: PASS|FAIL — <detail>`
  std::string line() const;
};

struct SuiteOptions {
  int K = 6;
  int trials = 100;
  std::uint64_t seed = 1;
  int degree = 3;
  int size = 4; // maximum weight or word length, per suite
};

/// Names accepted by `verify`.
const std::vector<std::string> &suite_names();
/// Throws std::invalid_argument for an unknown suite; "all" runs every one.
std::vector<Check> run_suite(const std::string &name, const SuiteOptions &opt);

/// All left-normed brackets over d1..d_m up to weight 4, plus brackets of
/// two distinct weight-2 commutators.
std::vector<CommutatorExpr> expression_corpus(int generators, int max_weight);
/// Random tree of commutators, products and inverses with weight <= max_weight
/// (and >= 1).
CommutatorExpr random_expression(std::mt19937_64 &rng, int generators, int max_weight);
Word random_word(std::mt19937_64 &rng, int generators, int max_length);
/// Random universal element with tau >= tau_min: component j uses only
/// variables of Melnikov index <= j - tau_min + 1.
UniversalElt random_universal(std::mt19937_64 &rng, int truncation, int tau_min,
                              int generators = 2);
/// Fixed 20-polynomial corpus for the nonvanishing-witness suite.
std::vector<DiffPoly> witness_corpus();

} // namespace holo::cli
