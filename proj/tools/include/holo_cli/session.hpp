#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "holo/evaluation.hpp"
#include "holo/holonomy.hpp"

namespace holo::cli {

struct Session {
  int m = 3;
  int K = 6;
  std::uint64_t seed = 1;
  std::optional<PeriodSpec> periods;
  std::optional<OrbitSpec> orbit;

  bool operator==(const Session &) const = default;

  /// Periods with every unassigned pair set to zero (all zero when the
  /// session has no [periods] section).
  PeriodSpec filled_periods() const;
};

/// Sections [config] (m, K, seed), [periods] (`M[j][d i] = germ`) and
/// [orbit] (`O[i] = expr, expr`); `#` starts a comment. Throws ParseError.
Session parse_session(const std::string &text);
std::string render_session(const Session &s);
Session load_session(const std::string &path);

/// Holonomy cache file: `K = n` followed by `H[expr][j] = diffpoly` lines
/// for the nonzero components of every cached expression.
std::string render_cache(const UniversalHolonomy &engine);
void load_cache(const std::string &text, UniversalHolonomy &engine);

} // namespace holo::cli
