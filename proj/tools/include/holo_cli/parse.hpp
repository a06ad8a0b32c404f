#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "holo/diffpoly.hpp"
#include "holo/germ.hpp"
#include "holo/word.hpp"

namespace holo::cli {

/// Syntax or semantic error at a 1-based line and column.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string &message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// Germ expressions over t, rationals, I, L with + - * / ^ and
/// `jet(expr, N)`. Division only by nonzero rational constants.
Germ parse_germ(const std::string &text, int line = 1, int column_offset = 0);

/// Differential polynomials over `m[j](di)'alpha` variables (a bare `'` is alpha = 1),
/// rationals, I, L.
DiffPoly parse_diffpoly(const std::string &text, int line = 1, int column_offset = 0);

/// Words and commutator expressions: `d1 d2^-1`, `[d1,[d1,d2]]`,
/// `(d1 d2)^-1`, `1` for the empty product.
CommutatorExpr parse_expr(const std::string &text, int line = 1, int column_offset = 0);

/// Splits at commas outside brackets and parentheses, returning each piece
/// with its starting column (0-based).
std::vector<std::pair<std::string, int>> split_top_level(const std::string &text);

} // namespace holo::cli
