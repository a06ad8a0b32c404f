#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holo/diffpoly.hpp"
#include "holo/germ.hpp"
#include "holo/holonomy.hpp"
#include "holo/word.hpp"

namespace holo {

/// Assignment of the basic Melnikov germs M_j(d_i) for 1 <= i <= m and
/// 1 <= j <= K.
class PeriodSpec {
public:
  PeriodSpec() = default;
  PeriodSpec(int generators, int truncation);

  int generators() const { return generators_; }
  int truncation() const { return truncation_; }

  /// Throws on out-of-range indices.
  void assign(int generator, int order, Germ value);
  bool has(int generator, int order) const;
  /// Throws std::out_of_range naming the variable when unassigned.
  const Germ &at(int generator, int order) const;
  const std::map<std::pair<int, int>, Germ> &assignments() const { return values_; }

  /// True when every (i, j) in range is assigned.
  bool is_total() const;
  /// Assigns zero to every unassigned pair.
  void fill_zero();

  bool operator==(const PeriodSpec &) const = default;

private:
  int generators_ = 0;
  int truncation_ = 0;
  std::map<std::pair<int, int>, Germ> values_; // (generator, order)
};

/// Finite generator lists for the orbit levels O_1, O_2, ...
class OrbitSpec {
public:
  OrbitSpec() = default;

  /// Throws std::invalid_argument if an expression has weight < level.
  void set_level(int level, std::vector<CommutatorExpr> generators);
  int depth() const { return static_cast<int>(levels_.size()); }
  /// Generators of O_level (empty when unset).
  const std::vector<CommutatorExpr> &level(int level) const;

  bool operator==(const OrbitSpec &) const = default;

private:
  std::vector<std::vector<CommutatorExpr>> levels_;
};

/// ev: A -> germs, a differential-algebra homomorphism determined by the
/// spec. Throws std::out_of_range naming an uncovered variable, and
/// std::domain_error when a jet is too short for a derivative order.
Germ evaluate_poly(const DiffPoly &p, const PeriodSpec &spec);

/// Componentwise evaluation of a universal group element.
GermElt evaluate_holonomy(const UniversalElt &f, const PeriodSpec &spec);

/// Holonomy of a word built directly in the germ group from the spec,
/// folding letters under the anti-homomorphism convention.
GermElt germ_holonomy(const Word &w, const PeriodSpec &spec);
GermElt germ_generator_holonomy(int generator, const PeriodSpec &spec);

struct TableEntry {
  int order;        // j
  int level;        // i
  std::string expr; // orbit generator
  Germ value;
  ZeroVerdict verdict;
};

struct TableCell {
  int order;
  int level;
  std::vector<TableEntry> entries;
  bool vanishes;
  /// Entries on the diagonal order - level = d are only meaningful when
  /// every cell on diagonals < d vanishes.
  bool well_defined;
};

struct MelnikovTable {
  int max_order;
  int depth;
  int truncation;
  std::vector<TableCell> cells; // row-major, order 1..J, level 1..depth

  const TableCell &cell(int order, int level) const;
  /// Aligned text rendering.
  std::string to_text() const;
  /// Rows `(j, i, expr, verdict)`.
  std::string to_rows() const;
};

/// Evaluated M_j on each orbit generator, for j <= max_order <= K.
MelnikovTable melnikov_table(const PeriodSpec &spec, const OrbitSpec &orbit, int max_order,
                             UniversalHolonomy *engine = nullptr);

struct OrbitLengthResult {
  int length;
  /// Present when some vanishing was certified only to jet precision.
  std::optional<int> precision;
  int truncation;
};

/// Smallest l such that the evaluated M_j vanishes on every listed
/// generator of O_i for all i > l.
OrbitLengthResult orbit_length(int order, const PeriodSpec &spec, const OrbitSpec &orbit,
                               UniversalHolonomy *engine = nullptr);

struct JetWitness {
  /// For each (generator, order): derivative values I^(alpha)(0) = x_alpha.
  std::map<std::pair<int, int>, std::vector<Rational>> values;
  Scalar value_at_zero;
  int trial;

  std::string to_string() const;
};

/// Random rational jet assignments; returns the first whose evaluation of
/// the signed sum of `summands` is nonzero at t = 0.
std::optional<JetWitness> random_jet_witness(const std::vector<DiffPoly> &summands,
                                             int trials, std::uint64_t seed);
std::optional<JetWitness> random_jet_witness(const DiffPoly &p, int trials, std::uint64_t seed);

} // namespace holo
