#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "holo/evaluation.hpp"
#include "holo/germ.hpp"
#include "holo/holonomy.hpp"

namespace holo {

/// Universal holonomy components computed at the smallest sufficient
/// truncation (component j only needs eps^j), memoized across calls.
class HolonomyCache {
public:
  const DiffPoly &component(const CommutatorExpr &e, int order);
  UniversalHolonomy &engine(int truncation);

private:
  std::map<int, UniversalHolonomy> engines_;
};

/// Random polynomial of exact degree `degree` with integer coefficients in
/// [-9, 9].
Germ random_polynomial(std::mt19937_64 &rng, int degree);
/// Random nonzero rational with small numerator and denominator.
Rational random_rational(std::mt19937_64 &rng);

/// Period data after a vanishing condition has been imposed.
struct Stage {
  std::string condition; // empty for the unconstrained stage
  PeriodSpec spec;
};

struct ExampleTemplate {
  std::string name;
  int generators;
  /// Largest diagonal with induced period data; 0 for all diagonals.
  int max_diagonal;
  /// Generators of O_1..O_depth.
  std::function<OrbitSpec(int depth)> orbit;
  /// Stage 0 is unconstrained; stage k imposes the k-th vanishing condition.
  std::function<std::vector<Stage>(int truncation, std::mt19937_64 &rng, int degree)> stages;
  /// Expected universal Noetherianity index n_r.
  std::function<int(int r)> expected_index;
};

ExampleTemplate generic_template(int generators = 3);
/// d1, d2 vanishing cycles, d3 = gamma.
ExampleTemplate triangle_template();
/// d1..d(lines-1) vanishing cycles, d(lines) = gamma.
ExampleTemplate lines_template(int lines = 4);
/// d1..d3 vanishing cycles, d4 = gamma.
ExampleTemplate square_template();
/// generic | triangle | lines | square; throws std::invalid_argument.
ExampleTemplate template_by_name(const std::string &name);

struct DiagonalEntry {
  std::string expr;
  Germ value;
  ZeroVerdict verdict;
};

struct DiagonalRow {
  int row;    // Melnikov index j
  int level;  // orbit level j - r + 1
  int stage;  // conditions in force when the row was checked
  std::vector<DiagonalEntry> before; // entries under the previous stage
  std::optional<DiagonalEntry> witness;
  std::string condition; // condition imposed at this row, if any
  bool vanishes_after;
};

struct StabilizationReport {
  std::string name;
  int diagonal;
  int truncation;
  int index;
  int expected;
  bool confirmed;
  std::vector<DiagonalRow> rows;
  std::string failure;

  std::string to_string() const;
};

/// Walks the r-th diagonal up to row K, imposing the template's vanishing
/// conditions whenever an entry is nonzero. Diagonals r >= 2 use the
/// template's periods for the induced deformation with the index shifted
/// by r - 1.
StabilizationReport diagonal_stabilization(const ExampleTemplate &t, int r, int truncation,
                                           std::uint64_t seed, int degree = 3,
                                           HolonomyCache *cache = nullptr);

/// M_2 on [d1,d2] with int_d1 = L(p1 - p2), int_d2 = L p2.
Germ triangle_m2(const Germ &p1, const Germ &p2, HolonomyCache *cache = nullptr);

/// M_2 on [di,dj] with int_dk = L p_k (all orientations positive).
Germ lines_m2(int i, int j, const std::vector<Germ> &ps, HolonomyCache *cache = nullptr);

/// v_j = [d1 d2, [d2, ..., [d2, d2 d3]]] with j - 2 inner d2's.
CommutatorExpr square_orbit_generator(int j);

/// (p1, p2) with p2 = b (t - s), p1 = p2 + kappa (t - s)^a, so that
/// W(p2, p1) = b (a - 1) (p1 - p2).
std::pair<Germ, Germ> square_euler_family(const Rational &b, const Rational &kappa,
                                          const Rational &s, int a);

struct SquareChainReport {
  int truncation;
  Germ m2, m2_expected;
  bool m2_holds;
  Germ m3, m3_expected; // under p3 = mu (p1 - p2)
  bool m3_holds;
  /// Rows 4..K, checked only when W(p1 - p2, W(p2, p1)) = 0.
  bool tail_applicable;
  std::vector<std::pair<int, Germ>> tail;
  bool tail_holds;

  bool holds() const { return m2_holds && m3_holds && tail_holds; }
  std::string to_string() const;
};

SquareChainReport square_chain(const Germ &p1, const Germ &p2, const Germ &p3, const Scalar &mu,
                               int truncation = 6, HolonomyCache *cache = nullptr);

} // namespace holo
