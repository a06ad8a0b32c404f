#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "holo/diffpoly.hpp"
#include "holo/group.hpp"
#include "holo/word.hpp"

namespace holo {

using UniversalElt = GroupElt<DiffPoly>;
using GermElt = GroupElt<Germ>;

/// P(d_i) = id + sum_{j<=K} eps^j m_j(d_i)
UniversalElt generator_holonomy(int generator, int truncation);

/// Folds a word under the anti-homomorphism P(uv) = P(v) o P(u), given the
/// images of the generators.
template <DifferentialRing R>
GroupElt<R> fold_word(const Word &w, int truncation,
                      const std::function<GroupElt<R>(int)> &generator_image) {
  std::map<int, GroupElt<R>> forward, backward;
  GroupElt<R> acc = GroupElt<R>::identity(truncation);
  for (const auto &l : w.letters()) {
    auto &cache = l.exponent > 0 ? forward : backward;
    auto it = cache.find(l.generator);
    if (it == cache.end()) {
      auto g = generator_image(l.generator);
      it = cache.emplace(l.generator, l.exponent > 0 ? g : inverse(g)).first;
    }
    acc = compose(it->second, acc);
  }
  return acc;
}

/// Universal holonomy with memoization of generator images and
/// subexpressions. Commutator expressions are evaluated structurally:
/// P([a,b]) = P(b)^-1 o P(a)^-1 o P(b) o P(a), which equals P of the
/// expanded word.
class UniversalHolonomy {
public:
  explicit UniversalHolonomy(int truncation);

  int truncation() const { return truncation_; }

  const UniversalElt &of_generator(int generator);
  UniversalElt of_word(const Word &w);
  const UniversalElt &of_expr(const CommutatorExpr &e);

  /// Preloads a cached value (used by the CLI cache loader).
  void insert(const std::string &key, UniversalElt value);
  const std::map<std::string, UniversalElt> &cache() const { return expr_cache_; }

private:
  int truncation_;
  std::map<int, UniversalElt> generators_;
  std::map<std::string, UniversalElt> expr_cache_;
};

UniversalElt universal_holonomy(const Word &w, int truncation);
UniversalElt universal_holonomy(const CommutatorExpr &e, int truncation);

/// tau(F) = min over nonzero components of (j - lambda(f_j) + 1);
/// kPlusInfinity for the identity. Exact for the truncated element.
int triangularity(const UniversalElt &f);

struct StructureRow {
  int order;  // j
  int length; // lambda(f_j)
  int bound;  // j - weight + 1
  bool holds;
};

struct StructureReport {
  std::string expression;
  int weight;
  int truncation;
  std::vector<StructureRow> rows;
  bool holds;

  std::string to_string() const;
};

/// Checks lambda(m_j(e)) <= j - weight(e) + 1 for all j <= K.
StructureReport check_structure_theorem(const CommutatorExpr &e, int truncation);
StructureReport check_structure_theorem(const CommutatorExpr &e, UniversalHolonomy &engine);

} // namespace holo
