#pragma once

#include <climits>
#include <memory>
#include <string>
#include <vector>

namespace holo {

/// Sentinels for extended-integer results (weights, lengths, indices).
inline constexpr int kPlusInfinity = INT_MAX;
inline constexpr int kMinusInfinity = INT_MIN;

std::string extended_to_string(int value);

/// Letter of a free-group word: generator d_index raised to +1 or -1.
struct Letter {
  int generator = 1; // 1-based
  int exponent = 1;  // +1 or -1

  bool operator==(const Letter &) const = default;
  Letter inverse() const { return {generator, -exponent}; }
};

/// Element of the free group F_m, stored in reduced form.
class Word {
public:
  Word() = default;
  /// Reduces the given letters.
  explicit Word(std::vector<Letter> letters);

  static Word generator(int index) { return Word({Letter{index, 1}}); }

  const std::vector<Letter> &letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  int max_generator() const;

  Word inverse() const;
  friend Word operator*(const Word &a, const Word &b);
  bool operator==(const Word &) const = default;

  /// Renders as `d1 d2^-1 ...`; the empty word renders as `1`.
  std::string to_string() const;

private:
  std::vector<Letter> letters_;
};

/// Free reduction of a letter sequence (idempotent).
std::vector<Letter> reduce_letters(const std::vector<Letter> &letters);
Word reduce_word(const Word &w);

/// Commutator expression tree. Leaves are generators; internal nodes are
/// commutators [a,b] = a b a^-1 b^-1, ordered products and inverses.
class CommutatorExpr {
public:
  enum class Kind { Leaf, Commutator, Product, Inverse };

  static CommutatorExpr leaf(int generator);
  static CommutatorExpr commutator(CommutatorExpr a, CommutatorExpr b);
  static CommutatorExpr product(std::vector<CommutatorExpr> factors);
  static CommutatorExpr inverse(CommutatorExpr a);
  /// Product of the letters of a word (empty word: empty product).
  static CommutatorExpr from_word(const Word &w);

  Kind kind() const { return kind_; }
  int generator() const { return generator_; }
  const std::vector<CommutatorExpr> &children() const { return *children_; }

  int max_generator() const;
  std::string to_string() const;

  bool operator==(const CommutatorExpr &other) const;

private:
  Kind kind_ = Kind::Product;
  int generator_ = 0;
  std::shared_ptr<const std::vector<CommutatorExpr>> children_ =
      std::make_shared<const std::vector<CommutatorExpr>>();
};

/// Reduced word of the expression under [a,b] = a b a^-1 b^-1.
Word expand_commutator(const CommutatorExpr &e);

/// Lower-central weight lower bound: leaf 1, commutator sum, product min,
/// inverse unchanged; the empty product has weight +infinity.
int weight(const CommutatorExpr &e);

} // namespace holo
