#include "holo/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace holo {

std::string extended_to_string(int value) {
  if (value == kPlusInfinity)
    return "+inf";
  if (value == kMinusInfinity)
    return "-inf";
  return std::to_string(value);
}

std::vector<Letter> reduce_letters(const std::vector<Letter> &letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const auto &l : letters) {
    if (l.generator < 1 || (l.exponent != 1 && l.exponent != -1))
      throw std::invalid_argument("invalid letter in word");
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word::Word(std::vector<Letter> letters) : letters_(reduce_letters(letters)) {}

Word reduce_word(const Word &w) { return Word(w.letters()); }

int Word::max_generator() const {
  int m = 0;
  for (const auto &l : letters_)
    m = std::max(m, l.generator);
  return m;
}

Word Word::inverse() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    inv.push_back(it->inverse());
  return Word(std::move(inv));
}

Word operator*(const Word &a, const Word &b) {
  std::vector<Letter> all = a.letters_;
  all.insert(all.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(all));
}

std::string Word::to_string() const {
  if (letters_.empty())
    return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k)
      os << ' ';
    os << 'd' << letters_[k].generator;
    if (letters_[k].exponent < 0)
      os << "^-1";
  }
  return os.str();
}

CommutatorExpr CommutatorExpr::leaf(int generator) {
  if (generator < 1)
    throw std::invalid_argument("generator index must be >= 1");
  CommutatorExpr e;
  e.kind_ = Kind::Leaf;
  e.generator_ = generator;
  return e;
}

CommutatorExpr CommutatorExpr::commutator(CommutatorExpr a, CommutatorExpr b) {
  CommutatorExpr e;
  e.kind_ = Kind::Commutator;
  e.children_ = std::make_shared<const std::vector<CommutatorExpr>>(
      std::vector<CommutatorExpr>{std::move(a), std::move(b)});
  return e;
}

CommutatorExpr CommutatorExpr::product(std::vector<CommutatorExpr> factors) {
  CommutatorExpr e;
  e.kind_ = Kind::Product;
  e.children_ =
      std::make_shared<const std::vector<CommutatorExpr>>(std::move(factors));
  return e;
}

CommutatorExpr CommutatorExpr::inverse(CommutatorExpr a) {
  CommutatorExpr e;
  e.kind_ = Kind::Inverse;
  e.children_ = std::make_shared<const std::vector<CommutatorExpr>>(
      std::vector<CommutatorExpr>{std::move(a)});
  return e;
}

CommutatorExpr CommutatorExpr::from_word(const Word &w) {
  std::vector<CommutatorExpr> factors;
  for (const auto &l : w.letters()) {
    auto leaf_expr = leaf(l.generator);
    factors.push_back(l.exponent > 0 ? leaf_expr : inverse(leaf_expr));
  }
  if (factors.size() == 1)
    return factors.front();
  return product(std::move(factors));
}

int CommutatorExpr::max_generator() const {
  if (kind_ == Kind::Leaf)
    return generator_;
  int m = 0;
  for (const auto &c : *children_)
    m = std::max(m, c.max_generator());
  return m;
}

std::string CommutatorExpr::to_string() const {
  switch (kind_) {
  case Kind::Leaf:
    return "d" + std::to_string(generator_);
  case Kind::Commutator:
    return "[" + (*children_)[0].to_string() + "," + (*children_)[1].to_string() +
           "]";
  case Kind::Inverse: {
    const auto &c = (*children_)[0];
    if (c.kind_ == Kind::Leaf || c.kind_ == Kind::Commutator)
      return c.to_string() + "^-1";
    return "(" + c.to_string() + ")^-1";
  }
  case Kind::Product: {
    if (children_->empty())
      return "1";
    std::string s;
    for (std::size_t k = 0; k < children_->size(); ++k) {
      const auto &c = (*children_)[k];
      if (k)
        s += ' ';
      if (c.kind_ == Kind::Product && c.children_->size() > 1)
        s += "(" + c.to_string() + ")";
      else
        s += c.to_string();
    }
    return s;
  }
  }
  return {};
}

bool CommutatorExpr::operator==(const CommutatorExpr &other) const {
  if (kind_ != other.kind_)
    return false;
  if (kind_ == Kind::Leaf)
    return generator_ == other.generator_;
  return *children_ == *other.children_;
}

Word expand_commutator(const CommutatorExpr &e) {
  using Kind = CommutatorExpr::Kind;
  switch (e.kind()) {
  case Kind::Leaf:
    return Word::generator(e.generator());
  case Kind::Inverse:
    return expand_commutator(e.children()[0]).inverse();
  case Kind::Commutator: {
    Word a = expand_commutator(e.children()[0]);
    Word b = expand_commutator(e.children()[1]);
    return a * b * a.inverse() * b.inverse();
  }
  case Kind::Product: {
    Word w;
    for (const auto &c : e.children())
      w = w * expand_commutator(c);
    return w;
  }
  }
  return {};
}

int weight(const CommutatorExpr &e) {
  using Kind = CommutatorExpr::Kind;
  switch (e.kind()) {
  case Kind::Leaf:
    return 1;
  case Kind::Inverse:
    return weight(e.children()[0]);
  case Kind::Commutator: {
    int a = weight(e.children()[0]);
    int b = weight(e.children()[1]);
    if (a == kPlusInfinity || b == kPlusInfinity)
      return kPlusInfinity;
    return a + b;
  }
  case Kind::Product: {
    int w = kPlusInfinity;
    for (const auto &c : e.children())
      w = std::min(w, weight(c));
    return w;
  }
  }
  return kPlusInfinity;
}

} // namespace holo
