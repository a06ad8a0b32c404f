#include "holo_cli/parse.hpp"

#include <cctype>

namespace holo::cli {

namespace {

class Cursor {
public:
  Cursor(const std::string &text, int line, int offset)
      : text_(text), line_(line), offset_(offset) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  /// Next character without skipping whitespace.
  char raw_peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool at_end() { return peek() == '\0'; }
  bool accept(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'" + found());
  }
  bool accept_word(const std::string &w) {
    skip_ws();
    if (text_.compare(pos_, w.size(), w) != 0)
      return false;
    std::size_t end = pos_ + w.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end])))
      return false;
    pos_ = end;
    return true;
  }
  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected an integer" + found());
    try {
      return std::stol(text_.substr(start, pos_ - start));
    } catch (const std::out_of_range &) {
      pos_ = start;
      fail("integer out of range");
    }
  }
  mpz_class big_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected an integer" + found());
    return mpz_class(text_.substr(start, pos_ - start));
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  [[noreturn]] void fail(const std::string &message) const {
    throw ParseError(line_, offset_ + static_cast<int>(pos_) + 1, message);
  }
  std::string found() const {
    if (pos_ >= text_.size())
      return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

private:
  const std::string &text_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
};

/// Arithmetic over a ring V with Scalar constants; atoms are supplied by
/// the derived grammar.
template <class V> class ArithParser {
public:
  explicit ArithParser(Cursor &c) : c_(c) {}
  virtual ~ArithParser() = default;

  V parse_all() {
    V v = expr();
    if (!c_.at_end())
      c_.fail("unexpected input" + c_.found());
    return v;
  }

  V expr() {
    V v;
    if (c_.accept('-'))
      v = -term();
    else {
      c_.accept('+');
      v = term();
    }
    for (;;) {
      if (c_.accept('+'))
        v = v + term();
      else if (c_.accept('-'))
        v = v - term();
      else
        return v;
    }
  }

protected:
  virtual bool atom(V &out) = 0;
  /// Constant value of v, if it is a nonzero rational constant.
  virtual bool rational_constant(const V &v, Rational &out) const = 0;

  Cursor &c_;

private:
  V term() {
    V v = unary();
    for (;;) {
      if (c_.accept('*')) {
        v = v * unary();
      } else if (c_.accept('/')) {
        V d = unary();
        Rational q;
        if (!rational_constant(d, q))
          c_.fail("division only by a nonzero rational constant");
        v = v * Rational(1 / q);
      } else {
        return v;
      }
    }
  }
  V unary() {
    if (c_.accept('-'))
      return -unary();
    return power();
  }
  V power() {
    V base = primary();
    if (c_.accept('^')) {
      long n = c_.integer();
      if (n > 64)
        c_.fail("exponent too large");
      V r(1L);
      for (long k = 0; k < n; ++k)
        r = r * base;
      return r;
    }
    return base;
  }
  V primary() {
    if (c_.accept('(')) {
      V v = expr();
      c_.expect(')');
      return v;
    }
    if (c_.at_digit())
      return V(Scalar(Rational(c_.big_integer())));
    if (c_.accept_word("I"))
      return V(Scalar::i());
    if (c_.accept_word("L"))
      return V(Scalar::lambda());
    V out;
    if (atom(out))
      return out;
    c_.fail("expected a number, variable or '('" + c_.found());
  }
};

class GermParser : public ArithParser<Germ> {
public:
  using ArithParser::ArithParser;

protected:
  bool atom(Germ &out) override {
    if (c_.accept_word("t")) {
      out = Germ::t();
      return true;
    }
    if (c_.accept_word("jet")) {
      c_.expect('(');
      Germ body = expr();
      c_.expect(',');
      long n = c_.integer();
      c_.expect(')');
      out = Germ::jet(body.coeffs(), static_cast<int>(n));
      return true;
    }
    return false;
  }
  bool rational_constant(const Germ &v, Rational &out) const override {
    if (v.degree() != 0 || !v.coeff(0).is_rational())
      return false;
    out = v.coeff(0).as_rational();
    return true;
  }
};

class DiffPolyParser : public ArithParser<DiffPoly> {
public:
  using ArithParser::ArithParser;

protected:
  bool atom(DiffPoly &out) override {
    if (c_.peek() != 'm')
      return false;
    c_.accept('m');
    c_.expect('[');
    long j = c_.integer();
    c_.expect(']');
    c_.expect('(');
    if (!c_.accept('d'))
      c_.fail("expected a generator 'd<i>'" + c_.found());
    long i = c_.integer();
    c_.expect(')');
    long alpha = 0;
    if (c_.raw_peek() == '\'') {
      c_.accept('\'');
      // a bare tick is the first derivative
      alpha = std::isdigit(static_cast<unsigned char>(c_.raw_peek())) ? c_.integer() : 1;
    }
    if (j < 1 || i < 1 || j > 1023 || i > 1023 || alpha > 4095)
      c_.fail("variable index out of range");
    out = DiffPoly::var(static_cast<int>(j), static_cast<int>(i), static_cast<int>(alpha));
    return true;
  }
  bool rational_constant(const DiffPoly &v, Rational &out) const override {
    if (v.terms().size() != 1 || !v.terms()[0].monomial.empty() ||
        !v.terms()[0].coeff.is_rational())
      return false;
    out = v.terms()[0].coeff.as_rational();
    return true;
  }
};

class ExprParser {
public:
  explicit ExprParser(Cursor &c) : c_(c) {}

  CommutatorExpr parse_all() {
    CommutatorExpr e = product();
    if (!c_.at_end())
      c_.fail("unexpected input" + c_.found());
    return e;
  }

private:
  bool starts_factor() {
    char ch = c_.peek();
    return ch == 'd' || ch == '[' || ch == '(';
  }
  CommutatorExpr product() {
    if (c_.peek() == '1') {
      c_.integer();
      return CommutatorExpr::product({});
    }
    std::vector<CommutatorExpr> factors;
    if (!starts_factor())
      c_.fail("expected a generator, '[' or '('" + c_.found());
    while (starts_factor())
      factors.push_back(factor());
    if (factors.size() == 1)
      return factors.front();
    return CommutatorExpr::product(std::move(factors));
  }
  CommutatorExpr factor() {
    CommutatorExpr base = primary();
    if (!c_.accept('^'))
      return base;
    bool negative = c_.accept('-');
    long n = c_.integer();
    if (n < 1 || n > 64)
      c_.fail("exponent must lie in 1..64");
    CommutatorExpr e = base;
    if (n > 1)
      e = CommutatorExpr::product(std::vector<CommutatorExpr>(static_cast<std::size_t>(n), base));
    return negative ? CommutatorExpr::inverse(e) : e;
  }
  CommutatorExpr primary() {
    if (c_.accept('d')) {
      long i = c_.integer();
      if (i < 1 || i > 1023)
        c_.fail("generator index out of range");
      return CommutatorExpr::leaf(static_cast<int>(i));
    }
    if (c_.accept('[')) {
      CommutatorExpr a = product();
      c_.expect(',');
      CommutatorExpr b = product();
      c_.expect(']');
      return CommutatorExpr::commutator(a, b);
    }
    c_.expect('(');
    CommutatorExpr e = product();
    c_.expect(')');
    return e;
  }

  Cursor &c_;
};

} // namespace

Germ parse_germ(const std::string &text, int line, int column_offset) {
  Cursor c(text, line, column_offset);
  GermParser p(c);
  return p.parse_all();
}

DiffPoly parse_diffpoly(const std::string &text, int line, int column_offset) {
  Cursor c(text, line, column_offset);
  DiffPolyParser p(c);
  return p.parse_all();
}

CommutatorExpr parse_expr(const std::string &text, int line, int column_offset) {
  Cursor c(text, line, column_offset);
  ExprParser p(c);
  return p.parse_all();
}

std::vector<std::pair<std::string, int>> split_top_level(const std::string &text) {
  std::vector<std::pair<std::string, int>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    char ch = k < text.size() ? text[k] : ',';
    if (ch == '[' || ch == '(')
      ++depth;
    else if (ch == ']' || ch == ')')
      --depth;
    else if (ch == ',' && (depth == 0 || k == text.size())) {
      out.emplace_back(text.substr(start, k - start), static_cast<int>(start));
      start = k + 1;
    }
  }
  return out;
}

} // namespace holo::cli
