#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "holo/scalar.hpp"
#include "holo/word.hpp"

namespace holo {

/// Formal variable m_j(d_i)^(alpha) of the free differential algebra.
struct DiffVar {
  int order = 1;      // Melnikov index j >= 1
  int generator = 1;  // generator index i >= 1
  int derivative = 0; // alpha >= 0

  bool operator==(const DiffVar &) const = default;

  /// Packed key; numeric order is lexicographic on (j, i, alpha).
  std::uint32_t code() const;
  static DiffVar from_code(std::uint32_t code);

  std::string to_string() const;
};

/// Commutative monomial: sorted multiset of variable codes.
using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic order on monomials.
bool monomial_less(const Monomial &a, const Monomial &b);

/// Sparse differential polynomial with Scalar coefficients in canonical
/// form: terms sorted by graded-lex monomial order, no zero coefficients.
class DiffPoly {
public:
  struct Term {
    Monomial monomial;
    Scalar coeff;
    bool operator==(const Term &) const = default;
  };

  DiffPoly() = default;
  DiffPoly(const Scalar &constant);
  DiffPoly(long constant) : DiffPoly(Scalar(constant)) {}
  explicit DiffPoly(const DiffVar &v);

  /// m_j(d_i)^(alpha)
  static DiffPoly var(int order, int generator, int derivative = 0) {
    return DiffPoly(DiffVar{order, generator, derivative});
  }
  static DiffPoly from_terms(std::vector<Term> terms);

  const std::vector<Term> &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the empty monomial.
  Scalar constant_term() const;
  /// True when the constant term vanishes (membership in the maximal ideal).
  bool in_max_ideal() const { return constant_term().is_zero(); }
  std::size_t total_degree() const;

  /// Distinct variables occurring, sorted.
  std::vector<DiffVar> variables() const;

  DiffPoly operator-() const;
  DiffPoly &operator+=(const DiffPoly &other);
  DiffPoly &operator-=(const DiffPoly &other);
  DiffPoly &operator*=(const Scalar &s);
  DiffPoly &operator*=(const Rational &r);

  friend DiffPoly operator+(const DiffPoly &a, const DiffPoly &b);
  friend DiffPoly operator-(const DiffPoly &a, const DiffPoly &b);
  friend DiffPoly operator*(const DiffPoly &a, const DiffPoly &b);
  friend DiffPoly operator*(DiffPoly a, const Scalar &s) { return a *= s; }
  friend DiffPoly operator*(const Scalar &s, DiffPoly a) { return a *= s; }
  friend DiffPoly operator*(DiffPoly a, const Rational &r) { return a *= r; }

  bool operator==(const DiffPoly &) const = default;

  /// Rendering with `m[j](di)` variables and `'alpha` derivative ticks.
  std::string to_string() const;

private:
  std::vector<Term> terms_;
};

std::ostream &operator<<(std::ostream &os, const DiffPoly &p);

DiffPoly dp_add(const DiffPoly &p, const DiffPoly &q);
DiffPoly dp_mul(const DiffPoly &p, const DiffPoly &q);
/// The derivation: m_j(d_i)^(alpha) -> m_j(d_i)^(alpha+1), Leibniz rule.
DiffPoly dp_derive(const DiffPoly &p);

/// Universal length: maximum Melnikov index occurring. Returns
/// kMinusInfinity for 0 and 0 for a nonzero constant.
int universal_length(const DiffPoly &p);

// Ring interface shared with Germ (used by the group and operator templates).
inline DiffPoly derive(const DiffPoly &p) { return dp_derive(p); }
inline bool is_zero(const DiffPoly &p) { return p.is_zero(); }

} // namespace holo
