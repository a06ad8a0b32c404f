#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "holo/scalar.hpp"
#include "holo/word.hpp"

namespace holo {

/// Germ of a holomorphic function at t = 0 with Scalar coefficients: either an
/// exact polynomial, or a jet known modulo t^(precision+1).
class Germ {
public:
  enum class Kind { Polynomial, Jet };

  Germ() = default;
  Germ(const Scalar &constant);
  Germ(long constant) : Germ(Scalar(constant)) {}

  static Germ polynomial(std::vector<Scalar> coeffs);
  static Germ jet(std::vector<Scalar> coeffs, int precision);
  /// The germ t.
  static Germ t();
  /// c * t^k
  static Germ monomial(const Scalar &c, int k);

  Kind kind() const { return kind_; }
  bool is_jet() const { return kind_ == Kind::Jet; }
  int precision() const { return precision_; }
  const std::vector<Scalar> &coeffs() const { return coeffs_; }
  /// Coefficient of t^k (zero past the stored range).
  Scalar coeff(std::size_t k) const;
  /// Degree of the stored polynomial part; -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Value at t = 0.
  Scalar at_zero() const { return coeff(0); }
  /// True when all stored coefficients vanish.
  bool stored_zero() const { return coeffs_.empty(); }

  /// Reinterprets as a jet of the given precision (truncating).
  Germ as_jet(int precision) const;

  Germ operator-() const;
  Germ &operator+=(const Germ &other);
  Germ &operator-=(const Germ &other);
  Germ &operator*=(const Scalar &s);
  Germ &operator*=(const Rational &r);

  friend Germ operator+(Germ a, const Germ &b) { return a += b; }
  friend Germ operator-(Germ a, const Germ &b) { return a -= b; }
  friend Germ operator*(const Germ &a, const Germ &b);
  friend Germ operator*(Germ a, const Scalar &s) { return a *= s; }
  friend Germ operator*(const Scalar &s, Germ a) { return a *= s; }
  friend Germ operator*(Germ a, const Rational &r) { return a *= r; }

  bool operator==(const Germ &) const = default;

  /// `c0 + c1*t + ...`; jets render as `jet(expr, N)`.
  std::string to_string() const;

private:
  void trim();

  Kind kind_ = Kind::Polynomial;
  std::vector<Scalar> coeffs_;
  int precision_ = 0;
};

std::ostream &operator<<(std::ostream &os, const Germ &g);

Germ germ_add(const Germ &f, const Germ &g);
Germ germ_mul(const Germ &f, const Germ &g);
/// d/dt; a jet loses one order of precision. Throws std::domain_error on a
/// precision-0 jet.
Germ germ_derive(const Germ &f);
/// W(f, g) = f g' - f' g
Germ wronskian(const Germ &f, const Germ &g);
/// Iterated Wronskian over the commutator tree; product nodes sum their
/// factors. Throws std::invalid_argument for an unassigned generator.
Germ nested_wronskian(const CommutatorExpr &e, const std::map<int, Germ> &leaves);

enum class ZeroKind { ExactZero, ZeroToPrecision, Nonzero };

struct ZeroVerdict {
  ZeroKind kind;
  int precision = 0; // meaningful for ZeroToPrecision

  bool vanishes() const { return kind != ZeroKind::Nonzero; }
  std::string to_string() const;
};

ZeroVerdict germ_is_zero(const Germ &f);

// Ring interface shared with DiffPoly.
inline Germ derive(const Germ &f) { return germ_derive(f); }
inline bool is_zero(const Germ &f) { return f.stored_zero(); }

} // namespace holo
