#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace holo {

using Rational = mpq_class;

/// Exact element of Q(i)[L], where i^2 = -1 and L is a formal
/// transcendental standing for the constant 2*pi*i.
///
/// Terms are kept sorted by (power of L, power of i) with the i-power
/// reduced to 0 or 1 and no zero coefficients, so structural equality is
/// ring equality.
class Scalar {
public:
  struct Term {
    std::uint32_t l_power = 0;
    std::uint8_t i_power = 0; // 0 or 1
    Rational coeff;

    bool operator==(const Term &other) const = default;
  };

  Scalar() = default;
  Scalar(long value) : Scalar(Rational(value)) {}
  Scalar(int value) : Scalar(Rational(value)) {}
  Scalar(const Rational &value);
  Scalar(long num, long den) : Scalar(Rational(num, den)) {}

  static Scalar i();
  static Scalar lambda(std::uint32_t power = 1);
  static Scalar monomial(const Rational &coeff, std::uint8_t i_power,
                         std::uint32_t l_power);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True when the value is a plain rational (no i, no L).
  bool is_rational() const;
  /// The rational value; requires is_rational().
  Rational as_rational() const;

  const std::vector<Term> &terms() const { return terms_; }

  Scalar operator-() const;
  Scalar &operator+=(const Scalar &other);
  Scalar &operator-=(const Scalar &other);
  Scalar &operator*=(const Scalar &other);
  Scalar &operator*=(const Rational &r);

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(const Scalar &a, const Scalar &b);
  friend Scalar operator*(Scalar a, const Rational &r) { return a *= r; }

  bool operator==(const Scalar &other) const = default;

  /// Substitutes L -> 2*pi*i numerically; returns (re, im). Used only for
  /// consistency checks.
  std::pair<double, double> numeric() const;

  std::string to_string() const;
  /// Rendering suitable as a multiplicative factor: parenthesized when it
  /// has more than one term or a leading sign would be ambiguous.
  std::string to_factor_string() const;

private:
  void normalize();
  std::vector<Term> terms_;
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

std::string rational_to_string(const Rational &r);

} // namespace holo
