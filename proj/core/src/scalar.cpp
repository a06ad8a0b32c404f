#include "holo/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace holo {

namespace {

bool term_key_less(const Scalar::Term &a, const Scalar::Term &b) {
  if (a.l_power != b.l_power)
    return a.l_power < b.l_power;
  return a.i_power < b.i_power;
}

bool same_key(const Scalar::Term &a, const Scalar::Term &b) {
  return a.l_power == b.l_power && a.i_power == b.i_power;
}

} // namespace

std::string rational_to_string(const Rational &r) { return r.get_str(); }

Scalar::Scalar(const Rational &value) {
  if (value != 0)
    terms_.push_back(Term{0, 0, value});
}

Scalar Scalar::i() { return monomial(1, 1, 0); }

Scalar Scalar::lambda(std::uint32_t power) { return monomial(1, 0, power); }

Scalar Scalar::monomial(const Rational &coeff, std::uint8_t i_power,
                        std::uint32_t l_power) {
  Scalar s;
  if (coeff == 0)
    return s;
  Rational c = coeff;
  // i^2 = -1
  if ((i_power / 2) % 2 == 1)
    c = -c;
  s.terms_.push_back(Term{l_power, static_cast<std::uint8_t>(i_power % 2), c});
  return s;
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_[0].l_power == 0 &&
         terms_[0].i_power == 0 && terms_[0].coeff == 1;
}

bool Scalar::is_rational() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_[0].l_power == 0 && terms_[0].i_power == 0);
}

Rational Scalar::as_rational() const {
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

void Scalar::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_key_less);
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto &t : terms_) {
    if (!merged.empty() && same_key(merged.back(), t))
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term &t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto &t : r.terms_)
    t.coeff = -t.coeff;
  return r;
}

Scalar &Scalar::operator+=(const Scalar &other) {
  if (other.terms_.empty())
    return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  if (terms_.size() == 1 && other.terms_.size() == 1 &&
      same_key(terms_[0], other.terms_[0])) {
    terms_[0].coeff += other.terms_[0].coeff;
    if (terms_[0].coeff == 0)
      terms_.clear();
    return *this;
  }
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  normalize();
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &other) { return *this += -other; }

Scalar operator*(const Scalar &a, const Scalar &b) {
  Scalar r;
  if (a.terms_.empty() || b.terms_.empty())
    return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto &x : a.terms_) {
    for (const auto &y : b.terms_) {
      Scalar::Term t;
      t.l_power = x.l_power + y.l_power;
      int ip = x.i_power + y.i_power;
      t.coeff = x.coeff * y.coeff;
      if (ip == 2) {
        t.coeff = -t.coeff;
        ip = 0;
      }
      t.i_power = static_cast<std::uint8_t>(ip);
      r.terms_.push_back(std::move(t));
    }
  }
  if (r.terms_.size() > 1)
    r.normalize();
  return r;
}

Scalar &Scalar::operator*=(const Scalar &other) {
  *this = *this * other;
  return *this;
}

Scalar &Scalar::operator*=(const Rational &r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &t : terms_)
    t.coeff *= r;
  return *this;
}

std::pair<double, double> Scalar::numeric() const {
  // L -> 2*pi*i, so L^k = (2*pi)^k * i^k
  double re = 0, im = 0;
  for (const auto &t : terms_) {
    double mag = t.coeff.get_d() * std::pow(2 * std::numbers::pi, t.l_power);
    int ip = (t.l_power + t.i_power) % 4;
    switch (ip) {
    case 0: re += mag; break;
    case 1: im += mag; break;
    case 2: re -= mag; break;
    default: im -= mag; break;
    }
  }
  return {re, im};
}

std::string Scalar::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &t : terms_) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative)
      c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool has_symbol = t.i_power != 0 || t.l_power != 0;
    bool wrote = false;
    if (c != 1 || !has_symbol) {
      os << rational_to_string(c);
      wrote = true;
    }
    if (t.i_power) {
      os << (wrote ? "*" : "") << "I";
      wrote = true;
    }
    if (t.l_power) {
      os << (wrote ? "*" : "") << "L";
      if (t.l_power > 1)
        os << "^" << t.l_power;
    }
  }
  return os.str();
}

std::string Scalar::to_factor_string() const {
  std::string s = to_string();
  if (terms_.size() > 1 || (!s.empty() && s[0] == '-'))
    return "(" + s + ")";
  return s;
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) {
  return os << s.to_string();
}

} // namespace holo
