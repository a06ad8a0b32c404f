#include "holo/germ.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace holo {

Germ::Germ(const Scalar &constant) {
  if (!constant.is_zero())
    coeffs_.push_back(constant);
}

Germ Germ::polynomial(std::vector<Scalar> coeffs) {
  Germ g;
  g.coeffs_ = std::move(coeffs);
  g.trim();
  return g;
}

Germ Germ::jet(std::vector<Scalar> coeffs, int precision) {
  if (precision < 0)
    throw std::invalid_argument("jet precision must be >= 0");
  Germ g;
  g.kind_ = Kind::Jet;
  g.precision_ = precision;
  g.coeffs_ = std::move(coeffs);
  g.trim();
  return g;
}

Germ Germ::t() { return monomial(Scalar(1), 1); }

Germ Germ::monomial(const Scalar &c, int k) {
  std::vector<Scalar> coeffs(static_cast<std::size_t>(k) + 1);
  coeffs[static_cast<std::size_t>(k)] = c;
  return polynomial(std::move(coeffs));
}

void Germ::trim() {
  if (kind_ == Kind::Jet && coeffs_.size() > static_cast<std::size_t>(precision_) + 1)
    coeffs_.resize(static_cast<std::size_t>(precision_) + 1);
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
}

Scalar Germ::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Scalar();
}

Germ Germ::as_jet(int precision) const {
  int p = precision;
  if (kind_ == Kind::Jet)
    p = std::min(p, precision_);
  return jet(coeffs_, p);
}

Germ Germ::operator-() const {
  Germ r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

namespace {

// Kind and precision of a binary result.
void combine_kinds(const Germ &a, const Germ &b, Germ::Kind &kind, int &precision) {
  if (a.is_jet() && b.is_jet()) {
    kind = Germ::Kind::Jet;
    precision = std::min(a.precision(), b.precision());
  } else if (a.is_jet()) {
    kind = Germ::Kind::Jet;
    precision = a.precision();
  } else if (b.is_jet()) {
    kind = Germ::Kind::Jet;
    precision = b.precision();
  } else {
    kind = Germ::Kind::Polynomial;
    precision = 0;
  }
}

Germ make(Germ::Kind kind, int precision, std::vector<Scalar> coeffs) {
  return kind == Germ::Kind::Jet ? Germ::jet(std::move(coeffs), precision)
                                 : Germ::polynomial(std::move(coeffs));
}

} // namespace

Germ &Germ::operator+=(const Germ &other) {
  Kind kind;
  int precision;
  combine_kinds(*this, other, kind, precision);
  std::vector<Scalar> c(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = coeff(k) + other.coeff(k);
  *this = make(kind, precision, std::move(c));
  return *this;
}

Germ &Germ::operator-=(const Germ &other) { return *this += -other; }

Germ &Germ::operator*=(const Scalar &s) {
  for (auto &c : coeffs_)
    c *= s;
  trim();
  return *this;
}

Germ &Germ::operator*=(const Rational &r) {
  for (auto &c : coeffs_)
    c *= r;
  trim();
  return *this;
}

Germ operator*(const Germ &a, const Germ &b) {
  Germ::Kind kind;
  int precision;
  combine_kinds(a, b, kind, precision);
  if (a.coeffs_.empty() || b.coeffs_.empty())
    return make(kind, precision, {});
  std::size_t n = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (kind == Germ::Kind::Jet)
    n = std::min(n, static_cast<std::size_t>(precision) + 1);
  std::vector<Scalar> c(n);
  for (std::size_t x = 0; x < a.coeffs_.size() && x < n; ++x) {
    if (a.coeffs_[x].is_zero())
      continue;
    for (std::size_t y = 0; y < b.coeffs_.size() && x + y < n; ++y)
      if (!b.coeffs_[y].is_zero())
        c[x + y] += a.coeffs_[x] * b.coeffs_[y];
  }
  return make(kind, precision, std::move(c));
}

Germ germ_add(const Germ &f, const Germ &g) { return f + g; }
Germ germ_mul(const Germ &f, const Germ &g) { return f * g; }

Germ germ_derive(const Germ &f) {
  if (f.is_jet() && f.precision() < 1)
    throw std::domain_error("cannot differentiate a jet of precision 0");
  std::vector<Scalar> c;
  for (std::size_t k = 1; k < f.coeffs().size(); ++k)
    c.push_back(f.coeffs()[k] * Rational(static_cast<long>(k)));
  return f.is_jet() ? Germ::jet(std::move(c), f.precision() - 1)
                    : Germ::polynomial(std::move(c));
}

Germ wronskian(const Germ &f, const Germ &g) {
  return f * germ_derive(g) - germ_derive(f) * g;
}

Germ nested_wronskian(const CommutatorExpr &e, const std::map<int, Germ> &leaves) {
  using Kind = CommutatorExpr::Kind;
  switch (e.kind()) {
  case Kind::Leaf: {
    auto it = leaves.find(e.generator());
    if (it == leaves.end())
      throw std::invalid_argument("generator d" + std::to_string(e.generator()) +
                                  " has no assigned germ");
    return it->second;
  }
  case Kind::Commutator:
    return wronskian(nested_wronskian(e.children()[0], leaves),
                     nested_wronskian(e.children()[1], leaves));
  case Kind::Inverse:
    return -nested_wronskian(e.children()[0], leaves);
  case Kind::Product: {
    Germ sum;
    for (const auto &c : e.children())
      sum += nested_wronskian(c, leaves);
    return sum;
  }
  }
  return {};
}

std::string ZeroVerdict::to_string() const {
  switch (kind) {
  case ZeroKind::ExactZero:
    return "exact zero";
  case ZeroKind::ZeroToPrecision:
    return "zero to precision " + std::to_string(precision);
  case ZeroKind::Nonzero:
    return "nonzero";
  }
  return {};
}

ZeroVerdict germ_is_zero(const Germ &f) {
  if (!f.stored_zero())
    return {ZeroKind::Nonzero, 0};
  if (f.is_jet())
    return {ZeroKind::ZeroToPrecision, f.precision()};
  return {ZeroKind::ExactZero, 0};
}

std::string Germ::to_string() const {
  std::ostringstream os;
  if (coeffs_.empty()) {
    os << "0";
  } else {
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Scalar &c = coeffs_[k];
      if (c.is_zero())
        continue;
      bool negative = c.terms().size() == 1 && c.terms()[0].coeff < 0;
      Scalar mag = negative ? -c : c;
      std::string cs = mag.terms().size() > 1 ? "(" + mag.to_string() + ")" : mag.to_string();
      if (first)
        os << (negative ? "-" : "");
      else
        os << (negative ? " - " : " + ");
      first = false;
      if (k == 0) {
        os << cs;
        continue;
      }
      if (cs != "1")
        os << cs << "*";
      os << "t";
      if (k > 1)
        os << "^" << k;
    }
  }
  if (kind_ == Kind::Jet)
    return "jet(" + os.str() + ", " + std::to_string(precision_) + ")";
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const Germ &g) { return os << g.to_string(); }

} // namespace holo
