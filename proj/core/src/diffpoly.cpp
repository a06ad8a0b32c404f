#include "holo/diffpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "holo/word.hpp"

namespace holo {

namespace {

constexpr std::uint32_t kOrderShift = 22;
constexpr std::uint32_t kGenShift = 12;
constexpr std::uint32_t kGenMask = (1u << 10) - 1;
constexpr std::uint32_t kDerivMask = (1u << 12) - 1;

struct MonomialHash {
  std::size_t operator()(const Monomial &m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto c : m) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h ^ m.size();
  }
};

using Accumulator = std::unordered_map<Monomial, Scalar, MonomialHash>;

std::vector<DiffPoly::Term> collect(Accumulator &acc) {
  std::vector<DiffPoly::Term> out;
  out.reserve(acc.size());
  for (auto &[m, c] : acc)
    if (!c.is_zero())
      out.push_back(DiffPoly::Term{m, std::move(c)});
  std::sort(out.begin(), out.end(),
            [](const auto &a, const auto &b) { return monomial_less(a.monomial, b.monomial); });
  return out;
}

Monomial merge_monomials(const Monomial &a, const Monomial &b) {
  Monomial out(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
  return out;
}

} // namespace

std::uint32_t DiffVar::code() const {
  if (order < 1 || generator < 1 || derivative < 0 ||
      static_cast<std::uint32_t>(generator) > kGenMask ||
      static_cast<std::uint32_t>(derivative) > kDerivMask || order >= 1024)
    throw std::out_of_range("differential variable index out of range");
  return (static_cast<std::uint32_t>(order) << kOrderShift) |
         (static_cast<std::uint32_t>(generator) << kGenShift) |
         static_cast<std::uint32_t>(derivative);
}

DiffVar DiffVar::from_code(std::uint32_t code) {
  return DiffVar{static_cast<int>(code >> kOrderShift),
                 static_cast<int>((code >> kGenShift) & kGenMask),
                 static_cast<int>(code & kDerivMask)};
}

std::string DiffVar::to_string() const {
  std::string s = "m[" + std::to_string(order) + "](d" + std::to_string(generator) + ")";
  if (derivative > 0)
    s += "'" + std::to_string(derivative);
  return s;
}

bool monomial_less(const Monomial &a, const Monomial &b) {
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

DiffPoly::DiffPoly(const Scalar &constant) {
  if (!constant.is_zero())
    terms_.push_back(Term{{}, constant});
}

DiffPoly::DiffPoly(const DiffVar &v) { terms_.push_back(Term{{v.code()}, Scalar(1)}); }

DiffPoly DiffPoly::from_terms(std::vector<Term> terms) {
  Accumulator acc;
  for (auto &t : terms) {
    std::sort(t.monomial.begin(), t.monomial.end());
    acc[t.monomial] += t.coeff;
  }
  DiffPoly p;
  p.terms_ = collect(acc);
  return p;
}

Scalar DiffPoly::constant_term() const {
  if (!terms_.empty() && terms_.front().monomial.empty())
    return terms_.front().coeff;
  return Scalar();
}

std::size_t DiffPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.back().monomial.size();
}

std::vector<DiffVar> DiffPoly::variables() const {
  std::vector<std::uint32_t> codes;
  for (const auto &t : terms_)
    codes.insert(codes.end(), t.monomial.begin(), t.monomial.end());
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<DiffVar> vars;
  vars.reserve(codes.size());
  for (auto c : codes)
    vars.push_back(DiffVar::from_code(c));
  return vars;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly r = *this;
  for (auto &t : r.terms_)
    t.coeff = -t.coeff;
  return r;
}

DiffPoly operator+(const DiffPoly &a, const DiffPoly &b) {
  if (a.terms_.empty())
    return b;
  if (b.terms_.empty())
    return a;
  DiffPoly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    if (monomial_less(i->monomial, j->monomial)) {
      r.terms_.push_back(*i++);
    } else if (monomial_less(j->monomial, i->monomial)) {
      r.terms_.push_back(*j++);
    } else {
      Scalar c = i->coeff + j->coeff;
      if (!c.is_zero())
        r.terms_.push_back(DiffPoly::Term{i->monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), i, a.terms_.end());
  r.terms_.insert(r.terms_.end(), j, b.terms_.end());
  return r;
}

DiffPoly operator-(const DiffPoly &a, const DiffPoly &b) { return a + (-b); }

DiffPoly &DiffPoly::operator+=(const DiffPoly &other) {
  *this = *this + other;
  return *this;
}

DiffPoly &DiffPoly::operator-=(const DiffPoly &other) {
  *this = *this - other;
  return *this;
}

DiffPoly &DiffPoly::operator*=(const Scalar &s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &t : terms_)
    t.coeff *= s;
  std::erase_if(terms_, [](const Term &t) { return t.coeff.is_zero(); });
  return *this;
}

DiffPoly &DiffPoly::operator*=(const Rational &r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &t : terms_)
    t.coeff *= r;
  return *this;
}

DiffPoly operator*(const DiffPoly &a, const DiffPoly &b) {
  if (a.terms_.empty() || b.terms_.empty())
    return DiffPoly();
  if (a.terms_.size() == 1 && a.terms_[0].monomial.empty())
    return b * a.terms_[0].coeff;
  if (b.terms_.size() == 1 && b.terms_[0].monomial.empty())
    return a * b.terms_[0].coeff;
  Accumulator acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto &x : a.terms_)
    for (const auto &y : b.terms_)
      acc[merge_monomials(x.monomial, y.monomial)] += x.coeff * y.coeff;
  DiffPoly r;
  r.terms_ = collect(acc);
  return r;
}

DiffPoly dp_add(const DiffPoly &p, const DiffPoly &q) { return p + q; }
DiffPoly dp_mul(const DiffPoly &p, const DiffPoly &q) { return p * q; }

DiffPoly dp_derive(const DiffPoly &p) {
  Accumulator acc;
  for (const auto &t : p.terms()) {
    const auto &m = t.monomial;
    std::size_t k = 0;
    while (k < m.size()) {
      std::size_t run = k;
      while (run < m.size() && m[run] == m[k])
        ++run;
      long multiplicity = static_cast<long>(run - k);
      Monomial d = m;
      d.erase(d.begin() + static_cast<std::ptrdiff_t>(k));
      DiffVar v = DiffVar::from_code(m[k]);
      v.derivative += 1;
      d.insert(std::upper_bound(d.begin(), d.end(), v.code()), v.code());
      Scalar c = t.coeff;
      if (multiplicity != 1)
        c *= Rational(multiplicity);
      acc[std::move(d)] += c;
      k = run;
    }
  }
  return DiffPoly::from_terms([&] {
    std::vector<DiffPoly::Term> ts;
    ts.reserve(acc.size());
    for (auto &[m, c] : acc)
      ts.push_back({m, std::move(c)});
    return ts;
  }());
}

int universal_length(const DiffPoly &p) {
  if (p.is_zero())
    return kMinusInfinity;
  int len = 0;
  for (const auto &t : p.terms())
    for (auto c : t.monomial)
      len = std::max(len, DiffVar::from_code(c).order);
  return len;
}

std::string DiffPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &t : terms_) {
    const Scalar &c = t.coeff;
    bool negative = false;
    std::string coeff_str;
    if (c.terms().size() == 1 && c.terms()[0].coeff < 0) {
      negative = true;
      coeff_str = (-c).to_string();
    } else if (c.terms().size() > 1) {
      coeff_str = "(" + c.to_string() + ")";
    } else {
      coeff_str = c.to_string();
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (coeff_str != "1" || t.monomial.empty()) {
      os << coeff_str;
      wrote = true;
    }
    std::size_t k = 0;
    while (k < t.monomial.size()) {
      std::size_t run = k;
      while (run < t.monomial.size() && t.monomial[run] == t.monomial[k])
        ++run;
      if (wrote)
        os << "*";
      os << DiffVar::from_code(t.monomial[k]).to_string();
      if (run - k > 1)
        os << "^" << (run - k);
      wrote = true;
      k = run;
    }
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const DiffPoly &p) {
  return os << p.to_string();
}

} // namespace holo
