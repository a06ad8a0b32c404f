#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

QPoly trim(QPoly p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
  return p;
}

QPoly add(const QPoly &a, const QPoly &b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < r.size(); ++k)
    r[k] = (k < a.size() ? a[k] : Q(0)) + (k < b.size() ? b[k] : Q(0));
  return trim(r);
}

QPoly sub(const QPoly &a, const QPoly &b) { return add(a, scale(b, -1)); }

QPoly mul(const QPoly &a, const QPoly &b) {
  if (a.empty() || b.empty())
    return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  return trim(r);
}

QPoly scale(const QPoly &a, const Q &c) {
  QPoly r = a;
  for (auto &x : r)
    x *= c;
  return trim(r);
}

QPoly deriv(const QPoly &a) {
  QPoly r;
  for (std::size_t k = 1; k < a.size(); ++k)
    r.push_back(a[k] * static_cast<long>(k));
  return trim(r);
}

QPoly monomial(const Q &c, int k) {
  QPoly r(static_cast<std::size_t>(k) + 1);
  r.back() = c;
  return trim(r);
}

QPoly wronskian(const QPoly &f, const QPoly &g) {
  return sub(mul(f, deriv(g)), mul(deriv(f), g));
}

Q eval(const QPoly &p, const Q &x) {
  Q acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

QPoly from_germ(const holo::Germ &g) {
  QPoly r;
  for (const auto &c : g.coeffs()) {
    if (!c.is_rational())
      throw std::invalid_argument("non-rational germ coefficient " + c.to_string());
    r.push_back(c.as_rational());
  }
  return trim(r);
}

holo::Germ to_germ(const QPoly &p) {
  std::vector<holo::Scalar> c;
  for (const auto &x : p)
    c.emplace_back(x);
  return holo::Germ::polynomial(std::move(c));
}

Series series_mul(const Series &a, const Series &b) {
  Series r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j)
      r[i + j] = add(r[i + j], mul(a[i], b[j]));
  return r;
}

Series substitute(const QPoly &p, const Series &x) {
  Series acc(x.size());
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = series_mul(acc, x);
    acc[0] = add(acc[0], QPoly{*it});
  }
  return acc;
}

Series as_series(const Components &f) {
  Series s(f.size() + 1);
  s[0] = {0, 1};
  for (std::size_t j = 0; j < f.size(); ++j)
    s[j + 1] = f[j];
  return s;
}

namespace {

Components strip(const Series &s) {
  Components c(s.begin() + 1, s.end());
  return c;
}

} // namespace

Components compose(const Components &f, const Components &g) {
  Series x = as_series(g);
  Series out = x;
  for (std::size_t j = 0; j < f.size(); ++j) {
    Series fj = substitute(f[j], x);
    for (std::size_t o = 0; o + j + 1 < out.size(); ++o)
      out[o + j + 1] = add(out[o + j + 1], fj[o]);
  }
  return strip(out);
}

Components inverse(const Components &f) {
  Components h(f.size());
  for (std::size_t it = 0; it < f.size(); ++it) {
    Series x = as_series(h);
    Series next(x.size());
    for (std::size_t j = 0; j < f.size(); ++j) {
      Series fj = substitute(f[j], x);
      for (std::size_t o = 0; o + j + 1 < next.size(); ++o)
        next[o + j + 1] = sub(next[o + j + 1], fj[o]);
    }
    h = strip(next);
  }
  return h;
}

QPoly pullback(const Components &f, const QPoly &phi, int l) {
  return substitute(phi, as_series(f)).at(static_cast<std::size_t>(l));
}

Components word_holonomy(const Letters &w, const std::vector<Components> &generators) {
  const std::size_t k = generators.at(0).size();
  Series x = as_series(Components(k));
  for (const auto &[g, e] : w) {
    const Components &fg = generators.at(static_cast<std::size_t>(g - 1));
    Components step = e > 0 ? fg : inverse(fg);
    Series next = x;
    for (std::size_t j = 0; j < k; ++j) {
      Series fj = substitute(step[j], x);
      for (std::size_t o = 0; o + j + 1 < next.size(); ++o)
        next[o + j + 1] = add(next[o + j + 1], fj[o]);
    }
    x = next;
  }
  return strip(x);
}

Letters reduce(Letters w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k].first == w[k + 1].first && w[k].second == -w[k + 1].second) {
        w.erase(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k) + 2);
        changed = true;
        break;
      }
  }
  return w;
}

namespace {

Letters invert(Letters w) {
  std::reverse(w.begin(), w.end());
  for (auto &l : w)
    l.second = -l.second;
  return w;
}

Letters concat(std::initializer_list<Letters> parts) {
  Letters r;
  for (const auto &p : parts)
    r.insert(r.end(), p.begin(), p.end());
  return r;
}

} // namespace

Letters expand(const holo::CommutatorExpr &e) {
  using K = holo::CommutatorExpr::Kind;
  switch (e.kind()) {
  case K::Leaf:
    return {{e.generator(), 1}};
  case K::Inverse:
    return reduce(invert(expand(e.children()[0])));
  case K::Commutator: {
    Letters a = expand(e.children()[0]), b = expand(e.children()[1]);
    return reduce(concat({a, b, invert(a), invert(b)}));
  }
  case K::Product: {
    Letters r;
    for (const auto &c : e.children()) {
      Letters x = expand(c);
      r.insert(r.end(), x.begin(), x.end());
    }
    return reduce(r);
  }
  }
  return {};
}

Letters letters_of(const holo::Word &w) {
  Letters r;
  for (const auto &l : w.letters())
    r.emplace_back(l.generator, l.exponent);
  return r;
}

int max_order(const holo::DiffPoly &p) {
  int r = holo::kMinusInfinity;
  for (const auto &t : p.terms()) {
    r = std::max(r, 0);
    for (auto code : t.monomial)
      r = std::max(r, holo::DiffVar::from_code(code).order);
  }
  return r;
}

QPoly random_poly(std::mt19937_64 &rng, int max_degree, int bound) {
  std::uniform_int_distribution<int> deg(0, max_degree), c(-bound, bound);
  QPoly p(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto &x : p)
    x = c(rng);
  return trim(p);
}

holo::Scalar random_scalar(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), lp(0, 2), ip(0, 1), terms(0, 3);
  holo::Scalar s;
  for (int n = terms(rng); n > 0; --n) {
    Q c(num(rng), den(rng));
    c.canonicalize();
    s += holo::Scalar::monomial(c, static_cast<std::uint8_t>(ip(rng)),
                                static_cast<std::uint32_t>(lp(rng)));
  }
  return s;
}

} // namespace oracle
