#pragma once

#include <concepts>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "holo/diffpoly.hpp"
#include "holo/germ.hpp"

namespace holo {

/// Commutative differential ring with rational scalars: DiffPoly or Germ.
template <class R>
concept DifferentialRing = requires(const R &a, const R &b, const Rational &q) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { a * q } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { derive(a) } -> std::convertible_to<R>;
  { is_zero(a) } -> std::convertible_to<bool>;
  R(1);
};

namespace detail {
inline void check_component(const DiffPoly &p) {
  if (!p.in_max_ideal())
    throw std::invalid_argument(
        "universal group components must have zero constant term");
}
inline void check_component(const Germ &) {}
} // namespace detail

/// Truncated series id + sum_{j=1..K} eps^j f_j under composition, all
/// arithmetic modulo eps^(K+1).
template <DifferentialRing R> class GroupElt {
public:
  GroupElt() = default;
  explicit GroupElt(int truncation) : components_(check_truncation(truncation)) {}

  static GroupElt identity(int truncation) { return GroupElt(truncation); }

  /// components[j-1] = f_j.
  static GroupElt from_components(std::vector<R> components) {
    if (components.empty())
      throw std::invalid_argument("truncation order must be >= 1");
    for (const auto &c : components)
      detail::check_component(c);
    GroupElt g;
    g.components_ = std::move(components);
    return g;
  }

  int truncation() const { return static_cast<int>(components_.size()); }

  /// f_j for 1 <= j <= K; throws std::out_of_range otherwise.
  const R &component(int j) const {
    if (j < 1 || j > truncation())
      throw std::out_of_range("Melnikov index " + std::to_string(j) +
                              " outside 1.." + std::to_string(truncation()));
    return components_[static_cast<std::size_t>(j - 1)];
  }
  void set_component(int j, R value) {
    detail::check_component(value);
    components_.at(static_cast<std::size_t>(j - 1)) = std::move(value);
  }
  const std::vector<R> &components() const { return components_; }

  bool is_identity() const {
    for (const auto &c : components_)
      if (!is_zero(c))
        return false;
    return true;
  }

  /// Lowest order with a nonzero component; kPlusInfinity for the identity.
  int leading_order() const {
    for (int j = 1; j <= truncation(); ++j)
      if (!is_zero(component(j)))
        return j;
    return kPlusInfinity;
  }

  bool operator==(const GroupElt &) const = default;

  /// One `id + e^j * (component)` line per nonzero component.
  std::string to_string() const {
    std::ostringstream os;
    bool any = false;
    for (int j = 1; j <= truncation(); ++j) {
      const R &c = component(j);
      if (is_zero(c))
        continue;
      os << "id + e^" << j << " * (" << c.to_string() << ")\n";
      any = true;
    }
    if (!any)
      os << "id\n";
    return os.str();
  }

private:
  static std::vector<R> check_truncation(int k) {
    if (k < 1)
      throw std::invalid_argument("truncation order must be >= 1");
    return std::vector<R>(static_cast<std::size_t>(k));
  }

  std::vector<R> components_;
};

namespace detail {

inline Rational inverse_factorial(int k) {
  mpz_class f = 1;
  for (int i = 2; i <= k; ++i)
    f *= i;
  return Rational(mpz_class(1), f);
}

/// Lazily computed derivatives f^(k) of one component.
template <class R> class DerivativeTower {
public:
  explicit DerivativeTower(const R &f) { tower_.push_back(f); }
  const R &get(int k) {
    while (static_cast<int>(tower_.size()) <= k)
      tower_.push_back(derive(tower_.back()));
    return tower_[static_cast<std::size_t>(k)];
  }

private:
  std::vector<R> tower_;
};

/// powers[k][o] = coefficient of eps^o in h^k, h = sum_i eps^i h_i.
template <class R> class SeriesPowers {
public:
  explicit SeriesPowers(int truncation)
      : k_(truncation),
        powers_(static_cast<std::size_t>(truncation) + 1,
                std::vector<R>(static_cast<std::size_t>(truncation) + 1)) {
    powers_[0][0] = R(1);
  }

  /// Fills column o (all k) from h_1..h_o.
  void fill_order(int o, const std::vector<R> &h) {
    for (int k = 1; k <= o; ++k) {
      R acc;
      for (int i = 1; i <= o - k + 1; ++i) {
        const R &hi = h[static_cast<std::size_t>(i - 1)];
        const R &prev = powers_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(o - i)];
        if (is_zero(hi) || is_zero(prev))
          continue;
        acc = acc + hi * prev;
      }
      powers_[static_cast<std::size_t>(k)][static_cast<std::size_t>(o)] = std::move(acc);
    }
  }

  const R &at(int k, int o) const {
    return powers_[static_cast<std::size_t>(k)][static_cast<std::size_t>(o)];
  }

private:
  int k_;
  std::vector<std::vector<R>> powers_;
};

/// eps^n coefficient of sum_j eps^j f_j(id + h), given h_1..h_(n-1) in
/// `powers` (the Taylor expansion f(t+h) = sum_k f^(k) h^k / k!).
template <class R>
R taylor_order(int n, const GroupElt<R> &f, std::vector<DerivativeTower<R>> &towers,
               const SeriesPowers<R> &powers) {
  R acc;
  for (int j = 1; j <= n; ++j) {
    if (is_zero(f.component(j)))
      continue;
    for (int k = 0; k <= n - j; ++k) {
      const R &hp = powers.at(k, n - j);
      if (is_zero(hp))
        continue;
      R term = towers[static_cast<std::size_t>(j - 1)].get(k) * hp;
      if (k > 1)
        term = term * inverse_factorial(k);
      acc = acc + term;
    }
  }
  return acc;
}

template <class R> std::vector<DerivativeTower<R>> towers_of(const GroupElt<R> &f) {
  std::vector<DerivativeTower<R>> towers;
  towers.reserve(static_cast<std::size_t>(f.truncation()));
  for (const auto &c : f.components())
    towers.emplace_back(c);
  return towers;
}

} // namespace detail

/// F o G = id + g + sum_j eps^j f_j(id + g), truncated at eps^(K+1).
template <DifferentialRing R> GroupElt<R> compose(const GroupElt<R> &f, const GroupElt<R> &g) {
  const int k = f.truncation();
  if (g.truncation() != k)
    throw std::invalid_argument("composition of elements with different truncation orders");
  if (f.is_identity())
    return g;
  if (g.is_identity())
    return f;
  auto towers = detail::towers_of(f);
  detail::SeriesPowers<R> powers(k);
  std::vector<R> out(static_cast<std::size_t>(k));
  for (int n = 1; n <= k; ++n) {
    if (n > 1)
      powers.fill_order(n - 1, g.components());
    out[static_cast<std::size_t>(n - 1)] =
        g.component(n) + detail::taylor_order(n, f, towers, powers);
  }
  return GroupElt<R>::from_components(std::move(out));
}

/// Compositional inverse, solved order by order so that F o F^-1 = id.
template <DifferentialRing R> GroupElt<R> inverse(const GroupElt<R> &f) {
  const int k = f.truncation();
  if (f.is_identity())
    return f;
  auto towers = detail::towers_of(f);
  detail::SeriesPowers<R> powers(k);
  std::vector<R> h(static_cast<std::size_t>(k));
  for (int n = 1; n <= k; ++n) {
    if (n > 1)
      powers.fill_order(n - 1, h);
    h[static_cast<std::size_t>(n - 1)] = -detail::taylor_order(n, f, towers, powers);
  }
  return GroupElt<R>::from_components(std::move(h));
}

/// F o G o F^-1 o G^-1
template <DifferentialRing R>
GroupElt<R> group_commutator(const GroupElt<R> &f, const GroupElt<R> &g) {
  return compose(compose(compose(f, g), inverse(f)), inverse(g));
}

template <DifferentialRing R> const R &melnikov_component(const GroupElt<R> &f, int j) {
  return f.component(j);
}

} // namespace holo
