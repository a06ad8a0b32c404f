#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "holo/group.hpp"
#include "holo/holonomy.hpp"

namespace holo {

/// Finite sum of c_m * D^m with coefficients in a differential ring.
/// coeffs()[m] is the coefficient of D^m; trailing zeros are dropped.
template <DifferentialRing R> class DiffOperator {
public:
  DiffOperator() = default;
  explicit DiffOperator(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static DiffOperator identity() { return DiffOperator({R(1)}); }
  /// c * D^m
  static DiffOperator term(R c, int m) {
    std::vector<R> v(static_cast<std::size_t>(m) + 1);
    v.back() = std::move(c);
    return DiffOperator(std::move(v));
  }

  const std::vector<R> &coeffs() const { return coeffs_; }
  /// Coefficient of D^m (zero past the stored range).
  R coeff(int m) const {
    return m >= 0 && m < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(m)]
                                                          : R();
  }
  /// Highest D-power; -1 for the zero operator.
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  DiffOperator operator+(const DiffOperator &o) const {
    std::vector<R> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t m = 0; m < v.size(); ++m)
      v[m] = coeff(static_cast<int>(m)) + o.coeff(static_cast<int>(m));
    return DiffOperator(std::move(v));
  }
  DiffOperator operator-() const {
    std::vector<R> v;
    for (const auto &c : coeffs_)
      v.push_back(-c);
    return DiffOperator(std::move(v));
  }
  DiffOperator operator-(const DiffOperator &o) const { return *this + (-o); }
  DiffOperator operator*(const Rational &q) const {
    std::vector<R> v;
    for (const auto &c : coeffs_)
      v.push_back(c * q);
    return DiffOperator(std::move(v));
  }

  bool operator==(const DiffOperator &) const = default;

  /// `c * D^m` terms joined by ` + `; `Id` for the identity, `0` for zero.
  std::string to_string() const {
    if (coeffs_.empty())
      return "0";
    if (*this == identity())
      return "Id";
    std::ostringstream os;
    bool first = true;
    for (std::size_t m = 0; m < coeffs_.size(); ++m) {
      if (holo::is_zero(coeffs_[m]))
        continue;
      if (!first)
        os << " + ";
      first = false;
      os << "(" << coeffs_[m].to_string() << ")";
      if (m > 0)
        os << " * D^" << m;
    }
    return os.str();
  }

private:
  void trim() {
    while (!coeffs_.empty() && holo::is_zero(coeffs_.back()))
      coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

namespace detail {

inline Rational binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

} // namespace detail

/// (a D^m) o (b D^n) = a * sum_k C(m,k) b^(k) D^(m-k+n)
template <DifferentialRing R>
DiffOperator<R> op_compose(const DiffOperator<R> &a, const DiffOperator<R> &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<R> out(static_cast<std::size_t>(a.order() + b.order()) + 1);
  for (int n = 0; n <= b.order(); ++n) {
    const R &bn = b.coeffs()[static_cast<std::size_t>(n)];
    if (is_zero(bn))
      continue;
    R bk = bn; // b^(k)
    for (int k = 0; k <= a.order(); ++k) {
      if (k > 0)
        bk = derive(bk);
      if (is_zero(bk))
        break;
      for (int m = k; m <= a.order(); ++m) {
        const R &am = a.coeffs()[static_cast<std::size_t>(m)];
        if (is_zero(am))
          continue;
        R term = am * bk;
        if (k > 0 && k < m)
          term = term * detail::binomial(m, k);
        auto &slot = out[static_cast<std::size_t>(m - k + n)];
        slot = slot + term;
      }
    }
  }
  return DiffOperator<R>(std::move(out));
}

/// sum_m c_m x^(m)
template <DifferentialRing R> R apply(const DiffOperator<R> &op, const R &x) {
  R acc;
  R xm = x;
  for (int m = 0; m <= op.order(); ++m) {
    if (m > 0) {
      if (is_zero(xm))
        break;
      xm = derive(xm);
    }
    const R &c = op.coeffs()[static_cast<std::size_t>(m)];
    if (!is_zero(c) && !is_zero(xm))
      acc = acc + c * xm;
  }
  return acc;
}

namespace detail {

/// bell[n][k] = B_{n,k}(1! f_1, 2! f_2, ...) for n <= limit.
template <DifferentialRing R>
std::vector<std::vector<R>> bell_table(const GroupElt<R> &f, int limit) {
  std::vector<R> x(static_cast<std::size_t>(limit) + 1);
  mpz_class fact = 1;
  for (int j = 1; j <= limit; ++j) {
    fact *= j;
    x[static_cast<std::size_t>(j)] = f.component(j) * Rational(fact);
  }
  std::vector<std::vector<R>> b(static_cast<std::size_t>(limit) + 1,
                                std::vector<R>(static_cast<std::size_t>(limit) + 1));
  b[0][0] = R(1);
  for (int n = 1; n <= limit; ++n)
    for (int k = 1; k <= n; ++k) {
      R acc;
      for (int i = 1; i <= n - k + 1; ++i) {
        const R &xi = x[static_cast<std::size_t>(i)];
        const R &prev = b[static_cast<std::size_t>(n - i)][static_cast<std::size_t>(k - 1)];
        if (is_zero(xi) || is_zero(prev))
          continue;
        acc = acc + xi * prev * binomial(n - 1, i - 1);
      }
      b[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = std::move(acc);
    }
  return b;
}

template <DifferentialRing R>
DiffOperator<R> s_from_bell(const std::vector<std::vector<R>> &bell, int l) {
  if (l == 0)
    return DiffOperator<R>::identity();
  Rational inv = inverse_factorial(l);
  std::vector<R> coeffs(static_cast<std::size_t>(l) + 1);
  for (int k = 1; k <= l; ++k)
    coeffs[static_cast<std::size_t>(k)] =
        bell[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] * inv;
  return DiffOperator<R>(std::move(coeffs));
}

} // namespace detail

/// S_l = (1/l!) sum_k B_{l,k}(1! f_1, 2! f_2, ...) D^k, so that
/// phi(F(t)) = sum_l eps^l S_l(phi). Throws std::out_of_range for l > K.
template <DifferentialRing R> DiffOperator<R> faa_di_bruno_S(const GroupElt<R> &f, int l) {
  if (l < 0 || l > f.truncation())
    throw std::out_of_range("operator index " + std::to_string(l) + " outside 0.." +
                            std::to_string(f.truncation()));
  return detail::s_from_bell(detail::bell_table(f, l), l);
}

/// Lower-triangular Toeplitz matrix of operators; only the defining column
/// S_0..S_K is stored.
template <DifferentialRing R> class ToeplitzMatrix {
public:
  ToeplitzMatrix() = default;
  explicit ToeplitzMatrix(std::vector<DiffOperator<R>> column) : column_(std::move(column)) {
    if (column_.empty())
      throw std::invalid_argument("Toeplitz matrix needs at least one entry");
  }

  static ToeplitzMatrix identity(int k) {
    std::vector<DiffOperator<R>> col(static_cast<std::size_t>(k) + 1);
    col[0] = DiffOperator<R>::identity();
    return ToeplitzMatrix(std::move(col));
  }

  /// K, the matrix having size K+1.
  int order() const { return static_cast<int>(column_.size()) - 1; }
  const std::vector<DiffOperator<R>> &column() const { return column_; }
  const DiffOperator<R> &S(int l) const { return column_.at(static_cast<std::size_t>(l)); }
  /// T[r][c] = S_(r-c) for r >= c, zero above the diagonal.
  DiffOperator<R> entry(int r, int c) const { return r >= c ? S(r - c) : DiffOperator<R>(); }

  bool operator==(const ToeplitzMatrix &) const = default;

  std::string to_string() const {
    std::ostringstream os;
    for (int l = 0; l <= order(); ++l)
      os << "S" << l << " = " << S(l).to_string() << "\n";
    return os.str();
  }

private:
  std::vector<DiffOperator<R>> column_;
};

/// Column S_0..S_K of the holonomy matrix of F.
template <DifferentialRing R> ToeplitzMatrix<R> toeplitz_matrix(const GroupElt<R> &f, int k) {
  if (k < 0 || k > f.truncation())
    throw std::invalid_argument("matrix order exceeds truncation order");
  auto bell = detail::bell_table(f, k);
  std::vector<DiffOperator<R>> col;
  for (int l = 0; l <= k; ++l)
    col.push_back(detail::s_from_bell(bell, l));
  return ToeplitzMatrix<R>(std::move(col));
}

template <DifferentialRing R> ToeplitzMatrix<R> toeplitz_matrix(const GroupElt<R> &f) {
  return toeplitz_matrix(f, f.truncation());
}

/// Column of the product: S_l = sum_{r+h=l} A_r o B_h.
template <DifferentialRing R>
ToeplitzMatrix<R> matrix_mul(const ToeplitzMatrix<R> &a, const ToeplitzMatrix<R> &b) {
  if (a.order() != b.order())
    throw std::invalid_argument("matrix sizes differ");
  std::vector<DiffOperator<R>> col(static_cast<std::size_t>(a.order()) + 1);
  for (int l = 0; l <= a.order(); ++l)
    for (int r = 0; r <= l; ++r) {
      if (a.S(r).is_zero() || b.S(l - r).is_zero())
        continue;
      col[static_cast<std::size_t>(l)] =
          col[static_cast<std::size_t>(l)] + op_compose(a.S(r), b.S(l - r));
    }
  return ToeplitzMatrix<R>(std::move(col));
}

/// Inverse of a unipotent matrix (S_0 = Id), solved entry by entry.
template <DifferentialRing R> ToeplitzMatrix<R> matrix_inverse(const ToeplitzMatrix<R> &t) {
  if (!(t.S(0) == DiffOperator<R>::identity()))
    throw std::invalid_argument("matrix inverse requires S_0 = Id");
  std::vector<DiffOperator<R>> col{DiffOperator<R>::identity()};
  for (int l = 1; l <= t.order(); ++l) {
    DiffOperator<R> acc;
    for (int r = 1; r <= l; ++r)
      if (!t.S(r).is_zero())
        acc = acc + op_compose(t.S(r), col[static_cast<std::size_t>(l - r)]);
    col.push_back(-acc);
  }
  return ToeplitzMatrix<R>(std::move(col));
}

/// A B A^-1 B^-1
template <DifferentialRing R>
ToeplitzMatrix<R> matrix_commutator(const ToeplitzMatrix<R> &a, const ToeplitzMatrix<R> &b) {
  return matrix_mul(matrix_mul(matrix_mul(a, b), matrix_inverse(a)), matrix_inverse(b));
}

template <DifferentialRing R> ToeplitzMatrix<R> minus_identity(const ToeplitzMatrix<R> &t) {
  auto col = t.column();
  col[0] = col[0] - DiffOperator<R>::identity();
  return ToeplitzMatrix<R>(std::move(col));
}

/// Smallest k with S_k != 0; kPlusInfinity for the zero matrix.
template <DifferentialRing R> int coindex(const ToeplitzMatrix<R> &n) {
  for (int l = 0; l <= n.order(); ++l)
    if (!n.S(l).is_zero())
      return l;
  return kPlusInfinity;
}

struct TriangularityCertificate {
  struct Row {
    int index;  // l
    int length; // max lambda over the coefficients of S_l
    int bound;  // l - k + 1
    bool holds;
  };
  int k;
  int coindex;
  bool holds;
  std::vector<Row> rows;

  std::string to_string() const;
};

inline int operator_length(const DiffOperator<DiffPoly> &op) {
  int len = kMinusInfinity;
  for (const auto &c : op.coeffs())
    len = std::max(len, universal_length(c));
  return len;
}

/// Coindex >= k and lambda(S_l) <= l - k + 1 for every l.
inline TriangularityCertificate is_k_triangular(const ToeplitzMatrix<DiffPoly> &n, int k) {
  TriangularityCertificate cert{k, coindex(n), true, {}};
  if (cert.coindex < k)
    cert.holds = false;
  for (int l = 0; l <= n.order(); ++l) {
    int len = operator_length(n.S(l));
    int bound = l - k + 1;
    bool ok = len <= bound;
    cert.holds = cert.holds && ok;
    cert.rows.push_back({l, len, bound, ok});
  }
  return cert;
}

inline std::string TriangularityCertificate::to_string() const {
  std::ostringstream os;
  os << k << "-triangular: " << (holds ? "yes" : "no")
     << " (coindex " << extended_to_string(coindex) << ")\n";
  for (const auto &r : rows)
    os << "  l=" << r.index << " lambda=" << extended_to_string(r.length)
       << " bound=" << r.bound << (r.holds ? "" : "  <-- fails") << "\n";
  return os.str();
}

struct BridgeReport {
  int tau;
  int truncation;
  /// Largest k <= K+1 for which T - Id is k-triangular (K+1 when N = 0).
  int max_triangular;
  bool consistent;
  std::string counterexample;

  std::string to_string() const {
    std::ostringstream os;
    os << "tau_K = " << extended_to_string(tau) << ", T - Id is "
       << (max_triangular > truncation ? "zero" : std::to_string(max_triangular) + "-triangular")
       << " (K=" << truncation << "): " << (consistent ? "consistent" : "MISMATCH") << "\n";
    if (!consistent)
      os << counterexample;
    return os.str();
  }
};

/// Compares tau(F) >= k with k-triangularity of T_F - Id for k = 1..K+1.
inline BridgeReport bridge_check(const UniversalElt &f) {
  const int kk = f.truncation();
  BridgeReport report{triangularity(f), kk, 0, true, {}};
  auto n = minus_identity(toeplitz_matrix(f));
  for (int k = 1; k <= kk + 1; ++k) {
    auto cert = is_k_triangular(n, k);
    bool tau_ok = report.tau >= k;
    if (cert.holds)
      report.max_triangular = k;
    if (cert.holds != tau_ok) {
      report.consistent = false;
      report.counterexample += "k=" + std::to_string(k) + ": tau>=k is " +
                               (tau_ok ? "true" : "false") + " but " + cert.to_string();
    }
  }
  bool zero = coindex(n) == kPlusInfinity;
  if (zero != (report.tau == kPlusInfinity)) {
    report.consistent = false;
    report.counterexample += "tau = +inf does not match N = 0\n";
  }
  return report;
}

namespace detail {
inline std::optional<Germ> identity_function(const Germ *) { return Germ::t(); }
inline std::optional<DiffPoly> identity_function(const DiffPoly *) { return std::nullopt; }
} // namespace detail

/// S_l(id) for l = 0..K. With germ coefficients id is the germ t. The
/// universal ring has no element for id: entry 0 is left zero there and a
/// nonzero D^0 coefficient in S_l, l >= 1, throws std::domain_error.
template <DifferentialRing R> std::vector<R> apply_matrix_to_id(const ToeplitzMatrix<R> &t) {
  auto id = detail::identity_function(static_cast<const R *>(nullptr));
  std::vector<R> out;
  for (int l = 0; l <= t.order(); ++l) {
    const auto &op = t.S(l);
    R value = op.coeff(1);
    if (!is_zero(op.coeff(0))) {
      if (!id && l == 0) {
        out.push_back(std::move(value));
        continue;
      }
      if (!id)
        throw std::domain_error("S_" + std::to_string(l) +
                                " has a D^0 term; identity not representable");
      value = value + op.coeff(0) * *id;
    }
    out.push_back(std::move(value));
  }
  return out;
}

} // namespace holo
