#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "holo/group.hpp"
#include "holo/holonomy.hpp"

namespace holo {

/// [a, b] = a b' - a' b, the bracket of the vector fields a D and b D.
template <DifferentialRing R> R da_bracket(const R &a, const R &b) {
  return a * derive(b) - derive(a) * b;
}

/// sgn(beta) [X_b1, [X_b2, [X_b3, [X_b4, X_5]]]] for each beta in S_4, in
/// lexicographic permutation order.
template <DifferentialRing R> std::vector<R> t4_summands(const std::array<R, 5> &x) {
  std::array<int, 4> perm{0, 1, 2, 3};
  std::vector<R> out;
  do {
    int inversions = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (perm[a] > perm[b])
          ++inversions;
    R v = x[4];
    for (int k = 3; k >= 0; --k)
      v = da_bracket(x[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])], v);
    out.push_back(inversions % 2 ? -v : v);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

template <DifferentialRing R> R t4_identity(const std::array<R, 5> &x) {
  R sum;
  for (const auto &s : t4_summands(x))
    sum = sum + s;
  return sum;
}

struct GradedReport {
  std::string left;
  std::string right;
  int weight_left;
  int weight_right;
  int order;
  DiffPoly component; // order-(k+k') component of P([e1,e2])
  DiffPoly bracket;   // W(m_k(e1), m_k'(e2))
  bool holds;

  std::string to_string() const;
};

/// Compares the order-(k+k') component of P([e1,e2]) with
/// W(component k of P(e1), component k' of P(e2)), k = weight(e1),
/// k' = weight(e2). Throws std::invalid_argument when k+k' > K.
GradedReport graded_consistency(const CommutatorExpr &e1, const CommutatorExpr &e2,
                                UniversalHolonomy &engine);
GradedReport graded_consistency(const CommutatorExpr &e1, const CommutatorExpr &e2, int truncation);

} // namespace holo
