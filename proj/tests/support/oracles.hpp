#pragma once

// Test-side reference implementations. Deliberately naive: plain rational
// polynomials, direct substitution and rescanning reduction, sharing no code
// with the library algorithms they check.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "holo/diffpoly.hpp"
#include "holo/germ.hpp"
#include "holo/scalar.hpp"
#include "holo/word.hpp"

namespace oracle {

using Q = mpq_class;
/// Dense polynomial in t, lowest degree first, no trailing zeros.
using QPoly = std::vector<Q>;
/// Truncated power series in eps with polynomial coefficients, index 0..K.
using Series = std::vector<QPoly>;
/// Group element id + sum eps^j f_j as the list f_1..f_K.
using Components = std::vector<QPoly>;
using Letters = std::vector<std::pair<int, int>>; // (generator, +-1)

QPoly trim(QPoly p);
QPoly add(const QPoly &a, const QPoly &b);
QPoly sub(const QPoly &a, const QPoly &b);
QPoly mul(const QPoly &a, const QPoly &b);
QPoly scale(const QPoly &a, const Q &c);
QPoly deriv(const QPoly &a);
QPoly monomial(const Q &c, int k);
QPoly wronskian(const QPoly &f, const QPoly &g);
Q eval(const QPoly &p, const Q &x);

QPoly from_germ(const holo::Germ &g); // throws unless every coefficient is rational
holo::Germ to_germ(const QPoly &p);

Series series_mul(const Series &a, const Series &b);
/// p(x) for a polynomial p and a series x, by Horner's scheme.
Series substitute(const QPoly &p, const Series &x);

/// The series t + sum eps^j f_j.
Series as_series(const Components &f);
/// F(G(t)), by substituting G into every f_j.
Components compose(const Components &f, const Components &g);
/// Fixed-point iteration h = -sum eps^j f_j(t + h).
Components inverse(const Components &f);
/// Coefficient of eps^l in phi(t + sum eps^j f_j).
QPoly pullback(const Components &f, const QPoly &phi, int l);

/// Holonomy of a word as the function x -> g_ln(...g_l1(x)).
Components word_holonomy(const Letters &w, const std::vector<Components> &generators);

/// Free reduction by repeated scanning for adjacent cancelling pairs.
Letters reduce(Letters w);
Letters expand(const holo::CommutatorExpr &e);
Letters letters_of(const holo::Word &w);

/// Largest Melnikov index among the variables of p, by a direct term scan.
int max_order(const holo::DiffPoly &p);

QPoly random_poly(std::mt19937_64 &rng, int max_degree, int bound = 9);
holo::Scalar random_scalar(std::mt19937_64 &rng);

} // namespace oracle
