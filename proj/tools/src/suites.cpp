#include "holo_cli/suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "holo/evaluation.hpp"
#include "holo/liealg.hpp"
#include "holo/operators.hpp"
#include "holo/workbench.hpp"

namespace holo::cli {

std::string Check::line() const {
  return "CHECK " + name + ": " + (pass ? "PASS" : "FAIL") + " — " + detail;
}

namespace {

using CE = CommutatorExpr;
using Clock = std::chrono::steady_clock;

std::string seconds_since(Clock::time_point t0) {
  std::ostringstream os;
  os.precision(3);
  os << std::chrono::duration<double>(Clock::now() - t0).count() << " s";
  return os.str();
}

/// Counts failures over `trials` runs of `body`, keeping the first
/// counterexample description.
struct Tally {
  int runs = 0;
  int failures = 0;
  std::string first;

  void record(bool ok, const std::function<std::string()> &describe) {
    ++runs;
    if (!ok && failures++ == 0)
      first = describe();
  }
  Check check(const std::string &name, Clock::time_point t0) const {
    std::ostringstream os;
    os << runs - failures << "/" << runs << " exact, " << seconds_since(t0);
    if (failures)
      os << "; first counterexample: " << first;
    return {name, failures == 0, os.str()};
  }
};

} // namespace

std::vector<CommutatorExpr> expression_corpus(int generators, int max_weight) {
  std::vector<std::vector<CE>> by_weight(static_cast<std::size_t>(max_weight) + 1);
  for (int i = 1; i <= generators; ++i)
    by_weight[1].push_back(CE::leaf(i));
  for (int w = 2; w <= max_weight; ++w) {
    for (const auto &a : by_weight[1])
      for (const auto &x : by_weight[static_cast<std::size_t>(w - 1)])
        if (!(a == x))
          by_weight[static_cast<std::size_t>(w)].push_back(CE::commutator(a, x));
    if (w == 4)
      for (const auto &x : by_weight[2])
        for (const auto &y : by_weight[2])
          if (!(x == y))
            by_weight[4].push_back(CE::commutator(x, y));
  }
  std::vector<CE> out;
  for (const auto &level : by_weight)
    out.insert(out.end(), level.begin(), level.end());
  return out;
}

CommutatorExpr random_expression(std::mt19937_64 &rng, int generators, int max_weight) {
  std::uniform_int_distribution<int> gen(1, generators);
  std::function<CE(int)> build = [&](int budget) -> CE {
    std::uniform_int_distribution<int> kind(0, budget >= 2 ? 4 : 1);
    switch (kind(rng)) {
    case 0:
      return CE::leaf(gen(rng));
    case 1:
      return CE::inverse(CE::leaf(gen(rng)));
    case 2: {
      int left = std::uniform_int_distribution<int>(1, budget - 1)(rng);
      return CE::commutator(build(left), build(budget - left));
    }
    case 3:
      return CE::inverse(build(budget));
    default:
      return CE::product({build(budget), build(budget)});
    }
  };
  for (;;) {
    CE e = build(max_weight);
    int w = weight(e);
    if (w >= 1 && w <= max_weight)
      return e;
  }
}

Word random_word(std::mt19937_64 &rng, int generators, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length), gen(1, generators), sign(0, 1);
  std::vector<Letter> letters;
  int n = len(rng);
  for (int k = 0; k < n; ++k)
    letters.push_back({gen(rng), sign(rng) ? 1 : -1});
  return Word(std::move(letters));
}

UniversalElt random_universal(std::mt19937_64 &rng, int truncation, int tau_min,
                              int generators) {
  std::uniform_int_distribution<int> gen(1, generators), deriv(0, 1), terms(1, 2), degree(1, 2);
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::vector<DiffPoly> comps;
  for (int j = 1; j <= truncation; ++j) {
    int max_order = j - tau_min + 1;
    DiffPoly c;
    if (max_order >= 1) {
      std::uniform_int_distribution<int> order(1, max_order);
      while (c.is_zero()) {
        for (int t = terms(rng); t > 0; --t) {
          DiffPoly mono(coeff(rng));
          for (int d = degree(rng); d > 0; --d)
            mono = mono * DiffPoly::var(order(rng), gen(rng), deriv(rng));
          c = c + mono;
        }
      }
    }
    comps.push_back(std::move(c));
  }
  return UniversalElt::from_components(std::move(comps));
}

namespace {

std::vector<Check> group_suite(const SuiteOptions &opt) {
  const int K = std::min(opt.K, 4);
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> tau_pick(1, 2);
  std::vector<Check> out;
  auto t0 = Clock::now();

  Tally assoc, inv, anti, tinv, tcomp, tcomm;
  UniversalHolonomy engine(K);
  for (int n = 0; n < opt.trials; ++n) {
    auto f = random_universal(rng, K, tau_pick(rng));
    auto g = random_universal(rng, K, tau_pick(rng));
    auto h = random_universal(rng, K, 1);
    assoc.record(compose(compose(f, g), h) == compose(f, compose(g, h)),
                 [&] { return "F = " + f.to_string(); });
    auto fi = inverse(f);
    inv.record(compose(f, fi).is_identity() && compose(fi, f).is_identity(),
               [&] { return "F = " + f.to_string(); });
    Word u = random_word(rng, 3, opt.size), v = random_word(rng, 3, opt.size);
    anti.record(engine.of_word(u * v) == compose(engine.of_word(v), engine.of_word(u)),
                [&] { return "u = " + u.to_string() + ", v = " + v.to_string(); });
    tinv.record(triangularity(fi) == triangularity(f), [&] { return "F = " + f.to_string(); });
    tcomp.record(triangularity(compose(f, g)) >= std::min(triangularity(f), triangularity(g)),
                 [&] { return "F = " + f.to_string(); });
    long sum = static_cast<long>(triangularity(f)) + triangularity(g);
    int tc = triangularity(group_commutator(f, g));
    tcomm.record(tc == kPlusInfinity || tc >= sum, [&] { return "F = " + f.to_string(); });
  }
  out.push_back(assoc.check("group.associativity (K=" + std::to_string(K) + ")", t0));
  out.push_back(inv.check("group.inverse", t0));
  out.push_back(anti.check("group.anti-homomorphism", t0));
  out.push_back(tinv.check("tau.inverse", t0));
  out.push_back(tcomp.check("tau.compose", t0));
  out.push_back(tcomm.check("tau.commutator", t0));
  return out;
}

std::vector<Check> structure_suite(const SuiteOptions &opt) {
  auto t0 = Clock::now();
  std::mt19937_64 rng(opt.seed);
  UniversalHolonomy engine(opt.K);
  auto corpus = expression_corpus(3, opt.size);
  Tally tally;
  auto run = [&](const CE &e) {
    auto rep = check_structure_theorem(e, engine);
    tally.record(rep.holds, [&] { return rep.to_string(); });
  };
  for (const auto &e : corpus)
    run(e);
  for (int n = 0; n < opt.trials; ++n)
    run(random_expression(rng, 3, opt.size));
  return {tally.check("structure.length-bound (weight <= " + std::to_string(opt.size) +
                          ", K=" + std::to_string(opt.K) + ", " +
                          std::to_string(corpus.size()) + " corpus + " +
                          std::to_string(opt.trials) + " random)",
                      t0)};
}

std::vector<Check> operators_suite(const SuiteOptions &opt) {
  const int K = std::min(opt.K, 4);
  std::mt19937_64 rng(opt.seed);
  std::vector<Check> out;
  auto t0 = Clock::now();
  UniversalHolonomy engine(K);

  Tally hom, comm, sid;
  for (int n = 0; n < opt.trials; ++n) {
    Word a = random_word(rng, 3, 3), b = random_word(rng, 3, 3);
    auto ta = toeplitz_matrix(engine.of_word(a)), tb = toeplitz_matrix(engine.of_word(b));
    hom.record(toeplitz_matrix(engine.of_word(a * b)) == matrix_mul(ta, tb),
               [&] { return "w1 = " + a.to_string() + ", w2 = " + b.to_string(); });
    comm.record(matrix_commutator(ta, tb) ==
                    toeplitz_matrix(engine.of_expr(CE::commutator(CE::from_word(a),
                                                                  CE::from_word(b)))),
                [&] { return "w1 = " + a.to_string() + ", w2 = " + b.to_string(); });
    auto f = random_universal(rng, K, 1);
    auto ids = apply_matrix_to_id(toeplitz_matrix(f));
    bool ok = true;
    for (int l = 1; l <= K; ++l)
      ok = ok && ids[static_cast<std::size_t>(l)] == f.component(l);
    sid.record(ok, [&] { return "F = " + f.to_string(); });
  }
  out.push_back(hom.check("operators.representation T(P(w1 w2)) = T(P(w1)) T(P(w2)) (K=" +
                              std::to_string(K) + ")",
                          t0));
  out.push_back(comm.check("operators.commutator", t0));
  out.push_back(sid.check("operators.S_l(id) = M_l", t0));

  auto t1 = Clock::now();
  UniversalHolonomy big(opt.K);
  Tally bridge;
  for (const auto &e : expression_corpus(3, opt.size)) {
    auto rep = bridge_check(big.of_expr(e));
    bridge.record(rep.consistent, [&] { return e.to_string() + ": " + rep.to_string(); });
  }
  bridge.record(bridge_check(UniversalElt::identity(opt.K)).consistent,
                [] { return std::string("identity"); });
  out.push_back(bridge.check("operators.bridge tau <=> k-triangular (K=" +
                                 std::to_string(opt.K) + ")",
                             t1));
  return out;
}

std::vector<Check> t4_suite(const SuiteOptions &opt) {
  auto t0 = Clock::now();
  std::vector<Check> out;
  std::array<DiffPoly, 5> x;
  for (int i = 0; i < 5; ++i)
    x[static_cast<std::size_t>(i)] = DiffPoly::var(1, i + 1);
  auto summands = t4_summands(x);
  int nonzero = 0;
  for (const auto &s : summands)
    nonzero += s.is_zero() ? 0 : 1;
  DiffPoly total = t4_identity(x);
  out.push_back({"t4.symbolic", total.is_zero() && nonzero == 24,
                 "sum over S_4 = " + total.to_string() + ", " + std::to_string(nonzero) +
                     "/24 summands nonzero, " + seconds_since(t0)});

  auto t1 = Clock::now();
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> deg(0, 4);
  Tally tally;
  const int trials = std::min(opt.trials, 20);
  for (int n = 0; n < trials; ++n) {
    std::array<Germ, 5> g;
    for (auto &p : g)
      p = random_polynomial(rng, deg(rng));
    Germ v = t4_identity(g);
    tally.record(is_zero(v), [&] { return v.to_string(); });
  }
  out.push_back(tally.check("t4.germs (degree <= 4)", t1));
  return out;
}

std::vector<Check> graded_suite(const SuiteOptions &opt) {
  auto t0 = Clock::now();
  const int K = 4;
  UniversalHolonomy engine(K);
  auto corpus = expression_corpus(3, 3);
  Tally tally;
  for (const auto &a : corpus)
    for (const auto &b : corpus) {
      if (weight(a) + weight(b) > K)
        continue;
      auto rep = graded_consistency(a, b, engine);
      tally.record(rep.holds, [&] { return rep.to_string(); });
    }
  (void)opt;
  return {tally.check("graded.component = W (weight sum <= 4)", t0)};
}

PeriodSpec random_spec(std::mt19937_64 &rng, int generators, int truncation, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  PeriodSpec spec(generators, truncation);
  for (int i = 1; i <= generators; ++i)
    for (int j = 1; j <= truncation; ++j)
      spec.assign(i, j, random_polynomial(rng, deg(rng)));
  return spec;
}

std::vector<Check> universality_suite(const SuiteOptions &opt) {
  auto t0 = Clock::now();
  const int K = std::min(opt.K, 4);
  std::mt19937_64 rng(opt.seed);
  UniversalHolonomy engine(K);
  Tally tally;
  for (int n = 0; n < opt.trials; ++n) {
    Word w = random_word(rng, 3, 6);
    PeriodSpec spec = random_spec(rng, 3, K, 3);
    tally.record(evaluate_holonomy(engine.of_word(w), spec) == germ_holonomy(w, spec),
                 [&] { return "w = " + w.to_string(); });
  }
  return {tally.check("universality ev o P = germ holonomy (K=" + std::to_string(K) + ")", t0)};
}

} // namespace

std::vector<DiffPoly> witness_corpus() {
  auto m = [](int j, int i, int a = 0) { return DiffPoly::var(j, i, a); };
  std::vector<DiffPoly> c{
      m(1, 1),
      m(1, 1) * m(1, 2, 1) - m(1, 1, 1) * m(1, 2),
      m(1, 1) * m(1, 1) - m(1, 2) * m(1, 3),
      m(2, 1) - m(1, 1, 1),
      m(1, 1, 2) * m(1, 2) - DiffPoly(Scalar::lambda()) * m(2, 2, 1),
      m(1, 1) * m(1, 1) * m(1, 1) + m(3, 3),
      m(1, 1, 3) - m(1, 2, 3),
      m(2, 1) * m(2, 2) - m(2, 2) * m(2, 1) + m(1, 3, 2),
      DiffPoly(Scalar::i()) * m(1, 2) + m(2, 3, 1) * m(1, 1),
      m(1, 1, 1) * m(1, 1, 1) - m(1, 1) * m(1, 1, 2),
  };
  UniversalHolonomy engine(4);
  for (const auto &e : expression_corpus(3, 3)) {
    if (c.size() >= 20)
      break;
    if (weight(e) < 2)
      continue;
    c.push_back(engine.of_expr(e).component(weight(e) + 1));
  }
  return c;
}

namespace {

std::vector<Check> witness_suite(const SuiteOptions &opt) {
  auto t0 = Clock::now();
  Tally tally;
  int worst = 0;
  for (const auto &p : witness_corpus()) {
    auto w = random_jet_witness(p, 100, opt.seed);
    if (w)
      worst = std::max(worst, w->trial);
    tally.record(w.has_value(), [&] { return "not_found for " + p.to_string(); });
  }
  Check found = tally.check("witness.corpus (100 trials each)", t0);
  found.detail += ", max trial " + std::to_string(worst);

  auto t1 = Clock::now();
  std::array<DiffPoly, 5> x;
  for (int i = 0; i < 5; ++i)
    x[static_cast<std::size_t>(i)] = DiffPoly::var(1, i + 1);
  auto t4 = random_jet_witness(t4_summands(x), 100, opt.seed);
  Check none{"witness.t4 not_found", !t4.has_value(),
             (t4 ? "unexpected witness at trial " + std::to_string(t4->trial)
                 : std::string("not_found after 100 trials")) +
                 ", " + seconds_since(t1)};
  return {found, none};
}

std::vector<Check> triangle_suite(const SuiteOptions &opt) {
  auto t0 = Clock::now();
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> deg(0, 5);
  HolonomyCache cache;
  Tally exact, prop;
  const Scalar l2 = Scalar::lambda(2);
  for (int n = 0; n < opt.trials; ++n) {
    Germ p1 = random_polynomial(rng, deg(rng)), p2 = random_polynomial(rng, deg(rng));
    Germ v = triangle_m2(p1, p2, &cache);
    exact.record(v == wronskian(p1, p2) * l2,
                 [&] { return "p1 = " + p1.to_string() + ", p2 = " + p2.to_string(); });
    Rational c = random_rational(rng);
    prop.record(is_zero(triangle_m2(p1, p1 * c, &cache)),
                [&] { return "p1 = " + p1.to_string(); });
  }
  return {exact.check("triangle.M2 = L^2 W(p1, p2)", t0),
          prop.check("triangle.proportional => 0", t0)};
}

std::vector<Check> square_suite(const SuiteOptions &opt) {
  auto t0 = Clock::now();
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> deg(0, 5), expo(2, 5);
  HolonomyCache cache;
  Tally m2, m3, tail;
  const int K = std::max(opt.K, 4);
  for (int n = 0; n < opt.trials; ++n) {
    Germ p1 = random_polynomial(rng, deg(rng)), p2 = random_polynomial(rng, deg(rng)),
         p3 = random_polynomial(rng, deg(rng));
    Scalar mu(random_rational(rng));
    auto r = square_chain(p1, p2, p3, mu, 3, &cache);
    m2.record(r.m2_holds, [&] { return r.to_string(); });
    m3.record(r.m3_holds, [&] { return r.to_string(); });
    auto [q1, q2] = square_euler_family(random_rational(rng), random_rational(rng),
                                        random_rational(rng), expo(rng));
    auto e = square_chain(q1, q2, (q1 - q2) * mu, mu, K, &cache);
    tail.record(e.tail_applicable && e.holds(), [&] { return e.to_string(); });
  }
  return {m2.check("square.M2(v2) = L^2 W(p1 - p2, p3)", t0),
          m3.check("square.M3(v3) = -mu L^3 W(p1 - p2, W(p2, p1))", t0),
          tail.check("square.M_j(v_j) = 0 for 4 <= j <= " + std::to_string(K), t0)};
}

std::vector<Check> examples_suite(const SuiteOptions &opt) {
  std::vector<Check> out;
  HolonomyCache cache;
  for (const char *name : {"generic", "triangle", "square"}) {
    auto t0 = Clock::now();
    auto rep = diagonal_stabilization(template_by_name(name), 1, opt.K, opt.seed, opt.degree,
                                      &cache);
    out.push_back({std::string("example.") + name, rep.confirmed,
                   "n_1 = " + std::to_string(rep.index) + ", expected " +
                       std::to_string(rep.expected) + " (K=" + std::to_string(opt.K) + "), " +
                       seconds_since(t0) + (rep.failure.empty() ? "" : "; " + rep.failure)});
  }
  return out;
}

const std::map<std::string, std::function<std::vector<Check>(const SuiteOptions &)>> &
suite_table() {
  static const std::map<std::string, std::function<std::vector<Check>(const SuiteOptions &)>>
      table{{"group-axioms", group_suite},   {"structure", structure_suite},
            {"operators", operators_suite},  {"t4", t4_suite},
            {"graded", graded_suite},        {"universality", universality_suite},
            {"witness", witness_suite},      {"triangle", triangle_suite},
            {"square", square_suite},        {"examples", examples_suite}};
  return table;
}

} // namespace

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto &[k, v] : suite_table())
      n.push_back(k);
    n.push_back("all");
    return n;
  }();
  return names;
}

std::vector<Check> run_suite(const std::string &name, const SuiteOptions &opt) {
  if (name == "all") {
    std::vector<Check> all;
    for (const auto &[k, fn] : suite_table()) {
      auto part = fn(opt);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  auto it = suite_table().find(name);
  if (it == suite_table().end())
    throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second(opt);
}

} // namespace holo::cli
