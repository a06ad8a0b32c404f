#include "holo/workbench.hpp"

#include <sstream>
#include <stdexcept>

namespace holo {

const DiffPoly &HolonomyCache::component(const CommutatorExpr &e, int order) {
  return engine(order).of_expr(e).component(order);
}

UniversalHolonomy &HolonomyCache::engine(int truncation) {
  auto it = engines_.find(truncation);
  if (it == engines_.end())
    it = engines_.emplace(truncation, UniversalHolonomy(truncation)).first;
  return it->second;
}

Germ random_polynomial(std::mt19937_64 &rng, int degree) {
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::uniform_int_distribution<long> lead(1, 9);
  std::vector<Scalar> c;
  for (int k = 0; k < degree; ++k)
    c.emplace_back(coeff(rng));
  long l = lead(rng);
  c.emplace_back(coeff(rng) < 0 ? -l : l);
  return Germ::polynomial(std::move(c));
}

Rational random_rational(std::mt19937_64 &rng) {
  std::uniform_int_distribution<long> num(1, 9), den(1, 5), sign(0, 1);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return sign(rng) ? -q : q;
}

namespace {

using CE = CommutatorExpr;

CE leaf(int g) { return CE::leaf(g); }

CE nested(const std::vector<int> &prefix, CE base) {
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
    base = CE::commutator(leaf(*it), base);
  return base;
}

/// Weight-j brackets on top of each weight-2 base: constant prefixes over
/// `letters` and one alternating prefix.
std::vector<CE> bracket_level(int j, const std::vector<int> &letters,
                              const std::vector<std::pair<int, int>> &pairs) {
  std::vector<CE> out;
  for (auto [a, b] : pairs) {
    CE base = CE::commutator(leaf(a), leaf(b));
    if (j == 2) {
      out.push_back(base);
      continue;
    }
    for (int g : letters)
      out.push_back(nested(std::vector<int>(static_cast<std::size_t>(j - 2), g), base));
    if (j > 3 && letters.size() > 1) {
      std::vector<int> alt;
      for (int k = 0; k < j - 2; ++k)
        alt.push_back(letters[static_cast<std::size_t>(k) % letters.size()]);
      out.push_back(nested(alt, base));
    }
  }
  return out;
}

Germ lambda_times(const Germ &g) { return g * Scalar::lambda(); }

/// Random higher-order periods m_j(d_i), j >= 2, shared by every stage.
std::map<std::pair<int, int>, Germ> higher_periods(int generators, int truncation,
                                                   std::mt19937_64 &rng, int degree) {
  std::map<std::pair<int, int>, Germ> out;
  for (int i = 1; i <= generators; ++i)
    for (int j = 2; j <= truncation; ++j)
      out.emplace(std::make_pair(i, j), random_polynomial(rng, degree));
  return out;
}

Stage make_stage(std::string condition, int generators, int truncation,
                 const std::map<std::pair<int, int>, Germ> &higher,
                 const std::vector<Germ> &first_order) {
  PeriodSpec spec(generators, truncation);
  for (int i = 1; i <= generators; ++i)
    spec.assign(i, 1, first_order[static_cast<std::size_t>(i - 1)]);
  for (const auto &[key, g] : higher)
    spec.assign(key.first, key.second, g);
  return {std::move(condition), std::move(spec)};
}

Germ power(const Germ &g, int n) {
  Germ r(1L);
  for (int k = 0; k < n; ++k)
    r = r * g;
  return r;
}

} // namespace

ExampleTemplate generic_template(int generators) {
  ExampleTemplate t;
  t.name = "generic";
  t.generators = generators;
  t.max_diagonal = 0;
  t.orbit = [generators](int depth) {
    OrbitSpec o;
    std::vector<CE> first;
    std::vector<int> letters;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= generators; ++i) {
      first.push_back(leaf(i));
      letters.push_back(i);
      for (int k = i + 1; k <= generators; ++k)
        pairs.emplace_back(i, k);
    }
    o.set_level(1, first);
    for (int j = 2; j <= depth; ++j)
      o.set_level(j, bracket_level(j, {1, 2}, pairs));
    return o;
  };
  t.stages = [generators](int truncation, std::mt19937_64 &rng, int degree) {
    auto higher = higher_periods(generators, truncation, rng, degree);
    std::vector<Germ> ps, zeros(static_cast<std::size_t>(generators));
    for (int i = 0; i < generators; ++i)
      ps.push_back(lambda_times(random_polynomial(rng, degree)));
    std::vector<Stage> s;
    s.push_back(make_stage("", generators, truncation, higher, ps));
    s.push_back(make_stage("M_1 = 0 on the orbit: eta = g dH + dR, all int_di eta = 0", generators,
                           truncation, higher, zeros));
    return s;
  };
  t.expected_index = [](int r) { return r; };
  return t;
}

ExampleTemplate triangle_template() {
  ExampleTemplate t;
  t.name = "triangle";
  t.generators = 3;
  t.max_diagonal = 0;
  t.orbit = [](int depth) {
    OrbitSpec o;
    o.set_level(1, {leaf(3)});
    for (int j = 2; j <= depth; ++j)
      o.set_level(j, bracket_level(j, {1, 2}, {{1, 2}}));
    return o;
  };
  t.stages = [](int truncation, std::mt19937_64 &rng, int degree) {
    auto higher = higher_periods(3, truncation, rng, degree);
    Germ p0 = random_polynomial(rng, degree);
    Germ p1 = random_polynomial(rng, degree);
    Germ p2 = random_polynomial(rng, degree);
    Rational c = random_rational(rng);
    auto periods = [](const Germ &a, const Germ &b, const Germ &g) {
      return std::vector<Germ>{lambda_times(a - b), lambda_times(b), g};
    };
    std::vector<Stage> s;
    s.push_back(make_stage("", 3, truncation, higher, periods(p1, p2, lambda_times(p0))));
    s.push_back(make_stage("M_1(gamma) = 0: int_d1 = L(p1 - p2), int_d2 = L p2, p1 = " +
                               p1.to_string() + ", p2 = " + p2.to_string(),
                           3, truncation, higher, periods(p1, p2, Germ())));
    Germ p2c = p1 * c;
    s.push_back(make_stage("W(p1, p2) = 0: p2 = c p1, c = " + rational_to_string(c), 3,
                           truncation, higher, periods(p1, p2c, Germ())));
    return s;
  };
  t.expected_index = [](int r) { return r + 1; };
  return t;
}

ExampleTemplate lines_template(int lines) {
  if (lines < 3)
    throw std::invalid_argument("lines template needs at least 3 lines");
  const int cycles = lines - 1;
  ExampleTemplate t;
  t.name = "lines";
  t.generators = lines;
  t.max_diagonal = 1;
  t.orbit = [cycles](int depth) {
    OrbitSpec o;
    o.set_level(1, {leaf(cycles + 1)});
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= cycles; ++i)
      for (int j = i + 1; j <= cycles; j += 2)
        pairs.emplace_back(i, j);
    for (int j = 2; j <= depth; ++j)
      o.set_level(j, bracket_level(j, {1, 2}, pairs));
    return o;
  };
  t.stages = [cycles, lines](int truncation, std::mt19937_64 &rng, int degree) {
    auto higher = higher_periods(lines, truncation, rng, degree);
    Germ p0 = random_polynomial(rng, degree);
    std::vector<Germ> ps;
    for (int i = 0; i < cycles; ++i)
      ps.push_back(random_polynomial(rng, degree));
    std::vector<Germ> first;
    for (const auto &p : ps)
      first.push_back(lambda_times(p));
    std::vector<Stage> s;
    first.push_back(lambda_times(p0));
    s.push_back(make_stage("", lines, truncation, higher, first));
    first.back() = Germ();
    s.push_back(make_stage("M_1(gamma) = 0: int_di = L p_i", lines, truncation, higher, first));
    std::string cond = "W(p_i, p_j) = 0: p_i = c_i p_1";
    for (int i = 1; i < cycles; ++i) {
      Rational c = random_rational(rng);
      first[static_cast<std::size_t>(i)] = lambda_times(ps[0] * c);
      cond += ", c_" + std::to_string(i + 1) + " = " + rational_to_string(c);
    }
    s.push_back(make_stage(cond, lines, truncation, higher, first));
    return s;
  };
  t.expected_index = [](int r) { return r + 1; };
  return t;
}

CommutatorExpr square_orbit_generator(int j) {
  if (j < 2)
    throw std::invalid_argument("square orbit generators start at level 2");
  CE d12 = CE::product({leaf(1), leaf(2)});
  CE d23 = CE::product({leaf(2), leaf(3)});
  CE inner = d23;
  for (int k = 0; k < j - 2; ++k)
    inner = CE::commutator(leaf(2), inner);
  return CE::commutator(d12, inner);
}

std::pair<Germ, Germ> square_euler_family(const Rational &b, const Rational &kappa,
                                          const Rational &s, int a) {
  Germ shifted = Germ::polynomial({Scalar(Rational(-s)), Scalar(1)});
  Germ p2 = shifted * b;
  Germ p1 = p2 + power(shifted, a) * kappa;
  return {p1, p2};
}

namespace {

std::vector<Germ> square_periods(const Germ &p1, const Germ &p2, const Germ &p3,
                                 const Germ &gamma) {
  return {lambda_times(p1 - p3), lambda_times(p3 - p2), lambda_times(p2), gamma};
}

} // namespace

ExampleTemplate square_template() {
  ExampleTemplate t;
  t.name = "square";
  t.generators = 4;
  t.max_diagonal = 0;
  t.orbit = [](int depth) {
    OrbitSpec o;
    o.set_level(1, {leaf(4)});
    for (int j = 2; j <= depth; ++j)
      o.set_level(j, {square_orbit_generator(j)});
    return o;
  };
  t.stages = [](int truncation, std::mt19937_64 &rng, int degree) {
    auto higher = higher_periods(4, truncation, rng, degree);
    Germ p0 = random_polynomial(rng, degree);
    Germ p1 = random_polynomial(rng, degree);
    Germ p2 = random_polynomial(rng, degree);
    Germ p3 = random_polynomial(rng, degree);
    Rational mu = random_rational(rng);
    std::vector<Stage> s;
    s.push_back(make_stage("", 4, truncation, higher, square_periods(p1, p2, p3, lambda_times(p0))));
    s.push_back(make_stage("M_1(gamma) = 0: int_d1 = L(p1 - p3), int_d2 = L(p3 - p2), "
                           "int_d3 = L p2",
                           4, truncation, higher, square_periods(p1, p2, p3, Germ())));
    s.push_back(make_stage("W(p1 - p2, p3) = 0: p3 = mu (p1 - p2), mu = " +
                               rational_to_string(mu),
                           4, truncation, higher,
                           square_periods(p1, p2, (p1 - p2) * mu, Germ())));
    Rational b = random_rational(rng), kappa = random_rational(rng), shift = random_rational(rng);
    int a = std::uniform_int_distribution<int>(2, 5)(rng);
    auto [q1, q2] = square_euler_family(b, kappa, shift, a);
    s.push_back(make_stage("W(p1 - p2, W(p2, p1)) = 0: p2 = b (t - s), p1 = p2 + kappa (t - s)^" +
                               std::to_string(a) + ", b = " + rational_to_string(b) +
                               ", kappa = " + rational_to_string(kappa) +
                               ", s = " + rational_to_string(shift),
                           4, truncation, higher,
                           square_periods(q1, q2, (q1 - q2) * mu, Germ())));
    return s;
  };
  t.expected_index = [](int r) { return r + 2; };
  return t;
}

ExampleTemplate template_by_name(const std::string &name) {
  if (name == "generic")
    return generic_template();
  if (name == "triangle")
    return triangle_template();
  if (name == "lines")
    return lines_template();
  if (name == "square")
    return square_template();
  throw std::invalid_argument("unknown example '" + name +
                              "' (expected generic, triangle, lines or square)");
}

namespace {

std::vector<DiagonalEntry> diagonal_entries(const std::vector<CE> &gens, int order,
                                            const PeriodSpec &spec, HolonomyCache &cache) {
  std::vector<DiagonalEntry> out;
  for (const auto &g : gens) {
    Germ v = evaluate_poly(cache.component(g, order), spec);
    ZeroVerdict verdict = germ_is_zero(v);
    out.push_back({g.to_string(), std::move(v), verdict});
  }
  return out;
}

bool all_vanish(const std::vector<DiagonalEntry> &entries) {
  for (const auto &e : entries)
    if (!e.verdict.vanishes())
      return false;
  return true;
}

} // namespace

StabilizationReport diagonal_stabilization(const ExampleTemplate &t, int r, int truncation,
                                           std::uint64_t seed, int degree, HolonomyCache *cache) {
  if (r < 1)
    throw std::invalid_argument("diagonal index must be >= 1");
  if (truncation < r)
    throw std::invalid_argument("truncation order below the diagonal index");
  StabilizationReport report{t.name, r, truncation, 0, t.expected_index(r), false, {}, {}};
  if (t.max_diagonal != 0 && r > t.max_diagonal) {
    report.failure = "template '" + t.name + "' carries period data only for diagonals 1.." +
                     std::to_string(t.max_diagonal);
    return report;
  }
  HolonomyCache local;
  HolonomyCache &hc = cache ? *cache : local;
  // the induced deformation of diagonal r reuses the first-diagonal template
  const int depth = truncation - r + 1;
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(r - 1));
  auto stages = t.stages(depth, rng, degree);
  OrbitSpec orbit = t.orbit(depth);

  std::size_t stage = 0;
  for (int s = 1; s <= depth; ++s) {
    DiagonalRow row{s + r - 1, s, static_cast<int>(stage), {}, std::nullopt, {}, true};
    row.before = diagonal_entries(orbit.level(s), s, stages[stage].spec, hc);
    for (const auto &e : row.before)
      if (!e.verdict.vanishes()) {
        row.witness = e;
        break;
      }
    if (row.witness) {
      if (stage + 1 >= stages.size()) {
        row.vanishes_after = false;
        report.rows.push_back(std::move(row));
        report.failure = "row " + std::to_string(s + r - 1) +
                         " is nonzero and the template has no further condition";
        return report;
      }
      ++stage;
      row.stage = static_cast<int>(stage);
      row.condition = stages[stage].condition;
      report.index = s + r - 1;
      for (int q = 1; q <= s; ++q)
        if (!all_vanish(diagonal_entries(orbit.level(q), q, stages[stage].spec, hc))) {
          row.vanishes_after = false;
          report.rows.push_back(std::move(row));
          report.failure = "row " + std::to_string(q + r - 1) + " does not vanish after " +
                           stages[stage].condition;
          return report;
        }
    }
    report.rows.push_back(std::move(row));
  }
  report.confirmed = report.index == report.expected && report.index < truncation;
  if (!report.confirmed && report.index >= truncation)
    report.failure = "stabilization not observed below K = " + std::to_string(truncation);
  else if (!report.confirmed)
    report.failure = "found n_" + std::to_string(r) + " = " + std::to_string(report.index) +
                     ", expected " + std::to_string(report.expected);
  return report;
}

std::string StabilizationReport::to_string() const {
  std::ostringstream os;
  os << "example " << name << ": diagonal " << diagonal << ", K = " << truncation << "\n";
  if (diagonal > 1)
    os << "induced periods, Melnikov index shifted by " << diagonal - 1 << "\n";
  for (const auto &row : rows) {
    os << "row " << row.row << " (level " << row.level << "): ";
    if (row.witness) {
      os << "nonzero, witness M_" << row.row << "(" << row.witness->expr
         << ") = " << row.witness->value.to_string() << "\n";
      os << "  impose " << row.condition << "\n";
      os << "  rows <= " << row.row << (row.vanishes_after ? " vanish exactly" : " DO NOT vanish")
         << "\n";
    } else {
      os << "vanishes exactly on " << row.before.size() << " orbit generator"
         << (row.before.size() == 1 ? "" : "s") << "\n";
    }
  }
  if (!failure.empty())
    os << "failure: " << failure << "\n";
  os << "n_" << diagonal << " = " << index << (confirmed ? " CONFIRMED" : " NOT CONFIRMED")
     << " (K=" << truncation << ")\n";
  return os.str();
}

Germ triangle_m2(const Germ &p1, const Germ &p2, HolonomyCache *cache) {
  HolonomyCache local;
  HolonomyCache &hc = cache ? *cache : local;
  PeriodSpec spec(2, 2);
  spec.assign(1, 1, lambda_times(p1 - p2));
  spec.assign(2, 1, lambda_times(p2));
  spec.fill_zero();
  return evaluate_poly(hc.component(CE::commutator(leaf(1), leaf(2)), 2), spec);
}

Germ lines_m2(int i, int j, const std::vector<Germ> &ps, HolonomyCache *cache) {
  const int n = static_cast<int>(ps.size());
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::out_of_range("line cycle index outside 1.." + std::to_string(n));
  HolonomyCache local;
  HolonomyCache &hc = cache ? *cache : local;
  PeriodSpec spec(n, 2);
  for (int k = 1; k <= n; ++k)
    spec.assign(k, 1, lambda_times(ps[static_cast<std::size_t>(k - 1)]));
  spec.fill_zero();
  return evaluate_poly(hc.component(CE::commutator(leaf(i), leaf(j)), 2), spec);
}

SquareChainReport square_chain(const Germ &p1, const Germ &p2, const Germ &p3, const Scalar &mu,
                               int truncation, HolonomyCache *cache) {
  if (truncation < 3)
    throw std::invalid_argument("square chain needs K >= 3");
  HolonomyCache local;
  HolonomyCache &hc = cache ? *cache : local;
  auto spec_for = [truncation](const Germ &a, const Germ &b, const Germ &c) {
    PeriodSpec spec(4, truncation);
    auto first = square_periods(a, b, c, Germ());
    for (int i = 1; i <= 4; ++i)
      spec.assign(i, 1, first[static_cast<std::size_t>(i - 1)]);
    spec.fill_zero();
    return spec;
  };
  const Scalar l2 = Scalar::lambda(2), l3 = Scalar::lambda(3);
  SquareChainReport r{truncation, {}, {}, false, {}, {}, false, false, {}, true};

  r.m2 = evaluate_poly(hc.component(square_orbit_generator(2), 2), spec_for(p1, p2, p3));
  r.m2_expected = wronskian(p1 - p2, p3) * l2;
  r.m2_holds = r.m2 == r.m2_expected;

  Germ q3 = (p1 - p2) * mu;
  PeriodSpec spec = spec_for(p1, p2, q3);
  r.m3 = evaluate_poly(hc.component(square_orbit_generator(3), 3), spec);
  r.m3_expected = wronskian(p1 - p2, wronskian(p2, p1)) * (-(mu * l3));
  r.m3_holds = r.m3 == r.m3_expected;

  r.tail_applicable = is_zero(wronskian(p1 - p2, wronskian(p2, p1)));
  if (r.tail_applicable)
    for (int j = 4; j <= truncation; ++j) {
      Germ v = evaluate_poly(hc.component(square_orbit_generator(j), j), spec);
      r.tail_holds = r.tail_holds && is_zero(v);
      r.tail.emplace_back(j, std::move(v));
    }
  return r;
}

std::string SquareChainReport::to_string() const {
  std::ostringstream os;
  os << "M_2(v_2) = " << m2.to_string() << (m2_holds ? "  = L^2 W(p1 - p2, p3)" : "  MISMATCH")
     << "\n";
  os << "M_3(v_3) = " << m3.to_string()
     << (m3_holds ? "  = -mu L^3 W(p1 - p2, W(p2, p1))" : "  MISMATCH") << "\n";
  if (!tail_applicable)
    os << "rows 4.." << truncation << ": not checked, W(p1 - p2, W(p2, p1)) != 0\n";
  for (const auto &[j, v] : tail)
    os << "M_" << j << "(v_" << j << ") = " << v.to_string() << "\n";
  return os.str();
}

} // namespace holo
