#include "holo/evaluation.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

namespace holo {

namespace {

std::string variable_name(int generator, int order) {
  return "m[" + std::to_string(order) + "](d" + std::to_string(generator) + ")";
}

} // namespace

PeriodSpec::PeriodSpec(int generators, int truncation)
    : generators_(generators), truncation_(truncation) {
  if (generators < 1)
    throw std::invalid_argument("generator count must be >= 1");
  if (truncation < 1)
    throw std::invalid_argument("truncation order must be >= 1");
}

void PeriodSpec::assign(int generator, int order, Germ value) {
  if (generator < 1 || generator > generators_)
    throw std::out_of_range("generator d" + std::to_string(generator) + " outside 1.." +
                            std::to_string(generators_));
  if (order < 1 || order > truncation_)
    throw std::out_of_range("Melnikov index " + std::to_string(order) + " outside 1.." +
                            std::to_string(truncation_));
  values_.insert_or_assign({generator, order}, std::move(value));
}

bool PeriodSpec::has(int generator, int order) const {
  return values_.count({generator, order}) > 0;
}

const Germ &PeriodSpec::at(int generator, int order) const {
  auto it = values_.find({generator, order});
  if (it == values_.end())
    throw std::out_of_range("no germ assigned to " + variable_name(generator, order));
  return it->second;
}

bool PeriodSpec::is_total() const {
  return static_cast<long>(values_.size()) == static_cast<long>(generators_) * truncation_;
}

void PeriodSpec::fill_zero() {
  for (int i = 1; i <= generators_; ++i)
    for (int j = 1; j <= truncation_; ++j)
      values_.try_emplace({i, j}, Germ());
}

void OrbitSpec::set_level(int level, std::vector<CommutatorExpr> generators) {
  if (level < 1)
    throw std::invalid_argument("orbit level must be >= 1");
  for (const auto &g : generators)
    if (weight(g) < level)
      throw std::invalid_argument("orbit generator " + g.to_string() + " has weight " +
                                  extended_to_string(weight(g)) + " < level " +
                                  std::to_string(level));
  if (static_cast<int>(levels_.size()) < level)
    levels_.resize(static_cast<std::size_t>(level));
  levels_[static_cast<std::size_t>(level - 1)] = std::move(generators);
}

const std::vector<CommutatorExpr> &OrbitSpec::level(int level) const {
  static const std::vector<CommutatorExpr> empty;
  if (level < 1 || level > depth())
    return empty;
  return levels_[static_cast<std::size_t>(level - 1)];
}

namespace {

class Evaluator {
public:
  explicit Evaluator(const PeriodSpec &spec) : spec_(spec) {}

  const Germ &variable(std::uint32_t code) {
    auto it = cache_.find(code);
    if (it != cache_.end())
      return it->second;
    DiffVar v = DiffVar::from_code(code);
    Germ g;
    if (v.derivative == 0) {
      g = spec_.at(v.generator, v.order);
    } else {
      const Germ &base = spec_.at(v.generator, v.order);
      if (base.is_jet() && base.precision() < v.derivative)
        throw std::domain_error("jet for " + variable_name(v.generator, v.order) +
                                " has precision " + std::to_string(base.precision()) +
                                ", derivative order " + std::to_string(v.derivative) +
                                " required");
      DiffVar lower = v;
      lower.derivative -= 1;
      g = germ_derive(variable(lower.code()));
    }
    return cache_.emplace(code, std::move(g)).first->second;
  }

  Germ operator()(const DiffPoly &p) {
    Germ sum;
    for (const auto &term : p.terms()) {
      Germ prod(term.coeff);
      for (auto code : term.monomial) {
        prod = prod * variable(code);
      }
      sum += prod;
    }
    return sum;
  }

private:
  const PeriodSpec &spec_;
  std::map<std::uint32_t, Germ> cache_;
};

} // namespace

Germ evaluate_poly(const DiffPoly &p, const PeriodSpec &spec) {
  Evaluator ev(spec);
  return ev(p);
}

GermElt evaluate_holonomy(const UniversalElt &f, const PeriodSpec &spec) {
  Evaluator ev(spec);
  std::vector<Germ> comps;
  comps.reserve(f.components().size());
  for (const auto &c : f.components())
    comps.push_back(ev(c));
  return GermElt::from_components(std::move(comps));
}

GermElt germ_generator_holonomy(int generator, const PeriodSpec &spec) {
  std::vector<Germ> comps;
  for (int j = 1; j <= spec.truncation(); ++j)
    comps.push_back(spec.at(generator, j));
  return GermElt::from_components(std::move(comps));
}

GermElt germ_holonomy(const Word &w, const PeriodSpec &spec) {
  return fold_word<Germ>(w, spec.truncation(),
                         [&spec](int g) { return germ_generator_holonomy(g, spec); });
}

const TableCell &MelnikovTable::cell(int order, int level) const {
  if (order < 1 || order > max_order || level < 1 || level > depth)
    throw std::out_of_range("table cell (" + std::to_string(order) + ", " +
                            std::to_string(level) + ") out of range");
  return cells[static_cast<std::size_t>((order - 1) * depth + (level - 1))];
}

MelnikovTable melnikov_table(const PeriodSpec &spec, const OrbitSpec &orbit, int max_order,
                             UniversalHolonomy *engine) {
  if (max_order < 1 || max_order > spec.truncation())
    throw std::invalid_argument("table order must lie in 1.." +
                                std::to_string(spec.truncation()));
  UniversalHolonomy local(spec.truncation());
  UniversalHolonomy &eng = engine ? *engine : local;
  if (eng.truncation() < max_order)
    throw std::invalid_argument("holonomy engine truncation below table order");

  MelnikovTable table{max_order, orbit.depth(), spec.truncation(), {}};
  Evaluator ev(spec);
  for (int j = 1; j <= max_order; ++j) {
    for (int i = 1; i <= orbit.depth(); ++i) {
      TableCell cell{j, i, {}, true, true};
      for (const auto &g : orbit.level(i)) {
        Germ value = ev(eng.of_expr(g).component(j));
        ZeroVerdict verdict = germ_is_zero(value);
        cell.vanishes = cell.vanishes && verdict.vanishes();
        cell.entries.push_back({j, i, g.to_string(), std::move(value), verdict});
      }
      table.cells.push_back(std::move(cell));
    }
  }
  for (auto &cell : table.cells) {
    int d = cell.order - cell.level;
    for (const auto &other : table.cells)
      if (other.order - other.level < d && !other.vanishes)
        cell.well_defined = false;
  }
  return table;
}

std::string MelnikovTable::to_text() const {
  std::ostringstream os;
  os << "Melnikov table (K=" << truncation << ", rows j=1.." << max_order
     << ", columns O_1..O_" << depth << ")\n";
  for (int j = 1; j <= max_order; ++j) {
    os << "M" << j << ":";
    for (int i = 1; i <= depth; ++i) {
      const auto &c = cell(j, i);
      std::string mark = c.vanishes ? "0" : "*";
      if (!c.well_defined)
        mark += "?";
      os << " " << std::setw(3) << mark;
    }
    os << "\n";
  }
  os << "(* nonzero, 0 vanishing, ? not well defined)\n";
  return os.str();
}

std::string MelnikovTable::to_rows() const {
  std::ostringstream os;
  for (const auto &c : cells)
    for (const auto &e : c.entries) {
      os << "(" << e.order << ", " << e.level << ", " << e.expr << ", " << e.verdict.to_string()
         << ")";
      if (!e.verdict.vanishes())
        os << " = " << e.value.to_string();
      if (!c.well_defined)
        os << " [not well defined]";
      os << "\n";
    }
  return os.str();
}

OrbitLengthResult orbit_length(int order, const PeriodSpec &spec, const OrbitSpec &orbit,
                               UniversalHolonomy *engine) {
  MelnikovTable table = melnikov_table(spec, orbit, order, engine);
  OrbitLengthResult result{0, std::nullopt, spec.truncation()};
  for (int i = orbit.depth(); i >= 1; --i) {
    const auto &c = table.cell(order, i);
    if (!c.vanishes) {
      result.length = i;
      break;
    }
    for (const auto &e : c.entries)
      if (e.verdict.kind == ZeroKind::ZeroToPrecision)
        result.precision = std::min(result.precision.value_or(e.verdict.precision),
                                    e.verdict.precision);
  }
  return result;
}

std::string JetWitness::to_string() const {
  std::ostringstream os;
  os << "witness (trial " << trial << "): value at 0 = " << value_at_zero.to_string() << "\n";
  for (const auto &[key, xs] : values) {
    os << "  " << variable_name(key.first, key.second) << ":";
    for (std::size_t a = 0; a < xs.size(); ++a)
      os << " x" << a << "=" << rational_to_string(xs[a]);
    os << "\n";
  }
  return os.str();
}

std::optional<JetWitness> random_jet_witness(const std::vector<DiffPoly> &summands,
                                             int trials, std::uint64_t seed) {
  std::map<std::pair<int, int>, int> needed; // (generator, order) -> max derivative
  int max_generator = 0, max_order = 0;
  bool all_zero = true;
  for (const auto &p : summands) {
    all_zero = all_zero && p.is_zero();
    for (const auto &v : p.variables()) {
      auto &slot = needed[{v.generator, v.order}];
      slot = std::max(slot, v.derivative);
      max_generator = std::max(max_generator, v.generator);
      max_order = std::max(max_order, v.order);
    }
  }
  if (all_zero || trials <= 0)
    return std::nullopt;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> draw(-9, 9);
  for (int trial = 1; trial <= trials; ++trial) {
    PeriodSpec spec(std::max(max_generator, 1), std::max(max_order, 1));
    JetWitness w;
    w.trial = trial;
    for (const auto &[key, alpha] : needed) {
      std::vector<Rational> xs;
      std::vector<Scalar> coeffs;
      Rational fact = 1;
      for (int a = 0; a <= alpha; ++a) {
        if (a > 0)
          fact *= a;
        Rational x = draw(rng);
        xs.push_back(x);
        coeffs.emplace_back(Rational(x / fact));
      }
      spec.assign(key.first, key.second, Germ::jet(std::move(coeffs), alpha));
      w.values.emplace(key, std::move(xs));
    }
    spec.fill_zero();
    Scalar value;
    for (const auto &p : summands)
      value += evaluate_poly(p, spec).at_zero();
    if (!value.is_zero()) {
      w.value_at_zero = value;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<JetWitness> random_jet_witness(const DiffPoly &p, int trials, std::uint64_t seed) {
  return random_jet_witness(std::vector<DiffPoly>{p}, trials, seed);
}

} // namespace holo
